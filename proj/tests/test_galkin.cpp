#include "gq/error.hpp"
#include "gq/galkin.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace gq;

namespace {

GroupElement el(std::vector<int> v) { return GroupElement{std::move(v)}; }

std::vector<AbelianGroup> groups_up_to(int limit) {
    std::vector<AbelianGroup> out;
    for (int n = 1; n <= limit; ++n)
        for (auto& g : abelian_groups_of_order(n)) out.push_back(g);
    return out;
}

std::vector<GalkinSpec> all_specs(int limit) {
    std::vector<GalkinSpec> out;
    for (const auto& g : groups_up_to(limit))
        for (const auto& c1 : g.elements())
            for (const auto& c2 : g.elements()) out.push_back({g, c1, c2});
    return out;
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Oracle: the defining formula evaluated directly on pairs.
std::pair<int, GroupElement> formula(const GalkinSpec& s, int x, const GroupElement& a, int y, const GroupElement& b) {
    const auto& g = s.group;
    const int d = mod3(x - y);
    const long long mu = d == 0 ? 2 : -1;
    GroupElement tau = d == 0 ? g.zero() : (d == 1 ? s.c1 : s.c2);
    return {mod3(2 * y - x), g.add(g.add(g.neg(a), g.scale(mu, b)), tau)};
}

bool self_distributive(const std::vector<std::vector<int>>& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return false;
    return true;
}

} // namespace

TEST(Build, MatchesTheDefiningFormula) {
    for (const auto& s : all_specs(6)) {
        const auto t = build(s);
        const auto& g = s.group;
        ASSERT_EQ(t.quandle.order(), 3 * g.order());
        for (int i = 0; i < t.quandle.order(); ++i)
            for (int j = 0; j < t.quandle.order(); ++j) {
                const auto [x, a] = galkin_element(g, i);
                const auto [y, b] = galkin_element(g, j);
                const auto [z, c] = formula(s, x, a, y, b);
                EXPECT_EQ(t.quandle.op(i, j), galkin_index(g, z, c));
            }
    }
}

TEST(Build, SmallExamples) {
    const auto r3 = build(parse_galkin("G(Z1,[])"));
    EXPECT_EQ(r3.quandle, dihedral(3));
    EXPECT_EQ(r3.legend, (std::vector<std::string>{"(0,[])", "(1,[])", "(2,[])"}));

    const auto g = build(parse_galkin("G(Z2,1)"));
    EXPECT_EQ(g.legend[3], "(1,[1])");
    EXPECT_EQ(galkin_index(AbelianGroup::cyclic(2), 1, el({1})), 3);
    // (0,0)*(1,0) = (2, tau(2)) = (2, c2)
    EXPECT_EQ(g.quandle.op(0, 2), galkin_index(AbelianGroup::cyclic(2), 2, el({1})));
    EXPECT_EQ(galkin_label(AbelianGroup({2, 4}), 13), "(1,[1,1])");
}

TEST(Build, SatisfiesAxiomsExhaustively) {
    for (const auto& s : all_specs(8)) EXPECT_TRUE(check_axioms(galkin_rows(s)).ok()) << s.to_string();
}

TEST(Build, ResourceLimit) {
    BruteForceLimits limits;
    limits.max_group_order = 8;
    EXPECT_THROW(build(GalkinSpec::pointed(AbelianGroup::cyclic(9), el({0})), limits), ResourceLimitError);
    EXPECT_THROW(build(GalkinSpec{AbelianGroup::cyclic(4), el({4}), el({0})}), MalformedError);
}

TEST(Normalize, EtaIsAnIsomorphism) {
    for (const auto& s : all_specs(12)) {
        const auto n = normalize(s);
        EXPECT_EQ(n.spec.c1, s.group.zero());
        EXPECT_EQ(n.spec.c2, s.group.sub(s.c2, s.c1));
        EXPECT_TRUE(is_homomorphism(build(s).quandle, build(n.spec).quandle, n.eta)) << s.to_string();
        std::set<int> image(n.eta.begin(), n.eta.end());
        EXPECT_EQ(image.size(), n.eta.size());
    }
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(parse_galkin("G(Z2xZ4,[1,0],[1,2])")).spec, parse_galkin("G(Z2xZ4,[0,2])"));
    EXPECT_EQ(normalize(parse_galkin("G(Z5,3,1)")).spec, parse_galkin("G(Z5,3)"));
    const auto n = normalize(parse_galkin("G(Z8,[2])"));
    EXPECT_EQ(n.spec, parse_galkin("G(Z8,[2])"));
    EXPECT_EQ(n.eta, [] {
        std::vector<int> id(24);
        for (int i = 0; i < 24; ++i) id[static_cast<std::size_t>(i)] = i;
        return id;
    }());
}

TEST(Isomorphic, Examples) {
    EXPECT_TRUE(galkin_isomorphic(parse_galkin("G(Z6,2)"), parse_galkin("G(Z6,4)")));
    EXPECT_FALSE(galkin_isomorphic(parse_galkin("G(Z2xZ4,[1,0])"), parse_galkin("G(Z2xZ4,[0,2])")));
    EXPECT_TRUE(galkin_isomorphic(parse_galkin("G(Z2xZ4,[1,0],[1,2])"), parse_galkin("G(Z2xZ4,[0,2])")));
    EXPECT_FALSE(galkin_isomorphic(parse_galkin("G(Z4,0)"), parse_galkin("G(Z2xZ2,[0,0])")));
    EXPECT_TRUE(galkin_isomorphic(parse_galkin("G(Z2xZ3,[1,1])"), parse_galkin("G(Z6,1)")));
    EXPECT_FALSE(galkin_isomorphic(parse_galkin("G(Z9,0,3)"), parse_galkin("G(Z3xZ3,[0,0],[1,0])")));
}

TEST(Classify, OrderTwelve) {
    std::vector<std::string> names;
    for (const auto& s : classify_order(12)) names.push_back(s.to_string());
    EXPECT_EQ(names, (std::vector<std::string>{"G(Z4,[0])", "G(Z4,[1])", "G(Z4,[2])", "G(Z2xZ2,[0,0])",
                                               "G(Z2xZ2,[0,1])"}));
}

TEST(Classify, CountsAndErrors) {
    EXPECT_EQ(classify_order(3).size(), 1u);
    EXPECT_EQ(classify_order(24).size(), 10u);
    EXPECT_EQ(classify_order(48).size(), 20u);
    EXPECT_THROW(classify_order(10), DomainError);
    EXPECT_THROW(classify_order(0), DomainError);
}

TEST(Classify, RepresentativesArePairwiseNonIsomorphic) {
    for (int m : {6, 12, 18, 24}) {
        const auto reps = classify_order(m);
        std::vector<Quandle> tables;
        for (const auto& s : reps) tables.push_back(build(s).quandle);
        for (std::size_t i = 0; i < tables.size(); ++i)
            for (std::size_t j = i + 1; j < tables.size(); ++j) EXPECT_FALSE(isomorphic(tables[i], tables[j]));
    }
}

TEST(Properties, PredictedMatchComputed) {
    for (const auto& g : groups_up_to(8))
        for (const auto& c : g.elements()) {
            const auto s = GalkinSpec::pointed(g, c);
            EXPECT_EQ(predicted_properties(s), property_report(build(s).quandle)) << s.to_string();
        }
    for (const auto& s : all_specs(4)) EXPECT_EQ(predicted_properties(s), property_report(build(s).quandle));
}

TEST(Properties, DualSwapsTheConstants) {
    for (const auto& s : all_specs(12)) {
        const GalkinSpec swapped{s.group, s.c2, s.c1};
        EXPECT_EQ(dual(build(s).quandle), build(swapped).quandle) << s.to_string();
    }
}

TEST(Properties, DualIsomorphismByNegatingTheSlice) {
    for (const auto& s : all_specs(12)) {
        const auto& g = s.group;
        std::vector<int> f(static_cast<std::size_t>(3 * g.order()));
        for (int i = 0; i < 3 * g.order(); ++i) {
            const auto [x, a] = galkin_element(g, i);
            f[static_cast<std::size_t>(i)] = galkin_index(g, mod3(-x), a);
        }
        EXPECT_TRUE(is_homomorphism(build(s).quandle, build(GalkinSpec{g, s.c2, s.c1}).quandle, f)) << s.to_string();
    }
}

// Each slice {x} x A is a subquandle isomorphic to the product of R_{n_i} over the invariant factors.
TEST(Properties, SlicesAreProductsOfDihedralQuandles) {
    for (const auto& g : groups_up_to(16)) {
        Quandle dihedral_product = trivial_quandle(1);
        for (int n : g.factors()) dihedral_product = product(dihedral_product, dihedral(n));
        for (const auto& c : g.elements()) {
            const auto q = build(GalkinSpec::pointed(g, c)).quandle;
            for (int x = 0; x < 3; ++x) {
                for (int i = 0; i < g.order(); ++i)
                    for (int j = 0; j < g.order(); ++j)
                        ASSERT_EQ(q.op(x * g.order() + i, x * g.order() + j), x * g.order() + dihedral_product.op(i, j))
                            << g.to_string() << " " << c.to_string();
            }
        }
    }
}

TEST(Functor, InducedHomomorphisms) {
    const auto z4 = AbelianGroup::cyclic(4), z2 = AbelianGroup::cyclic(2);
    const auto id = induced_hom(Homomorphism::identity(z4), el({1}), el({1}));
    for (std::size_t i = 0; i < id.size(); ++i) EXPECT_EQ(id[i], static_cast<int>(i));

    const Homomorphism reduce(z4, z2, {el({1})});
    const auto f = induced_hom(reduce, el({3}), el({1}));
    EXPECT_TRUE(is_homomorphism(build(parse_galkin("G(Z4,3)")).quandle, build(parse_galkin("G(Z2,1)")).quandle, f));

    const Homomorphism zero(z4, AbelianGroup(), {GroupElement{}});
    const auto p = induced_hom(zero, el({2}), GroupElement{});
    EXPECT_TRUE(is_homomorphism(build(parse_galkin("G(Z4,2)")).quandle, dihedral(3), p));

    EXPECT_THROW(induced_hom(reduce, el({2}), el({1})), DomainError);
}

TEST(Functor, CompositionLaw) {
    const auto z8 = AbelianGroup::cyclic(8), z4 = AbelianGroup::cyclic(4), z2 = AbelianGroup::cyclic(2);
    const Homomorphism f(z8, z4, {el({1})});
    const Homomorphism g(z4, z2, {el({1})});
    const auto c = el({3});
    const auto fc = f(c), gfc = g(fc);
    const auto ff = induced_hom(f, c, fc);
    const auto fg = induced_hom(g, fc, gfc);
    const auto fgf = induced_hom(g.after(f), c, gfc);
    for (std::size_t i = 0; i < ff.size(); ++i) EXPECT_EQ(fgf[i], fg[static_cast<std::size_t>(ff[i])]);
}

TEST(Symmetric, InvolutionIsGoodAndNonTrivial) {
    for (const auto& g : groups_up_to(8))
        for (const auto& c : g.elements()) {
            if (g.element_order(c) != 2) {
                EXPECT_THROW(symmetric_involution(g, c), DomainError);
                continue;
            }
            const auto rho = symmetric_involution(g, c);
            const auto q = build(GalkinSpec::pointed(g, c)).quandle;
            EXPECT_TRUE(is_good_involution(q, rho));
            bool moves = false;
            for (std::size_t i = 0; i < rho.size(); ++i) moves = moves || rho[i] != static_cast<int>(i);
            EXPECT_TRUE(moves);
        }
    EXPECT_EQ(symmetric_involution(AbelianGroup::cyclic(2), el({1})), (std::vector<int>{1, 0, 3, 2, 5, 4}));
}

TEST(MuTau, Examples) {
    const auto z2 = AbelianGroup::cyclic(2);
    MuTau canonical;
    canonical.tau = {z2.zero(), z2.zero(), z2.zero()};
    EXPECT_TRUE(mu_tau_validate(z2, canonical));

    MuTau broken = canonical;
    broken.mu = {2, 0, 0};
    EXPECT_FALSE(mu_tau_validate(z2, broken));

    MuTau constant = canonical;
    constant.mu = {2, 2, 2};
    EXPECT_TRUE(mu_tau_validate(z2, constant));
    EXPECT_TRUE(is_medial(Quandle::from_rows(mu_tau_rows(z2, constant))));

    const auto z5 = AbelianGroup::cyclic(5);
    MuTau galkin;
    galkin.tau = {z5.zero(), el({1}), el({3})};
    EXPECT_TRUE(mu_tau_validate(z5, galkin));
    EXPECT_EQ(mu_tau_rows(z5, galkin), galkin_rows(parse_galkin("G(Z5,1,3)")));
}

// Module-mode identities are exactly self-distributivity of the induced table.
TEST(MuTau, ModuleModeMatchesSelfDistributivity) {
    for (const auto& g : groups_up_to(4)) {
        const auto elems = g.elements();
        for (long long m0 = -2; m0 <= 3; ++m0)
            for (long long m1 = -2; m1 <= 2; ++m1)
                for (long long m2 = -2; m2 <= 2; ++m2)
                    for (const auto& t1 : elems)
                        for (const auto& t2 : elems) {
                            MuTau c;
                            c.mu = {m0, m1, m2};
                            c.tau = {g.zero(), t1, t2};
                            const bool module = mu_tau_validate(g, c, MuTauMode::Module);
                            EXPECT_EQ(module, self_distributive(mu_tau_rows(g, c)))
                                << g.to_string() << " mu=" << m0 << "," << m1 << "," << m2;
                            if (mu_tau_validate(g, c, MuTauMode::Integer)) {
                                EXPECT_TRUE(module);
                            }
                        }
    }
}

TEST(MuSearch, OnlyTheConstantSolution) {
    EXPECT_EQ(mu_search(5, 10), (std::vector<std::vector<int>>{{2, 2, 2, 2, 2}}));
    EXPECT_EQ(mu_search(7, 10), (std::vector<std::vector<int>>{{2, 2, 2, 2, 2, 2, 2}}));
}

// Oracle without the symmetry restriction; x = 0 in the identity forces symmetry anyway.
TEST(MuSearch, MatchesUnrestrictedSearch) {
    for (auto [p, bound] : {std::pair{5, 6}, std::pair{7, 3}}) {
        std::vector<std::vector<int>> found;
        std::vector<int> mu(static_cast<std::size_t>(p), -bound);
        mu[0] = 2;
        while (true) {
            bool ok = true;
            for (int x = 0; x < p && ok; ++x)
                for (int y = 0; y < p && ok; ++y)
                    ok = mu[static_cast<std::size_t>((x + y) % p)] + mu[static_cast<std::size_t>((x - y + p) % p)] ==
                         mu[static_cast<std::size_t>(x)] * mu[static_cast<std::size_t>(y)];
            if (ok) found.push_back(mu);
            int i = 1;
            for (; i < p; ++i) {
                if (++mu[static_cast<std::size_t>(i)] <= bound) break;
                mu[static_cast<std::size_t>(i)] = -bound;
            }
            if (i == p) break;
        }
        EXPECT_EQ(mu_search(p, bound), found) << p;
    }
}

TEST(MuSearch, DomainErrors) {
    EXPECT_THROW(mu_search(3, 10), DomainError);
    EXPECT_THROW(mu_search(6, 10), DomainError);
    EXPECT_THROW(mu_search(11, 10), DomainError);
    EXPECT_THROW(mu_search(5, 1), DomainError);
}

TEST(Rig, NamesForUnambiguousClasses) {
    EXPECT_EQ(rig_lookup(parse_galkin("G(Z2,0)")).name, "C[6,1]");
    EXPECT_EQ(rig_lookup(parse_galkin("G(Z2,1)")).name, "C[6,2]");
    EXPECT_EQ(rig_lookup(parse_galkin("G(Z2xZ4,[0,0])")).name, "C[24,30]");
    EXPECT_EQ(rig_lookup(parse_galkin("G(Z1,[])")).name, "C[3,1]");
    EXPECT_EQ(rig_lookup(parse_galkin("G(Z8,6)")).name, "C[24,26]");
    EXPECT_EQ(rig_lookup(parse_galkin("G(Z2xZ3,[1,0])")).name, "C[18,4]");
}

TEST(Rig, WithheldAndMissingNames) {
    const auto a = rig_lookup(parse_galkin("G(Z2xZ4,[1,0])"));
    EXPECT_FALSE(a.name.has_value());
    EXPECT_FALSE(a.conflicts.empty());
    const auto b = rig_lookup(parse_galkin("G(Z2xZ4,[0,2])"));
    EXPECT_FALSE(b.name.has_value());
    EXPECT_FALSE(b.conflicts.empty());
    const auto c = rig_lookup(parse_galkin("G(Z2xZ4,[0,1])"));
    EXPECT_FALSE(c.name.has_value());
    EXPECT_TRUE(c.conflicts.empty());
    EXPECT_FALSE(rig_lookup(parse_galkin("G(Z13,0)")).name.has_value());
    EXPECT_EQ(rig_conflicts().size(), 2u);
}

TEST(Rig, ListingIsConsistentWithClassification) {
    std::set<std::string> names;
    for (const auto& e : rig_entries()) {
        EXPECT_TRUE(names.insert(e.name).second) << e.name;
        const int order = 3 * e.literal.group.order();
        EXPECT_NE(e.name.find("C[" + std::to_string(order) + ","), std::string::npos) << e.name;
    }
}

TEST(Parse, AcceptedForms) {
    const auto a = parse_galkin("G(Z2xZ4,[0,0],[1,2])");
    EXPECT_EQ(a.group, AbelianGroup({2, 4}));
    EXPECT_EQ(a.c2, el({1, 2}));
    EXPECT_EQ(a.to_string(), "G(Z2xZ4,[1,2])");
    EXPECT_EQ(parse_galkin("G(Z5,1)"), parse_galkin("G(Z5,[1])"));
    EXPECT_EQ(parse_galkin(" G( Z8 , [2] ) ").to_string(), "G(Z8,[2])");
    EXPECT_EQ(parse_galkin("G(Z5,1,3)").to_string(), "G(Z5,[1],[3])");
    const auto c = parse_galkin("G(Z2xZ3,[1,1])");
    EXPECT_EQ(c.group, AbelianGroup::cyclic(6));
    EXPECT_EQ(c.c2, el({1}));
    EXPECT_EQ(parse_galkin("G(Z1,[])").group.order(), 1);
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_galkin("G(Z5)"), ParseError);
    EXPECT_THROW(parse_galkin("H(Z5,1)"), ParseError);
    EXPECT_THROW(parse_galkin("G(Z2xZ4,1)"), ParseError);
    EXPECT_THROW(parse_galkin("G(Z5,1,2,3)"), ParseError);
    EXPECT_THROW(parse_galkin("G(Z5,[1]"), ParseError);
    EXPECT_THROW(parse_galkin("G(Z5,7)"), MalformedError);
    EXPECT_THROW(parse_galkin("G(Z2xZ4,[2,0])"), MalformedError);
}
