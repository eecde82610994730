#include "gq/abelian.hpp"
#include "gq/error.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace gq;

namespace {

GroupElement el(std::vector<int> v) { return GroupElement{std::move(v)}; }

// Every group of order <= limit, for exhaustive properties.
std::vector<AbelianGroup> groups_up_to(int limit) {
    std::vector<AbelianGroup> out;
    for (int n = 1; n <= limit; ++n)
        for (auto& g : abelian_groups_of_order(n)) out.push_back(g);
    return out;
}

// Oracle: all generator-image tuples with no pruning, kept when bijective.
std::size_t brute_force_aut_count(const AbelianGroup& a) {
    const int k = a.rank();
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    std::size_t count = 0;
    while (true) {
        std::vector<GroupElement> images;
        for (int i : pick) images.push_back(a.element_at(i));
        try {
            if (Homomorphism(a, a, images).is_bijective()) ++count;
        } catch (const DomainError&) {
        }
        int i = 0;
        for (; i < k; ++i) {
            if (++pick[static_cast<std::size_t>(i)] < a.order()) break;
            pick[static_cast<std::size_t>(i)] = 0;
        }
        if (i == k) break;
    }
    return count;
}

int euler_phi(int n) {
    int c = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

int partitions(int m, int max_part) {
    if (m == 0) return 1;
    int c = 0;
    for (int p = std::min(m, max_part); p >= 1; --p) c += partitions(m - p, p);
    return c;
}

} // namespace

TEST(AbelianArithmetic, CoordinatewiseAddition) {
    AbelianGroup a({2, 4});
    EXPECT_EQ(a.add(el({1, 3}), el({1, 2})), el({0, 1}));
    EXPECT_EQ(a.neg(el({1, 1})), el({1, 3}));
    EXPECT_EQ(a.sub(el({0, 1}), el({1, 2})), el({1, 3}));
}

TEST(AbelianArithmetic, ElementOrders) {
    AbelianGroup a({2, 4});
    EXPECT_EQ(a.element_order(a.zero()), 1);
    EXPECT_EQ(a.element_order(el({1, 2})), 2);
    EXPECT_EQ(a.element_order(el({1, 1})), 4);
    for (const auto& g : groups_up_to(32))
        for (const auto& x : g.elements()) {
            int k = 1;
            GroupElement acc = x;
            while (acc != g.zero()) {
                acc = g.add(acc, x);
                ++k;
            }
            EXPECT_EQ(g.element_order(x), k);
            EXPECT_EQ(g.order() % k, 0) << g.to_string() << " " << x.to_string();
        }
}

TEST(AbelianArithmetic, RejectsMalformedElements) {
    AbelianGroup a({2, 4});
    EXPECT_THROW(a.add(el({2, 0}), a.zero()), MalformedError);
    EXPECT_THROW(a.element_order(el({0})), MalformedError);
    EXPECT_THROW(a.element_at(8), MalformedError);
    EXPECT_THROW(AbelianGroup({4, 2}), DomainError);
    EXPECT_THROW(AbelianGroup({1}), DomainError);
}

TEST(AbelianArithmetic, IndexingIsLexicographic) {
    AbelianGroup a({2, 4});
    EXPECT_EQ(a.index_of(el({0, 3})), 3);
    EXPECT_EQ(a.index_of(el({1, 0})), 4);
    for (int i = 0; i < a.order(); ++i) EXPECT_EQ(a.index_of(a.element_at(i)), i);
    const auto elems = a.elements();
    EXPECT_TRUE(std::is_sorted(elems.begin(), elems.end()));
}

TEST(AbelianArithmetic, TrivialGroup) {
    AbelianGroup t;
    EXPECT_EQ(t.order(), 1);
    EXPECT_EQ(t.to_string(), "Z1");
    EXPECT_EQ(t.zero().to_string(), "[]");
    EXPECT_EQ(automorphisms(t).size(), 1u);
}

TEST(GroupsOfOrder, SmallCases) {
    auto factors = [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& g : abelian_groups_of_order(n)) out.push_back(g.factors());
        return out;
    };
    EXPECT_EQ(factors(1), (std::vector<std::vector<int>>{{}}));
    EXPECT_EQ(factors(4), (std::vector<std::vector<int>>{{4}, {2, 2}}));
    EXPECT_EQ(factors(8), (std::vector<std::vector<int>>{{8}, {2, 4}, {2, 2, 2}}));
    EXPECT_THROW(abelian_groups_of_order(0), DomainError);
}

TEST(GroupsOfOrder, CountIsProductOfPartitionNumbers) {
    for (int n = 1; n <= 64; ++n) {
        int expected = 1;
        for (auto [p, e] : factorize(n)) expected *= partitions(e, e);
        const auto groups = abelian_groups_of_order(n);
        EXPECT_EQ(static_cast<int>(groups.size()), expected) << n;
        std::set<std::vector<int>> distinct;
        for (const auto& g : groups) {
            EXPECT_EQ(g.order(), n);
            distinct.insert(g.factors());
        }
        EXPECT_EQ(distinct.size(), groups.size());
    }
}

TEST(Automorphisms, SmallExamples) {
    EXPECT_EQ(automorphisms(AbelianGroup::cyclic(5)).size(), 4u);
    EXPECT_EQ(automorphisms(AbelianGroup::cyclic(2)).size(), 1u);
    EXPECT_EQ(automorphisms(AbelianGroup({2, 2})).size(), 6u);
    EXPECT_EQ(automorphisms(AbelianGroup({2, 4})).size(), 8u);
}

TEST(Automorphisms, CyclicCountIsTotient) {
    for (int n = 2; n <= 30; ++n) EXPECT_EQ(automorphisms(AbelianGroup::cyclic(n)).size(), static_cast<std::size_t>(euler_phi(n)));
}

TEST(Automorphisms, EnumerationMatchesOracleAndFormula) {
    for (const auto& g : groups_up_to(16)) {
        const auto all = automorphisms(g);
        EXPECT_EQ(all.size(), brute_force_aut_count(g)) << g.to_string();
        EXPECT_EQ(all.size(), automorphism_count(g)) << g.to_string();
        std::set<std::vector<int>> tables;
        for (const auto& h : all) {
            ASSERT_TRUE(h.is_bijective());
            tables.insert(h.value_table());
        }
        EXPECT_EQ(tables.size(), all.size());
    }
    for (const auto& g : groups_up_to(32)) {
        std::uint64_t n = 0;
        for_each_automorphism(g, {}, [&](const std::vector<int>&) {
            ++n;
            return true;
        });
        EXPECT_EQ(n, automorphism_count(g)) << g.to_string();
    }
    EXPECT_EQ(automorphism_count(AbelianGroup({2, 2, 2, 2})), 20160u);
}

TEST(Automorphisms, ValueTablesAreHomomorphisms) {
    for (const auto& g : groups_up_to(12)) {
        const auto add = g.addition_table();
        for_each_automorphism(g, {}, [&](const std::vector<int>& t) {
            for (int x = 0; x < g.order(); ++x)
                for (int y = 0; y < g.order(); ++y)
                    EXPECT_EQ(t[static_cast<std::size_t>(add[static_cast<std::size_t>(x * g.order() + y)])],
                              add[static_cast<std::size_t>(t[static_cast<std::size_t>(x)] * g.order() +
                                                           t[static_cast<std::size_t>(y)])]);
            return true;
        });
    }
}

TEST(Automorphisms, ResourceLimits) {
    EXPECT_THROW(automorphisms(AbelianGroup({2, 2, 2, 2, 2, 2, 2})), ResourceLimitError);
    BruteForceLimits tight;
    tight.max_automorphisms = 100;
    EXPECT_THROW(automorphisms(AbelianGroup({2, 2, 2, 2}), tight), ResourceLimitError);
    try {
        automorphisms(AbelianGroup::cyclic(128));
        FAIL();
    } catch (const ResourceLimitError& e) {
        EXPECT_NE(std::string(e.what()).find("64"), std::string::npos);
    }
}

TEST(Homomorphisms, CompositionAndIdentity) {
    AbelianGroup z8 = AbelianGroup::cyclic(8), z4 = AbelianGroup::cyclic(4);
    Homomorphism f(z8, z4, {el({1})});
    Homomorphism g = Homomorphism::multiplication(z4, 3);
    const auto gf = g.after(f);
    for (const auto& x : z8.elements()) EXPECT_EQ(gf(x), g(f(x)));
    EXPECT_EQ(Homomorphism::identity(z4).after(f), f);
    EXPECT_THROW(Homomorphism(z4, z8, {el({1})}), DomainError);
}

TEST(PointedOrbits, Examples) {
    EXPECT_EQ(pointed_orbit_reps(AbelianGroup::cyclic(4)), (std::vector<GroupElement>{el({0}), el({1}), el({2})}));
    EXPECT_EQ(pointed_orbit_reps(AbelianGroup({2, 2})), (std::vector<GroupElement>{el({0, 0}), el({0, 1})}));
}

// Z2xZ4 has four orbits: 0, [0,2], the order-2 elements outside 2A, and the order-4 elements.
TEST(PointedOrbits, Z2xZ4) {
    AbelianGroup a({2, 4});
    const auto reps = pointed_orbit_reps(a);
    EXPECT_EQ(reps, (std::vector<GroupElement>{el({0, 0}), el({0, 1}), el({0, 2}), el({1, 0})}));
    const auto labels = automorphism_orbit_labels(a);
    EXPECT_NE(labels[static_cast<std::size_t>(a.index_of(el({1, 0})))],
              labels[static_cast<std::size_t>(a.index_of(el({0, 2})))]);
}

TEST(PointedOrbits, CyclicRepresentativesAreDivisors) {
    for (int n = 1; n <= 30; ++n) {
        const auto g = AbelianGroup::cyclic(n);
        std::vector<GroupElement> expected;
        if (n > 1) {
            expected.push_back(el({0}));
            for (int d = 1; d < n; ++d)
                if (n % d == 0) expected.push_back(el({d}));
        } else {
            expected.push_back(g.zero());
        }
        EXPECT_EQ(pointed_orbit_reps(g), expected) << n;
    }
}

TEST(PointedOrbits, LabelsFormThePartitionIntoOrbits) {
    for (const auto& g : groups_up_to(32)) {
        const auto labels = automorphism_orbit_labels(g);
        // Oracle: closure of each element under all automorphisms.
        std::vector<std::set<int>> orbit(static_cast<std::size_t>(g.order()));
        for_each_automorphism(g, {}, [&](const std::vector<int>& t) {
            for (int x = 0; x < g.order(); ++x) orbit[static_cast<std::size_t>(x)].insert(t[static_cast<std::size_t>(x)]);
            return true;
        });
        for (int x = 0; x < g.order(); ++x) {
            EXPECT_EQ(labels[static_cast<std::size_t>(x)], *orbit[static_cast<std::size_t>(x)].begin());
            for (int y : orbit[static_cast<std::size_t>(x)])
                EXPECT_EQ(labels[static_cast<std::size_t>(y)], labels[static_cast<std::size_t>(x)]);
        }
    }
}

TEST(PointedIsomorphism, Examples) {
    const auto z6 = AbelianGroup::cyclic(6);
    const auto w = pointed_isomorphism({z6, el({4})}, {z6, el({2})});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ((*w)(el({4})), el({2}));

    AbelianGroup a({2, 4});
    EXPECT_FALSE(pointed_isomorphic({a, el({1, 0})}, {a, el({0, 2})}));
    const auto id = pointed_isomorphism({a, a.zero()}, {a, a.zero()});
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ(*id, Homomorphism::identity(a));
    EXPECT_FALSE(pointed_isomorphic({AbelianGroup::cyclic(4), el({0})}, {a, a.zero()}));
}

TEST(PointedIsomorphism, IsAnEquivalenceRelation) {
    for (const auto& g : groups_up_to(16)) {
        const int n = g.order();
        std::vector<std::vector<char>> rel(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n)));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const auto w = pointed_isomorphism({g, g.element_at(x)}, {g, g.element_at(y)});
                rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = w.has_value();
                if (w) {
                    EXPECT_EQ((*w)(g.element_at(x)), g.element_at(y));
                }
            }
        for (int x = 0; x < n; ++x) {
            EXPECT_TRUE(rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)]);
            for (int y = 0; y < n; ++y) {
                EXPECT_EQ(rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)],
                          rel[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]);
                for (int z = 0; z < n; ++z)
                    if (rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] &&
                        rel[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)]) {
                        EXPECT_TRUE(rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)]);
                    }
            }
        }
    }
}

TEST(Parsing, GroupAndElementLiterals) {
    EXPECT_EQ(parse_group("Z2xZ4"), AbelianGroup({2, 4}));
    EXPECT_EQ(parse_group("Z4xZ2"), AbelianGroup({2, 4}));
    EXPECT_EQ(parse_group("Z2xZ3"), AbelianGroup({6}));
    EXPECT_EQ(parse_group("Z1"), AbelianGroup());
    EXPECT_EQ(parse_group("Z2xZ2xZ2"), AbelianGroup({2, 2, 2}));
    EXPECT_EQ(parse_residues("[1, 2]"), (std::vector<int>{1, 2}));
    EXPECT_EQ(parse_residues("[]"), std::vector<int>{});
    EXPECT_THROW(parse_group("Z0"), ParseError);
    EXPECT_THROW(parse_group("Q4"), ParseError);
    EXPECT_THROW(parse_residues("[1,a]"), ParseError);
    EXPECT_THROW(parse_residues("1,2"), ParseError);
    EXPECT_THROW(parse_element("Z2xZ4", "[2,0]"), MalformedError);
}

TEST(Parsing, CanonicalIsomorphismIsAGroupIsomorphism) {
    EXPECT_EQ(parse_element("Z2xZ3", "[1,0]"), el({3}));
    EXPECT_EQ(parse_element("Z2xZ3", "[0,1]"), el({4}));
    EXPECT_EQ(parse_element("Z2xZ3", "[1,1]"), el({1}));
    for (const auto& moduli : std::vector<std::vector<int>>{{2, 3}, {4, 2}, {6, 4}, {3, 3, 2}, {12}, {2, 4}, {10, 6}}) {
        CanonicalIsomorphism iso(moduli);
        const AbelianGroup& t = iso.target();
        int order = 1;
        for (int m : moduli) order *= m;
        ASSERT_EQ(t.order(), order);
        // all residue vectors
        std::vector<std::vector<int>> all{{}};
        for (int m : moduli) {
            std::vector<std::vector<int>> next;
            for (const auto& v : all)
                for (int r = 0; r < m; ++r) {
                    auto w = v;
                    w.push_back(r);
                    next.push_back(w);
                }
            all = next;
        }
        std::set<GroupElement> images;
        for (const auto& u : all) {
            images.insert(iso(u));
            for (const auto& v : all) {
                std::vector<int> s(u.size());
                for (std::size_t i = 0; i < u.size(); ++i) s[i] = (u[i] + v[i]) % moduli[i];
                EXPECT_EQ(iso(s), t.add(iso(u), iso(v)));
            }
        }
        EXPECT_EQ(static_cast<int>(images.size()), order);
    }
    // canonical input is left alone
    CanonicalIsomorphism same({2, 4});
    EXPECT_EQ(same({1, 3}), el({1, 3}));
}
