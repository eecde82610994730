#include "gq/galkin.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gq {

namespace {

constexpr std::array<int, 3> kMu{2, -1, -1};

int mod3(int x) { return ((x % 3) + 3) % 3; }

std::string strip(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

// Splits on commas that are not inside brackets.
std::vector<std::string> split_arguments(const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : body) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<int> parse_point(const std::string& text, const std::vector<int>& moduli, const std::string& whole) {
    if (!text.empty() && text.front() == '[') return parse_residues(text);
    if (moduli.size() != 1)
        throw ParseError("element '" + text + "' in '" + whole + "' must be written as a vector [..]");
    auto r = parse_residues("[" + text + "]");
    return r;
}

// Cycle-type prediction for every column of G(A, c).
std::vector<int> predicted_column_type(const AbelianGroup& a, const GroupElement& c) {
    int two_torsion = 0;
    for (const auto& e : a.elements())
        if (a.scale(2, e) == a.zero()) ++two_torsion;
    const int k = a.element_order(c);
    std::vector<int> lengths(static_cast<std::size_t>(two_torsion), 1);
    lengths.insert(lengths.end(), static_cast<std::size_t>((a.order() - two_torsion) / 2), 2);
    lengths.insert(lengths.end(), static_cast<std::size_t>(a.order() / k), 2 * k);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

} // namespace

GalkinSpec GalkinSpec::pointed(AbelianGroup group, GroupElement c) {
    GalkinSpec s{std::move(group), {}, std::move(c)};
    s.c1 = s.group.zero();
    s.validate();
    return s;
}

void GalkinSpec::validate() const {
    group.require(c1);
    group.require(c2);
}

std::string GalkinSpec::to_string() const {
    if (c1 == group.zero()) return "G(" + group.to_string() + "," + c2.to_string() + ")";
    return "G(" + group.to_string() + "," + c1.to_string() + "," + c2.to_string() + ")";
}

GalkinSpec parse_galkin(std::string_view text) {
    const std::string whole = strip(text);
    if (whole.size() < 4 || whole.substr(0, 2) != "G(" || whole.back() != ')')
        throw ParseError("bad Galkin literal '" + std::string(text) + "' (expected e.g. G(Z2xZ4,[0,0],[1,2]))");
    const auto args = split_arguments(whole.substr(2, whole.size() - 3));
    if (args.size() != 2 && args.size() != 3)
        throw ParseError("Galkin literal '" + whole + "' needs a group and one or two elements");
    const auto moduli = parse_group_moduli(args[0]);
    CanonicalIsomorphism iso(moduli);
    std::vector<GroupElement> points;
    for (std::size_t i = 1; i < args.size(); ++i) points.push_back(iso(parse_point(args[i], moduli, whole)));
    if (points.size() == 1) return GalkinSpec::pointed(iso.target(), points[0]);
    GalkinSpec s{iso.target(), points[0], points[1]};
    s.validate();
    return s;
}

int galkin_index(const AbelianGroup& a, int x, const GroupElement& elem) {
    return mod3(x) * a.order() + a.index_of(elem);
}

std::pair<int, GroupElement> galkin_element(const AbelianGroup& a, int index) {
    if (index < 0 || index >= 3 * a.order())
        throw MalformedError("Galkin element index " + std::to_string(index) + " out of range");
    return {index / a.order(), a.element_at(index % a.order())};
}

std::string galkin_label(const AbelianGroup& a, int index) {
    auto [x, elem] = galkin_element(a, index);
    return "(" + std::to_string(x) + "," + elem.to_string() + ")";
}

std::vector<std::vector<int>> mu_tau_rows(const AbelianGroup& a, const MuTau& candidate) {
    for (const auto& t : candidate.tau) a.require(t);
    const int n = a.order();
    const auto add = a.addition_table();
    const auto neg = a.negation_table();
    // mul[d][b] = mu(d) b, tau_index[d] = index of tau(d)
    std::array<std::vector<int>, 3> mul;
    std::array<int, 3> tau_index{};
    for (int d = 0; d < 3; ++d) {
        mul[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(n));
        for (int b = 0; b < n; ++b)
            mul[static_cast<std::size_t>(d)][static_cast<std::size_t>(b)] =
                a.index_of(a.scale(candidate.mu[static_cast<std::size_t>(d)], a.element_at(b)));
        tau_index[static_cast<std::size_t>(d)] = a.index_of(candidate.tau[static_cast<std::size_t>(d)]);
    }
    const int size = 3 * n;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
    for (int x = 0; x < 3; ++x)
        for (int ai = 0; ai < n; ++ai)
            for (int y = 0; y < 3; ++y) {
                const int d = mod3(x - y);
                const int z = mod3(2 * y - x);
                for (int bi = 0; bi < n; ++bi) {
                    int v = add[static_cast<std::size_t>(neg[static_cast<std::size_t>(ai)]) * n +
                                mul[static_cast<std::size_t>(d)][static_cast<std::size_t>(bi)]];
                    v = add[static_cast<std::size_t>(v) * n + tau_index[static_cast<std::size_t>(d)]];
                    rows[static_cast<std::size_t>(x * n + ai)][static_cast<std::size_t>(y * n + bi)] = z * n + v;
                }
            }
    return rows;
}

std::vector<std::vector<int>> galkin_rows(const GalkinSpec& spec) {
    spec.validate();
    MuTau mt;
    mt.tau = {spec.group.zero(), spec.c1, spec.c2};
    return mu_tau_rows(spec.group, mt);
}

GalkinTable build(const GalkinSpec& spec, const BruteForceLimits& limits) {
    if (spec.group.order() > limits.max_group_order)
        throw ResourceLimitError("group " + spec.group.to_string() + " has order " +
                                 std::to_string(spec.group.order()) + ", above the bound " +
                                 std::to_string(limits.max_group_order));
    const auto rows = galkin_rows(spec);
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    GalkinTable out{spec, Quandle::trusted(static_cast<int>(rows.size()), std::move(flat)), {}};
    for (int i = 0; i < out.quandle.order(); ++i) out.legend.push_back(galkin_label(spec.group, i));
    return out;
}

Normalization normalize(const GalkinSpec& spec) {
    spec.validate();
    const AbelianGroup& a = spec.group;
    Normalization out{GalkinSpec::pointed(a, a.sub(spec.c2, spec.c1)), {}};
    const std::array<GroupElement, 3> beta{a.zero(), a.zero(), a.neg(spec.c1)};
    for (int i = 0; i < 3 * a.order(); ++i) {
        auto [x, elem] = galkin_element(a, i);
        out.eta.push_back(galkin_index(a, x, a.add(elem, beta[static_cast<std::size_t>(x)])));
    }
    return out;
}

bool galkin_isomorphic(const GalkinSpec& s, const GalkinSpec& t, const BruteForceLimits& limits) {
    const auto ns = normalize(s).spec;
    const auto nt = normalize(t).spec;
    if (!(ns.group == nt.group)) return false;
    return pointed_isomorphic({ns.group, ns.c2}, {nt.group, nt.c2}, limits);
}

std::vector<GalkinSpec> classify_order(int m, const BruteForceLimits& limits) {
    if (m < 3 || m % 3 != 0)
        throw DomainError("Galkin quandles have order 3n with n >= 1, got " + std::to_string(m));
    std::vector<GalkinSpec> out;
    for (const auto& group : abelian_groups_of_order(m / 3))
        for (const auto& c : pointed_orbit_reps(group, limits)) out.push_back(GalkinSpec::pointed(group, c));
    return out;
}

PropertyReport predicted_properties(const GalkinSpec& spec) {
    spec.validate();
    const AbelianGroup& a = spec.group;
    const GroupElement c = a.sub(spec.c2, spec.c1);
    bool three_kills = true;
    for (const auto& e : a.elements())
        if (a.scale(3, e) != a.zero()) three_kills = false;

    PropertyReport r;
    r.connected = true;
    r.latin = a.order() % 2 == 1;
    r.faithful = true;
    r.medial = three_kills;
    r.left_distributive = three_kills;
    r.kei = spec.c1 == spec.c2;
    r.self_dual = true;
    r.r3_subquandle = c == a.zero() || a.order() % 3 == 0;
    r.cycle_profile.assign(static_cast<std::size_t>(3 * a.order()), predicted_column_type(a, c));
    return r;
}

std::vector<int> induced_hom(const Homomorphism& f, const GroupElement& c, const GroupElement& d) {
    const AbelianGroup& a = f.domain();
    const AbelianGroup& b = f.codomain();
    a.require(c);
    b.require(d);
    if (f(c) != d)
        throw DomainError("homomorphism sends " + c.to_string() + " to " + f(c).to_string() + ", not " +
                          d.to_string());
    const auto values = f.value_table();
    std::vector<int> map;
    for (int x = 0; x < 3; ++x)
        for (int i = 0; i < a.order(); ++i) map.push_back(x * b.order() + values[static_cast<std::size_t>(i)]);
    return map;
}

std::vector<int> symmetric_involution(const AbelianGroup& a, const GroupElement& c) {
    a.require(c);
    if (a.element_order(c) != 2)
        throw DomainError("symmetric involution needs c of order 2, " + c.to_string() + " has order " +
                          std::to_string(a.element_order(c)));
    std::vector<int> rho;
    for (int i = 0; i < 3 * a.order(); ++i) {
        auto [x, elem] = galkin_element(a, i);
        rho.push_back(galkin_index(a, x, a.add(elem, c)));
    }
    return rho;
}

bool mu_tau_validate(const AbelianGroup& a, const MuTau& candidate, MuTauMode mode) {
    for (const auto& t : candidate.tau) a.require(t);
    const long long e = mode == MuTauMode::Module ? a.exponent() : 0;
    auto same = [&](long long u, long long v) {
        if (e == 0) return u == v;
        return ((u - v) % e + e) % e == 0;
    };
    auto mu = [&](int x) { return candidate.mu[static_cast<std::size_t>(mod3(x))]; };
    auto tau = [&](int x) { return candidate.tau[static_cast<std::size_t>(mod3(x))]; };
    for (int x = 0; x < 3; ++x) {
        if (!same(mu(-x), mu(x))) return false;
        for (int y = 0; y < 3; ++y) {
            if (!same(mu(x + y) + mu(x - y), mu(x) * mu(y))) return false;
            const auto lhs = a.add(tau(x + y), tau(y - x));
            const auto rhs = a.add(a.add(tau(x), tau(-x)), a.scale(mu(x), tau(y)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> mu_search(int p, int value_bound) {
    if (p != 5 && p != 7) throw DomainError("mu search needs a prime p with 3 < p <= 7, got " + std::to_string(p));
    if (value_bound < 2) throw DomainError("mu search value bound must be at least 2");
    const int half = (p - 1) / 2;
    std::vector<int> free(static_cast<std::size_t>(half), -value_bound);
    std::vector<std::vector<int>> out;
    std::vector<int> mu(static_cast<std::size_t>(p));
    while (true) {
        mu[0] = 2;
        for (int i = 1; i <= half; ++i) {
            mu[static_cast<std::size_t>(i)] = free[static_cast<std::size_t>(i - 1)];
            mu[static_cast<std::size_t>(p - i)] = free[static_cast<std::size_t>(i - 1)];
        }
        bool ok = true;
        for (int x = 0; x < p && ok; ++x)
            for (int y = 0; y < p && ok; ++y)
                ok = mu[static_cast<std::size_t>((x + y) % p)] + mu[static_cast<std::size_t>(((x - y) % p + p) % p)] ==
                     mu[static_cast<std::size_t>(x)] * mu[static_cast<std::size_t>(y)];
        if (ok) out.push_back(mu);
        std::size_t i = 0;
        for (; i < free.size(); ++i) {
            if (++free[i] <= value_bound) break;
            free[i] = -value_bound;
        }
        if (i == free.size()) break;
    }
    return out;
}

} // namespace gq
