#include "gq/abelian.hpp"

#include "gq/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace gq {

namespace {

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    if (s.empty()) throw ParseError("empty integer in '" + std::string(context) + "'");
    bool negative = false;
    if (s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    long long value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000'000) throw ParseError("integer too large in '" + std::string(context) + "'");
    }
    return static_cast<int>(negative ? -value : value);
}

// Partitions of m into parts, each listed in non-increasing order.
void partitions(int m, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(m, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(m - part, part, current, out);
        current.pop_back();
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = saturating_mul(r, base);
    return r;
}

void check_order_bound(const AbelianGroup& a, const BruteForceLimits& limits) {
    if (a.order() > limits.max_group_order)
        throw ResourceLimitError("group " + a.to_string() + " has order " + std::to_string(a.order()) +
                                 ", above the brute-force bound " +
                                 std::to_string(limits.max_group_order));
}

} // namespace

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ']';
    return os.str();
}

std::vector<std::pair<int, int>> factorize(int n) {
    if (n < 1) throw DomainError("cannot factorize " + std::to_string(n));
    std::vector<std::pair<int, int>> out;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
    long long order = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw DomainError("invariant factor " + std::to_string(factors_[i]) + " is below 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw DomainError("invariant factors must satisfy n_i | n_{i+1}: " + std::to_string(factors_[i - 1]) +
                              " does not divide " + std::to_string(factors_[i]));
        order *= factors_[i];
        if (order > 1'000'000) throw ResourceLimitError("group order above 10^6 is not supported");
    }
    order_ = static_cast<int>(order);
}

AbelianGroup AbelianGroup::cyclic(int n) {
    if (n < 1) throw DomainError("cyclic group order must be positive");
    return n == 1 ? AbelianGroup() : AbelianGroup({n});
}

bool AbelianGroup::contains(const GroupElement& a) const {
    if (a.coords.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) return false;
    return true;
}

void AbelianGroup::require(const GroupElement& a) const {
    if (!contains(a))
        throw MalformedError("element " + a.to_string() + " is not a valid element of " + to_string());
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement AbelianGroup::generator(int i) const {
    GroupElement g = zero();
    g.coords.at(static_cast<std::size_t>(i)) = 1;
    return g;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    require(a);
    require(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = mod(a.coords[i] + b.coords[i], factors_[i]);
    return r;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const { return scale(-1, a); }

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement AbelianGroup::scale(long long k, const GroupElement& a) const {
    require(a);
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = mod((k % factors_[i]) * a.coords[i], factors_[i]);
    return r;
}

int AbelianGroup::element_order(const GroupElement& a) const {
    require(a);
    int order = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        int coord_order = factors_[i] / std::gcd(factors_[i], a.coords[i]);
        order = std::lcm(order, coord_order);
    }
    return order;
}

int AbelianGroup::index_of(const GroupElement& a) const {
    require(a);
    int index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + a.coords[i];
    return index;
}

GroupElement AbelianGroup::element_at(int index) const {
    if (index < 0 || index >= order_)
        throw MalformedError("element index " + std::to_string(index) + " out of range for " + to_string());
    GroupElement r = zero();
    for (std::size_t i = factors_.size(); i-- > 0;) {
        r.coords[i] = index % factors_[i];
        index /= factors_[i];
    }
    return r;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<int> AbelianGroup::addition_table() const {
    const auto elems = elements();
    std::vector<int> table(static_cast<std::size_t>(order_) * order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) {
            int index = 0;
            for (std::size_t k = 0; k < factors_.size(); ++k)
                index = index * factors_[k] + (elems[i].coords[k] + elems[j].coords[k]) % factors_[k];
            table[static_cast<std::size_t>(i) * order_ + j] = index;
        }
    return table;
}

std::vector<int> AbelianGroup::negation_table() const {
    std::vector<int> table(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) table[i] = index_of(neg(element_at(i)));
    return table;
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "Z1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << 'x';
        os << 'Z' << factors_[i];
    }
    return os.str();
}

std::vector<int> parse_group_moduli(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (text == "1" || text == "trivial") return {};
    std::vector<int> moduli;
    while (true) {
        std::size_t cut = text.find_first_of("xX");
        std::string_view part = trim(text.substr(0, cut));
        if (part.size() < 2 || (part.front() != 'Z' && part.front() != 'z'))
            throw ParseError("bad group literal '" + std::string(whole) + "' (expected e.g. Z2xZ4)");
        int m = parse_int(part.substr(1), whole);
        if (m < 1) throw ParseError("cyclic factor must be positive in '" + std::string(whole) + "'");
        if (m > 1) moduli.push_back(m);
        if (cut == std::string_view::npos) break;
        text = text.substr(cut + 1);
    }
    return moduli;
}

std::vector<int> parse_residues(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("bad element literal '" + std::string(whole) + "' (expected e.g. [1,2])");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<int> out;
    if (text.empty()) return out;
    while (true) {
        std::size_t cut = text.find(',');
        out.push_back(parse_int(text.substr(0, cut), whole));
        if (cut == std::string_view::npos) break;
        text = text.substr(cut + 1);
    }
    return out;
}

CanonicalIsomorphism::CanonicalIsomorphism(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    // prime -> list of (exponent, source), kept in source order for equal exponents
    std::map<int, std::vector<std::pair<int, int>>> by_prime;
    for (std::size_t s = 0; s < moduli_.size(); ++s) {
        if (moduli_[s] < 1) throw DomainError("cyclic factor must be positive");
        if (moduli_[s] == 1) continue;
        for (auto [p, e] : factorize(moduli_[s])) by_prime[p].emplace_back(e, static_cast<int>(s));
    }
    std::size_t count = 0;
    for (auto& [p, list] : by_prime) {
        std::stable_sort(list.begin(), list.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        count = std::max(count, list.size());
    }
    std::vector<int> factors(count, 1);
    for (const auto& [p, list] : by_prime) {
        const std::size_t offset = count - list.size();
        for (std::size_t i = 0; i < list.size(); ++i) {
            int q = static_cast<int>(ipow(static_cast<std::uint64_t>(p), list[i].first));
            const int target = static_cast<int>(offset + i);
            factors[static_cast<std::size_t>(target)] *= q;
            components_.push_back({list[i].second, q, target});
        }
    }
    target_ = AbelianGroup(std::move(factors));
}

GroupElement CanonicalIsomorphism::operator()(const std::vector<int>& residues) const {
    if (residues.size() != moduli_.size())
        throw MalformedError("element has " + std::to_string(residues.size()) + " coordinates, group has " +
                             std::to_string(moduli_.size()));
    for (std::size_t i = 0; i < residues.size(); ++i)
        if (residues[i] < 0 || residues[i] >= moduli_[i])
            throw MalformedError("coordinate " + std::to_string(residues[i]) + " out of range for Z" +
                                 std::to_string(moduli_[i]));
    GroupElement out = target_.zero();
    for (const auto& c : components_) {
        const int n = target_.factors()[static_cast<std::size_t>(c.target)];
        const int cofactor = n / c.prime_power;
        // inverse of cofactor modulo the prime power
        int inv = 1;
        while ((static_cast<long long>(cofactor) * inv) % c.prime_power != 1 % c.prime_power) ++inv;
        const long long r = residues[static_cast<std::size_t>(c.source)] % c.prime_power;
        auto& coord = out.coords[static_cast<std::size_t>(c.target)];
        coord = mod(coord + r * cofactor % n * inv, n);
    }
    return out;
}

AbelianGroup parse_group(std::string_view text) { return CanonicalIsomorphism(parse_group_moduli(text)).target(); }

GroupElement parse_element(std::string_view group_text, std::string_view element_text) {
    CanonicalIsomorphism iso(parse_group_moduli(group_text));
    return iso(parse_residues(element_text));
}

Homomorphism::Homomorphism(AbelianGroup domain, AbelianGroup codomain, std::vector<GroupElement> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(domain_.rank()))
        throw DomainError("homomorphism needs one image per generator of " + domain_.to_string());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        codomain_.require(images_[i]);
        if (codomain_.scale(domain_.factors()[i], images_[i]) != codomain_.zero())
            throw DomainError("image " + images_[i].to_string() + " of generator " + std::to_string(i + 1) +
                              " has order not dividing " + std::to_string(domain_.factors()[i]));
    }
}

Homomorphism Homomorphism::identity(const AbelianGroup& a) { return multiplication(a, 1); }

Homomorphism Homomorphism::multiplication(const AbelianGroup& a, long long k) {
    std::vector<GroupElement> images;
    for (int i = 0; i < a.rank(); ++i) images.push_back(a.scale(k, a.generator(i)));
    return Homomorphism(a, a, std::move(images));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
    domain_.require(x);
    GroupElement r = codomain_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i) r = codomain_.add(r, codomain_.scale(x.coords[i], images_[i]));
    return r;
}

std::vector<int> Homomorphism::value_table() const {
    std::vector<int> table(static_cast<std::size_t>(domain_.order()));
    for (int i = 0; i < domain_.order(); ++i) table[i] = codomain_.index_of((*this)(domain_.element_at(i)));
    return table;
}

bool Homomorphism::is_bijective() const {
    if (domain_.order() != codomain_.order()) return false;
    auto table = value_table();
    std::sort(table.begin(), table.end());
    return std::adjacent_find(table.begin(), table.end()) == table.end();
}

Homomorphism Homomorphism::after(const Homomorphism& f) const {
    if (!(f.codomain() == domain_)) throw DomainError("cannot compose homomorphisms with mismatched groups");
    std::vector<GroupElement> images;
    for (const auto& img : f.images()) images.push_back((*this)(img));
    return Homomorphism(f.domain(), codomain_, std::move(images));
}

std::vector<AbelianGroup> abelian_groups_of_order(int n) {
    if (n < 1) throw DomainError("group order must be positive, got " + std::to_string(n));
    // For each prime, a partition of its exponent; combine into invariant factors.
    const auto primes = factorize(n);
    std::vector<std::vector<std::vector<int>>> choices;
    for (auto [p, e] : primes) {
        std::vector<std::vector<int>> parts;
        std::vector<int> current;
        partitions(e, e, current, parts);
        choices.push_back(std::move(parts));
    }
    std::vector<AbelianGroup> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < choices.size(); ++i) count = std::max(count, choices[i][pick[i]].size());
        std::vector<int> factors(count, 1);
        for (std::size_t i = 0; i < choices.size(); ++i) {
            const auto& parts = choices[i][pick[i]]; // non-increasing
            for (std::size_t j = 0; j < parts.size(); ++j)
                factors[count - 1 - j] *= static_cast<int>(ipow(static_cast<std::uint64_t>(primes[i].first), parts[j]));
        }
        out.emplace_back(std::move(factors));
        std::size_t i = 0;
        for (; i < choices.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == choices.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.factors() < b.factors();
    });
    return out;
}

std::uint64_t automorphism_count(const AbelianGroup& a) {
    // Per prime p with cyclic exponents e_1 <= ... <= e_k:
    //   prod_j (p^{d_j} - p^{j-1}) * prod_j p^{e_j (k - d_j)} * prod_j p^{(e_j - 1)(k - c_j + 1)}
    // with d_j = max{l : e_l = e_j}, c_j = min{l : e_l = e_j} (1-based).
    std::map<int, std::vector<int>> exponents;
    for (int n : a.factors())
        for (auto [p, e] : factorize(n)) exponents[p].push_back(e);
    std::uint64_t total = 1;
    for (auto& [p, e] : exponents) {
        std::sort(e.begin(), e.end());
        const int k = static_cast<int>(e.size());
        const auto P = static_cast<std::uint64_t>(p);
        for (int j = 1; j <= k; ++j) {
            int d = j, c = j;
            while (d < k && e[static_cast<std::size_t>(d)] == e[static_cast<std::size_t>(j - 1)]) ++d;
            while (c > 1 && e[static_cast<std::size_t>(c - 2)] == e[static_cast<std::size_t>(j - 1)]) --c;
            const int ej = e[static_cast<std::size_t>(j - 1)];
            total = saturating_mul(total, ipow(P, d) - ipow(P, j - 1));
            total = saturating_mul(total, ipow(P, ej * (k - d)));
            total = saturating_mul(total, ipow(P, (ej - 1) * (k - c + 1)));
        }
    }
    return total;
}

void for_each_automorphism(const AbelianGroup& a, const BruteForceLimits& limits,
                           const std::function<bool(const std::vector<int>&)>& visit) {
    check_order_bound(a, limits);
    const std::uint64_t expected = automorphism_count(a);
    if (expected > limits.max_automorphisms)
        throw ResourceLimitError("Aut(" + a.to_string() + ") has " + std::to_string(expected) +
                                 " elements, above the enumeration bound " +
                                 std::to_string(limits.max_automorphisms));

    const int n = a.order();
    const int k = a.rank();
    const auto add = a.addition_table();
    const auto& factors = a.factors();

    // candidates[i]: elements y with factors[i] * y = 0
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int y = 0; y < n; ++y)
            if (factors[static_cast<std::size_t>(i)] % a.element_order(a.element_at(y)) == 0)
                candidates[static_cast<std::size_t>(i)].push_back(y);

    // partial[j]: images of the prefix subgroup <e_1..e_j> in mixed-radix prefix order
    std::vector<std::vector<int>> partial(static_cast<std::size_t>(k) + 1);
    partial[0] = {0};
    std::vector<char> in_image(static_cast<std::size_t>(n), 0);
    bool keep_going = true;

    std::function<void(int)> extend = [&](int level) {
        if (!keep_going) return;
        if (level == k) {
            keep_going = visit(partial[static_cast<std::size_t>(k)]);
            return;
        }
        const auto& prev = partial[static_cast<std::size_t>(level)];
        std::fill(in_image.begin(), in_image.end(), 0);
        for (int v : prev) in_image[static_cast<std::size_t>(v)] = 1;
        const int m = factors[static_cast<std::size_t>(level)];
        for (int y : candidates[static_cast<std::size_t>(level)]) {
            // t*y must avoid the previous image for 0 < t < m
            bool ok = true;
            int ty = 0;
            for (int t = 1; t < m && ok; ++t) {
                ty = add[static_cast<std::size_t>(ty) * n + y];
                if (in_image[static_cast<std::size_t>(ty)]) ok = false;
            }
            if (!ok) continue;
            auto& next = partial[static_cast<std::size_t>(level) + 1];
            next.assign(prev.size() * static_cast<std::size_t>(m), 0);
            for (std::size_t p = 0; p < prev.size(); ++p) {
                int v = prev[p];
                for (int t = 0; t < m; ++t) {
                    next[p * static_cast<std::size_t>(m) + static_cast<std::size_t>(t)] = v;
                    v = add[static_cast<std::size_t>(v) * n + y];
                }
            }
            extend(level + 1);
            if (!keep_going) return;
            // restore the membership marks of this level for the next candidate
            std::fill(in_image.begin(), in_image.end(), 0);
            for (int v : prev) in_image[static_cast<std::size_t>(v)] = 1;
        }
    };
    extend(0);
}

std::vector<Homomorphism> automorphisms(const AbelianGroup& a, const BruteForceLimits& limits) {
    std::vector<Homomorphism> out;
    std::vector<int> generator_index;
    for (int i = 0; i < a.rank(); ++i) generator_index.push_back(a.index_of(a.generator(i)));
    for_each_automorphism(a, limits, [&](const std::vector<int>& table) {
        std::vector<GroupElement> images;
        for (int g : generator_index) images.push_back(a.element_at(table[static_cast<std::size_t>(g)]));
        out.emplace_back(a, a, std::move(images));
        return true;
    });
    return out;
}

std::vector<int> automorphism_orbit_labels(const AbelianGroup& a, const BruteForceLimits& limits) {
    const int n = a.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for_each_automorphism(a, limits, [&](const std::vector<int>& table) {
        for (int x = 0; x < n; ++x) {
            int rx = find(x), ry = find(table[static_cast<std::size_t>(x)]);
            if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
        }
        return true;
    });
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = find(x);
    return labels;
}

std::vector<GroupElement> pointed_orbit_reps(const AbelianGroup& a, const BruteForceLimits& limits) {
    const auto labels = automorphism_orbit_labels(a, limits);
    std::vector<GroupElement> reps;
    for (int x = 0; x < a.order(); ++x)
        if (labels[static_cast<std::size_t>(x)] == x) reps.push_back(a.element_at(x));
    return reps;
}

std::optional<Homomorphism> pointed_isomorphism(const PointedGroup& p, const PointedGroup& q,
                                                const BruteForceLimits& limits) {
    p.group.require(p.point);
    q.group.require(q.point);
    if (!(p.group == q.group)) return std::nullopt;
    const AbelianGroup& a = p.group;
    if (p.point == q.point) return Homomorphism::identity(a);
    const int source = a.index_of(p.point);
    const int target = a.index_of(q.point);
    std::optional<Homomorphism> witness;
    std::vector<int> generator_index;
    for (int i = 0; i < a.rank(); ++i) generator_index.push_back(a.index_of(a.generator(i)));
    for_each_automorphism(a, limits, [&](const std::vector<int>& table) {
        if (table[static_cast<std::size_t>(source)] != target) return true;
        std::vector<GroupElement> images;
        for (int g : generator_index) images.push_back(a.element_at(table[static_cast<std::size_t>(g)]));
        witness.emplace(a, a, std::move(images));
        return false;
    });
    return witness;
}

bool pointed_isomorphic(const PointedGroup& p, const PointedGroup& q, const BruteForceLimits& limits) {
    return pointed_isomorphism(p, q, limits).has_value();
}

} // namespace gq
