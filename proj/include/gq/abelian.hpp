#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gq {

// Residue vector of an element of Z_{n1} x ... x Z_{nk}.
struct GroupElement {
    std::vector<int> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    std::string to_string() const; // "[1,2]"; the trivial group's element is "[]"
};

// Finite abelian group in invariant-factor form n1 | n2 | ... | nk, each ni >= 2.
// The empty factor list is the trivial group.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int> invariant_factors);

    static AbelianGroup cyclic(int n);

    const std::vector<int>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    int order() const { return order_; }
    int exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    bool contains(const GroupElement& a) const;
    // Throws MalformedError unless a is a valid element.
    void require(const GroupElement& a) const;

    GroupElement zero() const;
    GroupElement generator(int i) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(long long k, const GroupElement& a) const;
    int element_order(const GroupElement& a) const;

    // Position of a in lexicographic order of coordinate vectors.
    int index_of(const GroupElement& a) const;
    GroupElement element_at(int index) const;
    std::vector<GroupElement> elements() const;

    // Dense tables on element indices, for inner loops.
    std::vector<int> addition_table() const;
    std::vector<int> negation_table() const;

    std::string to_string() const; // "Z2xZ4"; trivial group is "Z1"

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<int> factors_;
    int order_ = 1;
};

// Parses "Z4", "Z2xZ4", "Z2xZ3", "Z1". Does not canonicalize.
std::vector<int> parse_group_moduli(std::string_view text);
// Parses "[1,2]" or "[]".
std::vector<int> parse_residues(std::string_view text);

// Isomorphism from an arbitrary product of cyclic groups onto its invariant-factor
// form, computed through the primary decomposition and the Chinese remainder theorem.
class CanonicalIsomorphism {
public:
    explicit CanonicalIsomorphism(std::vector<int> moduli);

    const AbelianGroup& target() const { return target_; }
    GroupElement operator()(const std::vector<int>& residues) const;

private:
    struct Component {
        int source;      // index into moduli
        int prime_power; // modulus of the component
        int target;      // invariant factor receiving the component
    };
    std::vector<int> moduli_;
    std::vector<Component> components_;
    AbelianGroup target_;
};

// Parses a group literal and canonicalizes it; "Z2xZ3" becomes Z6.
AbelianGroup parse_group(std::string_view text);
// Parses "[...]" relative to the literal's moduli and maps it into the canonical group.
GroupElement parse_element(std::string_view group_text, std::string_view element_text);

// Group homomorphism between canonical groups, stored as images of the canonical
// generators e_1..e_k and expanded on demand.
class Homomorphism {
public:
    Homomorphism(AbelianGroup domain, AbelianGroup codomain, std::vector<GroupElement> images);

    static Homomorphism identity(const AbelianGroup& a);
    // x -> k x on a.
    static Homomorphism multiplication(const AbelianGroup& a, long long k);

    const AbelianGroup& domain() const { return domain_; }
    const AbelianGroup& codomain() const { return codomain_; }
    const std::vector<GroupElement>& images() const { return images_; }

    GroupElement operator()(const GroupElement& x) const;
    // Image of every domain element by index.
    std::vector<int> value_table() const;
    bool is_bijective() const;

    // (g.after(f))(x) = g(f(x))
    Homomorphism after(const Homomorphism& f) const;

    friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

private:
    AbelianGroup domain_;
    AbelianGroup codomain_;
    std::vector<GroupElement> images_;
};

struct PointedGroup {
    AbelianGroup group;
    GroupElement point;
};

struct BruteForceLimits {
    int max_group_order = 64;
    std::uint64_t max_automorphisms = 20'000'000;
};

// Every abelian group of order n exactly once, ordered by rank and then
// lexicographically by invariant factors.
std::vector<AbelianGroup> abelian_groups_of_order(int n);

// |Aut(A)| from the invariant factors alone (product over primary components).
std::uint64_t automorphism_count(const AbelianGroup& a);

// Calls visit(value_table) for each automorphism, where value_table[i] is the index
// of the image of element i. Stops early when visit returns false. Generator
// images are tried in lexicographic order.
void for_each_automorphism(const AbelianGroup& a, const BruteForceLimits& limits,
                           const std::function<bool(const std::vector<int>&)>& visit);

std::vector<Homomorphism> automorphisms(const AbelianGroup& a, const BruteForceLimits& limits = {});

// Least element of each Aut(A)-orbit, ascending.
std::vector<GroupElement> pointed_orbit_reps(const AbelianGroup& a,
                                             const BruteForceLimits& limits = {});
// orbit_label[i] = index of the least element in the orbit of element i.
std::vector<int> automorphism_orbit_labels(const AbelianGroup& a,
                                           const BruteForceLimits& limits = {});

// An automorphism h with h(p.point) = q.point, or nothing; groups must coincide.
std::optional<Homomorphism> pointed_isomorphism(const PointedGroup& p, const PointedGroup& q,
                                                const BruteForceLimits& limits = {});
bool pointed_isomorphic(const PointedGroup& p, const PointedGroup& q,
                        const BruteForceLimits& limits = {});

std::vector<std::pair<int, int>> factorize(int n);

} // namespace gq
