#pragma once

#include "gq/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gq {

// Finite quandle on {0,...,n-1} stored as a dense table with table[a][b] = a*b.
// Columns are the right translations R_b.
class Quandle {
public:
    Quandle() = default;

    // Full validation of all three axioms. Throws MalformedError on shape problems
    // and DomainError naming the first violated axiom.
    static Quandle from_rows(const std::vector<std::vector<int>>& rows);
    // For tables produced by trusted constructions: checks shape, idempotency and
    // column permutations but not self-distributivity (O(n^2) instead of O(n^3)).
    static Quandle trusted(int n, std::vector<int> flat);

    int order() const { return n_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    // R_b^{-1}(a), the dual operation.
    int rdiv(int a, int b) const { return inverse_[static_cast<std::size_t>(a) * n_ + b]; }

    const std::vector<int>& flat() const { return table_; }
    std::vector<std::vector<int>> rows() const;
    std::vector<int> column(int b) const;

    friend bool operator==(const Quandle& a, const Quandle& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

private:
    Quandle(int n, std::vector<int> flat);

    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

struct AxiomViolation {
    enum class Axiom { Idempotency, RightInvertibility, SelfDistributivity };
    Axiom axiom;
    // Idempotency: a. RightInvertibility: column b, with a and c two rows mapping
    // to the same value. SelfDistributivity: (a*b)*c != (a*c)*(b*c).
    int a = -1, b = -1, c = -1;

    std::string describe() const;
};

struct AxiomCheck {
    std::optional<Quandle> quandle;
    std::optional<AxiomViolation> violation;
    bool ok() const { return quandle.has_value(); }
};

// Validates a raw table. Non-square or out-of-range entries throw MalformedError;
// axiom failures are reported, not thrown.
AxiomCheck check_axioms(const std::vector<std::vector<int>>& rows);

// Sorted cycle lengths of a permutation given as a value table.
std::vector<int> cycle_type(const std::vector<int>& perm);

// profile[b] = sorted cycle lengths of R_b, including 1-cycles.
std::vector<std::vector<int>> column_cycle_types(const Quandle& q);
// Sorted multiset of column cycle types; an isomorphism invariant.
std::vector<std::vector<int>> cycle_profile(const Quandle& q);

struct PropertyReport {
    bool connected = false;
    bool latin = false;
    bool faithful = false;
    bool medial = false;
    bool left_distributive = false;
    bool kei = false;
    bool self_dual = false;
    bool r3_subquandle = false;
    std::vector<std::vector<int>> cycle_profile;

    friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

bool is_connected(const Quandle& q);
bool is_latin(const Quandle& q);
bool is_faithful(const Quandle& q);
bool is_medial(const Quandle& q);
bool is_left_distributive(const Quandle& q);
bool is_kei(const Quandle& q);
bool is_self_dual(const Quandle& q);
// Some three elements form a subquandle isomorphic to R3.
bool has_r3_subquandle(const Quandle& q);

PropertyReport property_report(const Quandle& q);

Quandle dual(const Quandle& q);

// Orbits of the inner group action; orbit[i] is the least element of i's orbit.
std::vector<int> orbit_labels(const Quandle& q);

// Least subquandle containing the given elements, ascending.
std::vector<int> subquandle_generated(const Quandle& q, const std::vector<int>& generators);

// f(a*b) = f(a)*f(b) for all a, b, with f given as a value table from p to q.
bool is_homomorphism(const Quandle& p, const Quandle& q, const std::vector<int>& f);

// Lexicographically least isomorphism p -> q, if any.
std::optional<std::vector<int>> isomorphism(const Quandle& p, const Quandle& q);
inline bool isomorphic(const Quandle& p, const Quandle& q) { return isomorphism(p, q).has_value(); }

// x*rho(y) = x dual y and rho(x*y) = rho(x)*y for all x, y, with rho an involution.
bool is_good_involution(const Quandle& q, const std::vector<int>& rho);
// All good involutions, in lexicographic order. Throws ResourceLimitError above max_order.
std::vector<std::vector<int>> good_involutions(const Quandle& q, int max_order = 30);

Quandle trivial_quandle(int n);
Quandle dihedral(int n);
// a*b = T(a) + (1-T)(b) on the elements of A in index order.
Quandle alexander(const AbelianGroup& a, const Homomorphism& t);
// Pairs (i,j) are indexed i*|U| + j.
Quandle product(const Quandle& p, const Quandle& q);

struct AlexanderWitness {
    AbelianGroup group;
    Homomorphism automorphism;
    std::vector<int> isomorphism; // from alexander(group, automorphism) onto the input
};

// Searches every abelian group of order n and every automorphism. Throws
// ResourceLimitError when n exceeds max_order.
std::optional<AlexanderWitness> is_alexander_small(const Quandle& q, int max_order = 27);

} // namespace gq
