#pragma once

#include "gq/abelian.hpp"
#include "gq/quandle.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gq {

// G(A, c1, c2) on Z3 x A with (x,a)*(y,b) = (2y-x, -a + mu(x-y) b + tau(x-y)),
// mu = (2,-1,-1), tau = (0,c1,c2).
struct GalkinSpec {
    AbelianGroup group;
    GroupElement c1;
    GroupElement c2;

    // The pointed form G(A, c) = G(A, 0, c).
    static GalkinSpec pointed(AbelianGroup group, GroupElement c);

    // "G(Z2xZ4,[0,0],[1,2])", or "G(Z8,[2])" when c1 = 0.
    std::string to_string() const;
    void validate() const;

    friend bool operator==(const GalkinSpec&, const GalkinSpec&) = default;
};

// Accepts "G(Z2xZ4,[0,0],[1,2])", "G(Z8,[2])", and bare integers for cyclic
// groups ("G(Z5,1)"). Non-canonical groups such as Z2xZ3 are mapped onto their
// invariant-factor form.
GalkinSpec parse_galkin(std::string_view text);

// index(x, a) = x |A| + index_of(a)
int galkin_index(const AbelianGroup& a, int x, const GroupElement& elem);
std::pair<int, GroupElement> galkin_element(const AbelianGroup& a, int index);
// "(x,[a...])"
std::string galkin_label(const AbelianGroup& a, int index);

struct GalkinTable {
    GalkinSpec spec;
    Quandle quandle;
    std::vector<std::string> legend; // legend[i] = label of element i
};

GalkinTable build(const GalkinSpec& spec, const BruteForceLimits& limits = {});
// Raw rows, without the quandle wrapper; used by axiom checks.
std::vector<std::vector<int>> galkin_rows(const GalkinSpec& spec);

struct Normalization {
    GalkinSpec spec;     // (A, 0, c2 - c1)
    std::vector<int> eta; // eta[i] = image of element i of build(original)
};
Normalization normalize(const GalkinSpec& spec);

// Decided on pointed groups after normalization.
bool galkin_isomorphic(const GalkinSpec& s, const GalkinSpec& t, const BruteForceLimits& limits = {});

// One G(A, c) per abelian group of order m/3 (in enumeration order) and per
// automorphism-orbit representative c (ascending).
std::vector<GalkinSpec> classify_order(int m, const BruteForceLimits& limits = {});

// Closed-form property predictions, including the cycle profile.
PropertyReport predicted_properties(const GalkinSpec& spec);

// (x, a) -> (x, f(a)) from G(A, c) to G(B, d); f must carry c to d.
std::vector<int> induced_hom(const Homomorphism& f, const GroupElement& c, const GroupElement& d);

// rho(x, a) = (x, a + c) on G(A, c) for c of order 2.
std::vector<int> symmetric_involution(const AbelianGroup& a, const GroupElement& c);

struct MuTau {
    std::array<long long, 3> mu{2, -1, -1};
    std::array<GroupElement, 3> tau;
};

enum class MuTauMode {
    Integer, // mu identities over Z, as functions Z3 -> Z
    Module,  // mu identities modulo exp(A), i.e. as they act on A
};

// Checks mu(-X) = mu(X), mu(X+Y) + mu(X-Y) = mu(X)mu(Y) and
// tau(X+Y) + tau(Y-X) = tau(X) + tau(-X) + mu(X)tau(Y) for all X, Y in Z3.
bool mu_tau_validate(const AbelianGroup& a, const MuTau& candidate, MuTauMode mode = MuTauMode::Integer);
// Operation table of the induced binary operation; need not be a quandle.
std::vector<std::vector<int>> mu_tau_rows(const AbelianGroup& a, const MuTau& candidate);

// Symmetric mu: Z_p -> [-bound, bound] with mu(0) = 2 and
// mu(x+y) + mu(x-y) = mu(x)mu(y); each solution lists mu(0..p-1).
std::vector<std::vector<int>> mu_search(int p, int value_bound);

// Names C[n,i] from the rig listing of connected quandles, where available.
struct RigEntry {
    std::string name;
    GalkinSpec literal; // as listed, not normalized
};
const std::vector<RigEntry>& rig_entries();

struct RigMatch {
    std::optional<std::string> name;
    std::vector<std::string> conflicts; // why a name was withheld
};
// Matches the pointed class of a Galkin quandle against the catalog. Classes claimed by
// more than one catalog row, or contradicted by a cross-reference, get no name.
RigMatch rig_lookup(const GalkinSpec& spec, const BruteForceLimits& limits = {});
// All detected catalog inconsistencies, one line each.
std::vector<std::string> rig_conflicts(const BruteForceLimits& limits = {});

} // namespace gq
