#pragma once

#include "gq/quandle.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace gq {

// Letter i > 0 is sigma_i, -i its inverse, for 1 <= i < strands.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    std::string to_string() const; // "3: 1 -2 1 -2"
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Number of components of the closure.
int closure_components(const BraidWord& b);

// Parses "s: w1 w2 ...". Throws ParseError on bad syntax or letters out of range
// and LinkNotKnotError when the closure has more than one component.
BraidWord parse_braid(std::string_view text);
// Same checks for an already split word.
BraidWord make_braid(int strands, std::vector<int> letters);

// Conjugate by the first k letters: rotate them to the end.
BraidWord rotate(const BraidWord& b, int k = 1);
// Append sigma_s or its inverse on s+1 strands.
BraidWord stabilize(const BraidWord& b, bool positive = true);

// At a crossing, out = in * over for sign +1 and out = in dual over for sign -1.
struct Crossing {
    int over;
    int under_in;
    int under_out;
    int sign;
};

struct KnotDiagram {
    int arcs = 0;
    std::vector<Crossing> crossings;
};

KnotDiagram diagram(const BraidWord& b);

enum class ColoringMethod {
    Auto,        // braid action unless |Q|^strands exceeds the tuple budget
    BraidAction, // tuples of Q^strands fixed by the braid
    Arc,         // backtracking over arc colors of the closure diagram
};

struct ColoringBudget {
    std::uint64_t max_tuples = 100'000'000;
};

std::uint64_t count_colorings(const BraidWord& b, const Quandle& q, ColoringMethod method = ColoringMethod::Auto,
                              const ColoringBudget& budget = {});
// More colorings than the |Q| constant ones.
bool has_nontrivial_coloring(const BraidWord& b, const Quandle& q);

// |det| of a first minor of the crossing relation matrix; 1 for the unknot.
long long determinant(const BraidWord& b);

struct KnotRecord {
    std::string name;
    BraidWord braid;
    long long determinant = 0;
};

// Lines "name; strands; letters[; determinant]", '#' comments and blank lines
// ignored. Stored determinants are recomputed and must agree.
std::vector<KnotRecord> parse_knot_table(std::istream& in, const std::string& source = "<input>");
std::vector<KnotRecord> load_knot_table(const std::string& path);
// Throws DomainError when no record has the name.
const KnotRecord& find_knot(const std::vector<KnotRecord>& records, const std::string& name);

struct ColoringProfile {
    std::vector<std::vector<std::uint64_t>> counts; // counts[knot][quandle]
    // Quandle indices grouped by identical count columns, in order of first member.
    std::vector<std::vector<std::size_t>> count_classes;
    // Grouped by which knots they color non-trivially.
    std::vector<std::vector<std::size_t>> nontrivial_classes;
};

ColoringProfile coloring_profile(const std::vector<KnotRecord>& knots, const std::vector<Quandle>& quandles);

} // namespace gq
