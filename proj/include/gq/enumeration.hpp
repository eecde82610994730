#pragma once

#include "gq/quandle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gq {

struct CensusEntry {
    int order = 0;
    Quandle table;
    std::vector<std::uint8_t> canonical_key;
};

// Lexicographically least row-major table over all relabelings. Equal keys mean
// isomorphic quandles. Throws ResourceLimitError above order 10.
std::vector<std::uint8_t> canonical_key(const Quandle& q);

// One entry per isomorphism class of connected quandles of order n, sorted by
// canonical key. Throws ResourceLimitError when n exceeds max_order.
std::vector<CensusEntry> enumerate_connected(int n, int max_order = 8);

// Index of the census entry isomorphic to q; nothing when q is not connected or
// no entry matches.
std::optional<std::size_t> identify(const Quandle& q, const std::vector<CensusEntry>& census);

} // namespace gq
