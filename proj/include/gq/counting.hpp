#pragma once

#include "gq/abelian.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gq {

// Number of Galkin quandle classes of order 3n for n = 1..100, as published.
extern const std::array<std::uint64_t, 100> kPublishedClassCounts;

std::uint64_t partition_count(int m);

// N(n): multiplicative, with N(q^e) = sum_{m=0..e} p(m) p(e-m).
std::uint64_t galkin_class_count(int n);

struct CrosscheckRow {
    int n = 0;
    std::uint64_t formula = 0;
    std::uint64_t classified = 0; // 0 when not computed
    std::uint64_t published = 0;  // 0 beyond the published range
    bool ok = false;
};

struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;
    std::vector<std::string> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};

// Compares classify_order(3n), the formula and the published list for n <= n_max.
// classify_order is only run for n <= classify_max.
CrosscheckReport crosscheck(int n_max, int classify_max = 16, const BruteForceLimits& limits = {});

} // namespace gq
