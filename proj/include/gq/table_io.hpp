#pragma once

#include "gq/quandle.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace gq {

// Format: first line n, then n rows of n 0-based entries, row = left operand.
// With transposed = true the rows are read as columns (left-distributive sources).
std::vector<std::vector<int>> read_table(std::istream& in, bool transposed = false);
Quandle read_quandle(std::istream& in, bool transposed = false);
Quandle load_quandle(const std::string& path, bool transposed = false);

void write_table(std::ostream& out, const Quandle& q);

} // namespace gq
