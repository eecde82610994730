#pragma once

#include "gq/quandle.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace gq {

// Runs the command line (without the program name). Returns the exit code:
// 0 on success, 1 on domain or parse errors, 2 when a resource limit is hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Resolves "R<n>", "trivial-<n>", a Galkin literal "G(...)", or a table file path.
Quandle resolve_quandle(const std::string& text, bool transposed = false);

} // namespace gq
