#pragma once

#include <string>
#include <vector>

namespace qconvex::cli {

// Batch front-end. Exit codes: 0 success (and, for check/verify commands,
// the property held), 1 a requested check or the suite did not verify,
// 2 malformed input or configuration, 3 evaluation point outside the open
// unit disk, 4 criterion asked of a complex-coefficient series.
int run(int argc, const char* const* argv);

// Same, for in-process use; args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace qconvex::cli
