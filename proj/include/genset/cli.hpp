#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genset::cli {

inline constexpr const char* kSchema = "genset/1";

// Runs one command. Machine-readable output goes to `out`, the human
// summary to `err`. Returns the process exit status: 0 success, 1 usage,
// 2 cap or budget exceeded, 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace genset::cli
