#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dwidth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;    // also: a certificate failed verification
inline constexpr int kExitCheckFailed = 2;   // an inequality that must always hold did not

/// Runs one command line (without the program name). JSON goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dwidth::cli
