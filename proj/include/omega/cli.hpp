#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omega::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 when the property holds or the computation
/// succeeded, 1 when a checked property fails, 2 on usage, parse or guard errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::cli
