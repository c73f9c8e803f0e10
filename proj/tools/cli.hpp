#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kout::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one koutsim invocation. `args` excludes the program name. Results go
/// to `out`; diagnostics are a single line on `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kout::cli
