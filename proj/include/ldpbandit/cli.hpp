#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldpb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `ldpbandit` executable. `args` excludes the
/// program name. Data goes to `out` (or files named by --out), diagnostics
/// to `err`. Returns 0 on success, 1 on runtime or audit failure and 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ldpb::cli
