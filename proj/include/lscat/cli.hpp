#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lscat {

struct VerifyReport;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Command-line front end. `args` excludes the program name. Returns 2 for
/// bad flags or arguments the library rejects, 1 when a verification run
/// finds a counterexample, and 0 otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit status of a `verify` run: 0 when every check passed, 1 otherwise.
int verify_exit_code(const VerifyReport& report);

}  // namespace lscat
