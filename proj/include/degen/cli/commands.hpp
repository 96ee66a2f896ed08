#ifndef DEGEN_CLI_COMMANDS_HPP
#define DEGEN_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace degen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default hard cap on n accepted by table/eval; DEGEN_N_CAP overrides it.
inline constexpr int kDefaultNCap = 64;
inline constexpr const char* kNCapEnvVar = "DEGEN_N_CAP";

/// Runs the command line (without the program name) and returns the exit
/// status. Documents go to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degen::cli

#endif  // DEGEN_CLI_COMMANDS_HPP
