#ifndef SYMPRES_CLI_CLI_HPP
#define SYMPRES_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sympres::cli {

inline constexpr int kExitOk = 0;
/// Engine error, failed check, or regression mismatch.
inline constexpr int kExitFailure = 1;
/// Bad command line or unparseable row spec.
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace sympres::cli

#endif // SYMPRES_CLI_CLI_HPP
