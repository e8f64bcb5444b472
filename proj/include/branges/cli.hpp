#ifndef BRANGES_CLI_HPP
#define BRANGES_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <branges/cache.hpp>

namespace branges {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum ExitCode { kExitOk = 0, kExitMathFailure = 1, kExitUsage = 2 };

struct RunConfig {
    int maxN = 20;
    int fact1MaxK = 6;
    int sturmMaxN = 12;
    int guessKRange = 6;
    int guessWindow = 30;
    int verifyWindow = 60;
    /// Single column for `guess`; otherwise 0..guessKRange.
    std::optional<int> k;
    int flowSign = -1;
    std::string cacheDir = ".branges-cache";
    std::string format = "text";
};

/// Throws UsageError.
void validate(const RunConfig& cfg);

/// Each command writes its document to `out` (JSON or text) and diagnostics
/// to `err`, and returns an ExitCode.
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_guess(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fact1(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line without the program name, e.g. {"tables", "--max-n", "4"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace branges

#endif
