#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace varhom::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 2, kInternalError = 3 };

struct Report {
    nlohmann::ordered_json machine;
    std::string human;
};

struct CommandOptions {
    bool oracle_check = false;  // openbook
    bool force = false;         // obstruct
};

// Each command parses `text` as a problem file and throws InputError,
// StructuralError or InvariantError on failure.
Report cmd_homology(const std::string& text);
Report cmd_openbook(const std::string& text, const CommandOptions& opts);
Report cmd_obstruct(const std::string& text, const CommandOptions& opts);
Report cmd_loop(const std::string& text);

struct SelftestOptions {
    unsigned long seed = 20240611;
    int random_cases = 50;
};
Report cmd_selftest(const SelftestOptions& opts, bool& all_passed);

/// Full command-line entry point: parses argv, dispatches, prints and maps
/// exceptions to exit codes. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace varhom::cli
