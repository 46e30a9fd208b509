#ifndef REDSYL_CLI_HPP
#define REDSYL_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace redsyl {

// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitBudget = 3;

// Resolved command-line configuration; one command per run. Identical
// configurations produce byte-identical JSON output.
struct RunConfig {
    std::string command; // construct | verify | table | scan | cover | casolo | gheri

    std::string group;
    std::optional<std::string> group_file;
    bool thm1 = false;
    bool thm2 = false;
    std::optional<std::uint64_t> q;

    std::optional<std::uint64_t> ceiling;     // enumeration ceiling override
    std::optional<std::uint64_t> node_budget; // exact-search node budget override
    std::string format = "json";              // json | text
    std::optional<std::string> out_path;

    std::uint64_t pmax = 29; // table

    std::vector<std::string> groups; // scan grid
    std::vector<std::uint64_t> qs;   // scan grid (thm1)
    bool default_grid = false;       // scan the built-in grid

    std::string cover_method = "improved"; // cover: transversal|improved|greedy|exact|all|common
    int pair_index = 1;                    // cover --method common
    std::optional<int> union_n;            // cover: also report the n-subset union ratio
};

// Runs one command, writing the report to `out` (or the configured file) and
// diagnostics to `err`. Returns the exit code.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace redsyl

#endif
