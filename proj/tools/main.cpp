#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redsyl/cli.hpp"
#include "redsyl/version.hpp"

namespace {

struct RawOptions {
    std::string group;
    std::string group_file;
    std::uint64_t q = 0;
    bool has_q = false;
    std::uint64_t ceiling = 0;
    bool has_ceiling = false;
    std::uint64_t budget = 0;
    bool has_budget = false;
    std::string format = "json";
    std::string out_path;
};

void add_instance_options(CLI::App* sub, RawOptions& raw, redsyl::RunConfig& cfg) {
    sub->add_flag("--thm1", cfg.thm1, "use the regular-quotient construction (needs --q)");
    sub->add_flag("--thm2", cfg.thm2, "use the root-of-unity construction");
    sub->add_option("--group", raw.group, "catalog name, e.g. C2^2, Q8, D8, Heis3");
    sub->add_option("--group-file", raw.group_file, "JSON multiplication-table file");
    sub->add_option("--q", raw.q, "prime q for --thm1")->each([&raw](const std::string&) {
        raw.has_q = true;
    });
}

void add_common_options(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--ceiling", raw.ceiling, "enumeration ceiling override")
        ->each([&raw](const std::string&) { raw.has_ceiling = true; });
    sub->add_option("--budget", raw.budget, "exact-search node budget override")
        ->each([&raw](const std::string&) { raw.has_budget = true; });
    sub->add_option("--format", raw.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", raw.out_path, "write the report to this file");
}

void finalize(const RawOptions& raw, redsyl::RunConfig& cfg) {
    cfg.group = raw.group;
    if (!raw.group_file.empty()) cfg.group_file = raw.group_file;
    if (raw.has_q) cfg.q = raw.q;
    if (raw.has_ceiling) cfg.ceiling = raw.ceiling;
    if (raw.has_budget) cfg.node_budget = raw.budget;
    cfg.format = raw.format;
    if (!raw.out_path.empty()) cfg.out_path = raw.out_path;
}

} // namespace

int main(int argc, char** argv) {
    redsyl::RunConfig cfg;
    RawOptions raw;
    int union_n = 0;
    bool has_union_n = false;

    CLI::App app{"exact constructions and checks for redundant Sylow p-subgroups"};
    app.set_version_flag("--version", std::string(redsyl::kVersion));
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build an instance and report its invariants");
    add_instance_options(construct, raw, cfg);
    add_common_options(construct, raw);

    auto* verify = app.add_subcommand("verify", "run the full verification suite on an instance");
    add_instance_options(verify, raw, cfg);
    add_common_options(verify, raw);

    auto* table = app.add_subcommand("table", "smallest q = 1 (mod p) and q^(p+1) per prime");
    table->add_option("--pmax", cfg.pmax, "largest prime to include");
    add_common_options(table, raw);

    auto* scan = app.add_subcommand("scan", "run a grid of instances and summarize");
    scan->add_flag("--thm1", cfg.thm1, "include thm1 instances (needs --qs)");
    scan->add_flag("--thm2", cfg.thm2, "include thm2 instances");
    scan->add_flag("--default", cfg.default_grid, "scan the built-in default grid");
    scan->add_option("--groups", cfg.groups, "comma-separated catalog names")->delimiter(',');
    scan->add_option("--qs", cfg.qs, "comma-separated primes for thm1")->delimiter(',');
    add_common_options(scan, raw);

    auto* cover = app.add_subcommand("cover", "construct and verify Sylow covers");
    add_instance_options(cover, raw, cfg);
    cover->add_option("--method", cfg.cover_method,
                      "transversal | improved | greedy | exact | all | common");
    cover->add_option("--pair", cfg.pair_index, "pair index for --method common");
    cover->add_option("--union-n", union_n, "also report the best n-subset union ratio")
        ->each([&has_union_n](const std::string&) { has_union_n = true; });
    add_common_options(cover, raw);

    auto* casolo = app.add_subcommand("casolo", "check the subgroup-counting identity");
    add_instance_options(casolo, raw, cfg);
    add_common_options(casolo, raw);

    auto* gheri = app.add_subcommand("gheri", "check the lambda product inequality");
    add_instance_options(gheri, raw, cfg);
    add_common_options(gheri, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? redsyl::kExitOk : redsyl::kExitConfig;
    }

    for (const auto* sub :
         {construct, verify, table, scan, cover, casolo, gheri}) {
        if (sub->parsed()) cfg.command = sub->get_name();
    }
    finalize(raw, cfg);
    if (has_union_n) cfg.union_n = union_n;

    return redsyl::run_command(cfg, std::cout, std::cerr);
}
