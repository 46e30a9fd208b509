#include "redsyl/cli.hpp"

#include <fstream>
#include <sstream>

#include "redsyl/report.hpp"
#include "redsyl/version.hpp"
#include "report_detail.hpp"

namespace redsyl {

namespace {

using detail::ordered_json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooLargeToEnumerate:
        case ErrorKind::ExactBudgetExceeded:
            return kExitBudget;
        default:
            return kExitConfig;
    }
}

Budgets budgets_from(const RunConfig& config) {
    Budgets b;
    if (config.ceiling) b.enumeration_ceiling = *config.ceiling;
    if (config.node_budget) b.exact_cover_node_budget = *config.node_budget;
    return b;
}

InstanceRequest request_from(const RunConfig& config) {
    if (config.thm1 == config.thm2) {
        throw Error(ErrorKind::ConfigError, "exactly one of --thm1 / --thm2 is required");
    }
    if (config.thm2 && config.q) {
        throw Error(ErrorKind::ConfigError, "thm2 does not take --q");
    }
    if (config.group.empty() && !config.group_file) {
        throw Error(ErrorKind::ConfigError, "--group or --group-file is required");
    }
    InstanceRequest req;
    req.group_name = config.group;
    req.group_file = config.group_file;
    req.provenance = config.thm1 ? Provenance::Thm1 : Provenance::Thm2;
    req.q = config.q;
    return req;
}

void emit(const RunConfig& config, const std::string& json_doc, std::ostream& out) {
    const std::string text = config.format == "text" ? render_text(json_doc) : json_doc;
    if (config.out_path) {
        std::ofstream file(*config.out_path);
        if (!file) throw Error(ErrorKind::ConfigError, "cannot open output file " + *config.out_path);
        file << text;
    } else {
        out << text;
    }
}

ordered_json config_echo(const RunConfig& config, const Budgets& budgets) {
    ordered_json cfg;
    cfg["command"] = config.command;
    if (!config.group.empty()) cfg["group"] = config.group;
    if (config.group_file) cfg["group_file"] = *config.group_file;
    if (config.thm1) cfg["provenance"] = "thm1";
    if (config.thm2) cfg["provenance"] = "thm2";
    if (config.q) cfg["q"] = *config.q;
    cfg["budgets"] = detail::budgets_json(budgets);
    return cfg;
}

int run_construct_or_verify(const RunConfig& config, std::ostream& out) {
    const ReportBundle bundle =
        build_instance_report(request_from(config), budgets_from(config), config.command == "verify");
    emit(config, bundle.json, out);
    return bundle.failed_checks.empty() ? kExitOk : kExitCounterexample;
}

int run_table(const RunConfig& config, std::ostream& out) {
    if (config.pmax > 101) {
        throw Error(ErrorKind::ConfigError, "pmax must be at most 101");
    }
    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["config"] = config_echo(config, budgets_from(config));
    ordered_json rows = ordered_json::array();
    for (std::uint64_t p = 2; p <= config.pmax; ++p) {
        if (!is_prime(p)) continue;
        const std::uint64_t q = smallest_prime_power_1modp(p);
        const auto [base, k] = *prime_power_decompose(q);
        ordered_json row;
        row["p"] = p;
        row["q"] = q;
        row["value"] = big_str(big_pow(BigInt(q), p + 1));
        row["value_base"] = base;
        row["value_exponent"] = static_cast<std::uint64_t>(k) * (p + 1);
        rows.push_back(row);
    }
    j["rows"] = rows;
    emit(config, j.dump(2) + "\n", out);
    return kExitOk;
}

int run_scan(const RunConfig& config, std::ostream& out) {
    if (!config.default_grid && !config.thm1 && !config.thm2) {
        throw Error(ErrorKind::ConfigError, "scan needs --default or --thm1 and/or --thm2");
    }
    if (config.thm1 && config.qs.empty() && !config.groups.empty()) {
        throw Error(ErrorKind::ConfigError, "scan --thm1 needs --qs");
    }
    const Budgets budgets = budgets_from(config);

    struct Cell {
        std::string group;
        Provenance prov;
        std::optional<std::uint64_t> q;
    };
    std::vector<Cell> grid;
    if (config.default_grid) {
        for (const InstanceRequest& r : default_grid()) grid.push_back({r.group_name, r.provenance, r.q});
    }
    for (const auto& g : config.groups) {
        if (config.thm1) {
            for (std::uint64_t q : config.qs) grid.push_back({g, Provenance::Thm1, q});
        }
        if (config.thm2) grid.push_back({g, Provenance::Thm2, std::nullopt});
    }

    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    {
        ordered_json cfg = config_echo(config, budgets);
        cfg["groups"] = config.groups;
        cfg["qs"] = config.qs;
        j["config"] = cfg;
    }

    bool counterexample = false;
    std::map<std::uint64_t, BigInt> min_nu; // per prime, over redundant instances
    ordered_json rows = ordered_json::array();
    for (const Cell& cell : grid) {
        ordered_json row;
        row["group"] = cell.group;
        row["provenance"] = provenance_name(cell.prov);
        if (cell.q) row["q"] = *cell.q;
        try {
            InstanceRequest req;
            req.group_name = cell.group;
            req.provenance = cell.prov;
            req.q = cell.q;
            const SemidirectGroup G = build_instance(req);
            const RedundancyResult red = is_redundant(G, budgets);
            const auto counts = G.count_p_elements();
            row["p"] = G.pgroup().p();
            row["g_order"] = big_str(G.order());
            row["nu_p"] = big_str(G.sylow_count());
            row["g_p"] = big_str(counts.total);
            row["frobenius_multiplier"] = big_str(counts.frobenius_multiplier);
            row["redundant"] = red.redundant;
            if (red.oracle_redundant) {
                row["oracle_agrees"] = red.oracle_agrees();
                if (!red.oracle_agrees()) counterexample = true;
            }
            if (red.redundant) {
                const auto it = min_nu.find(G.pgroup().p());
                if (it == min_nu.end() || G.sylow_count() < it->second) {
                    min_nu[G.pgroup().p()] = G.sylow_count();
                }
            }
        } catch (const Error& e) {
            row["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
        }
        rows.push_back(row);
    }
    j["instances"] = rows;
    ordered_json mins;
    for (const auto& [p, nu] : min_nu) mins[std::to_string(p)] = big_str(nu);
    j["min_nu_p_over_redundant"] = mins;
    emit(config, j.dump(2) + "\n", out);
    return counterexample ? kExitCounterexample : kExitOk;
}

int run_cover(const RunConfig& config, std::ostream& out) {
    const Budgets budgets = budgets_from(config);
    const SemidirectGroup G = build_instance(request_from(config));

    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    {
        ordered_json cfg = config_echo(config, budgets);
        cfg["method"] = config.cover_method;
        if (config.cover_method == "common") cfg["pair"] = config.pair_index;
        if (config.union_n) cfg["union_n"] = *config.union_n;
        j["config"] = cfg;
    }
    j["instance"] = detail::instance_json(G, request_from(config));
    j["sylow"] = {{"nu_p", big_str(G.sylow_count())}};

    bool ok = true;
    if (config.cover_method == "common") {
        const std::vector<Vec> points = common_transversal(G, config.pair_index, budgets);
        ordered_json arr = ordered_json::array();
        for (const Vec& v : points) arr.push_back(detail::vec_json(v));
        j["common_transversal"] = {{"pair", config.pair_index}, {"size", points.size()},
                                   {"representatives", arr}};
    } else if (config.cover_method == "transversal") {
        const SylowCover c = transversal_cover(G, budgets);
        j["cover"] = detail::cover_json(G, c, true);
        ok = c.verified;
    } else if (config.cover_method == "improved") {
        const SylowCover c = improved_cover(G, budgets);
        j["cover"] = detail::cover_json(G, c, true);
        ok = c.verified;
    } else if (config.cover_method == "greedy" || config.cover_method == "exact") {
        const MinimalCoverResult c = minimal_cover(
            G, config.cover_method == "exact" ? CoverMethod::Exact : CoverMethod::Greedy, budgets);
        j["cover"] = detail::cover_json(G, c.cover, true);
        j["cover"]["proven_minimum"] = c.exact;
        ok = c.cover.verified;
    } else if (config.cover_method == "all") {
        SylowCover c;
        c.method = CoverMethod::All;
        c.representatives = G.enumerate_sylows(budgets.enumeration_ceiling);
        auto [verified, exhaustive] = verify_cover(G, c.representatives, budgets);
        c.verified = verified;
        c.verified_exhaustively = exhaustive;
        j["cover"] = detail::cover_json(G, c, true);
        ok = c.verified;
    } else {
        throw Error(ErrorKind::ConfigError, "unknown cover method " + config.cover_method);
    }
    if (config.union_n) {
        j["union_ratio"] =
            detail::union_ratio_json(union_ratio(G, *config.union_n, CoverMethod::Exact, budgets));
    }
    emit(config, j.dump(2) + "\n", out);
    return ok ? kExitOk : kExitCounterexample;
}

int run_casolo(const RunConfig& config, std::ostream& out) {
    const Budgets budgets = budgets_from(config);
    const SemidirectGroup G = build_instance(request_from(config));
    const CasoloResult c = check_casolo(G, budgets);
    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["config"] = config_echo(config, budgets);
    j["instance"] = detail::instance_json(G, request_from(config));
    j["casolo"] = detail::casolo_json(c);
    emit(config, j.dump(2) + "\n", out);
    return c.verified ? kExitOk : kExitCounterexample;
}

int run_gheri(const RunConfig& config, std::ostream& out) {
    const Budgets budgets = budgets_from(config);
    const SemidirectGroup G = build_instance(request_from(config));
    const GheriResult g = check_gheri(G, budgets);
    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["config"] = config_echo(config, budgets);
    j["instance"] = detail::instance_json(G, request_from(config));
    j["gheri"] = detail::gheri_json(g);
    emit(config, j.dump(2) + "\n", out);
    return g.satisfied ? kExitOk : kExitCounterexample;
}

} // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "construct" || config.command == "verify") {
            return run_construct_or_verify(config, out);
        }
        if (config.command == "table") return run_table(config, out);
        if (config.command == "scan") return run_scan(config, out);
        if (config.command == "cover") return run_cover(config, out);
        if (config.command == "casolo") return run_casolo(config, out);
        if (config.command == "gheri") return run_gheri(config, out);
        throw Error(ErrorKind::ConfigError, "unknown command " + config.command);
    } catch (const Error& e) {
        ordered_json j;
        j["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
        const std::string doc = j.dump(2) + "\n";
        try {
            emit(config, doc, out);
        } catch (const Error&) {
            out << doc;
        }
        err << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return kExitConfig;
    }
}

} // namespace redsyl
