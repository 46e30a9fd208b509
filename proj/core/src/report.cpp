#include "redsyl/report.hpp"

#include <sstream>

#include "redsyl/version.hpp"
#include "report_detail.hpp"

namespace redsyl {

namespace detail {

ordered_json vec_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (Felem x : v) arr.push_back(x);
    return arr;
}

ordered_json instance_json(const SemidirectGroup& G, const InstanceRequest& request) {
    ordered_json j;
    j["group"] = G.pgroup().name();
    if (request.group_file) j["group_file"] = *request.group_file;
    j["p"] = G.pgroup().p();
    j["group_order"] = G.pgroup().order();
    j["provenance"] = provenance_name(G.action().provenance());
    if (G.action().provenance() == Provenance::Thm1) {
        j["q"] = G.action().thm1_q();
    } else if (const Thm2Data* t = G.action().thm2()) {
        j["q"] = t->scalar_field.order();
        j["zeta"] = t->zeta;
    }
    const FieldGF& f = G.field();
    j["field"] = {{"characteristic", f.characteristic()}, {"degree", f.degree()}, {"order", f.order()}};
    j["n_dim"] = G.dim();
    j["n_order"] = big_str(G.n_order());
    j["g_order"] = big_str(G.order());
    j["c_n_p_dim"] = G.action().fixed_space_all().dim();
    return j;
}

ordered_json budgets_json(const Budgets& budgets) {
    ordered_json j;
    j["enumeration_ceiling"] = budgets.enumeration_ceiling;
    j["exhaustive_group_ceiling"] = budgets.exhaustive_group_ceiling;
    j["exact_cover_max_sylows"] = budgets.exact_cover_max_sylows;
    j["exact_cover_max_universe"] = budgets.exact_cover_max_universe;
    j["exact_cover_node_budget"] = budgets.exact_cover_node_budget;
    j["union_ratio_max_n"] = budgets.union_ratio_max_n;
    return j;
}

ordered_json p_elements_json(const SemidirectGroup::PElementCount& counts) {
    ordered_json j;
    j["total"] = big_str(counts.total);
    j["frobenius_multiplier"] = big_str(counts.frobenius_multiplier);
    ordered_json per = ordered_json::array();
    for (const auto& c : counts.per_class) {
        per.push_back({{"rep", c.rep},
                       {"class_size", c.class_size},
                       {"centralizer_order", big_str(c.centralizer_order)},
                       {"count", big_str(c.count)}});
    }
    j["per_class"] = per;
    return j;
}

ordered_json redundancy_json(const RedundancyResult& r) {
    ordered_json j;
    j["verdict"] = r.redundant;
    ordered_json w = ordered_json::array();
    for (const auto& wit : r.witnesses) {
        w.push_back({{"rep", wit.rep}, {"vector", vec_json(wit.vector)}});
    }
    j["witnesses"] = w;
    if (r.oracle_redundant) {
        j["oracle"] = *r.oracle_redundant;
        j["oracle_agrees"] = r.oracle_agrees();
    }
    return j;
}

ordered_json lambda_json(const std::vector<LambdaEntry>& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : table) {
        ordered_json j = {{"rep", e.rep}, {"class_size", e.class_size}, {"linear", big_str(e.linear)}};
        if (e.enumerated) {
            j["enumerated"] = big_str(*e.enumerated);
            j["agree"] = e.agree();
        }
        arr.push_back(j);
    }
    return arr;
}

ordered_json gheri_json(const GheriResult& g) {
    return {{"lhs", big_str(g.lhs)}, {"rhs", big_str(g.rhs)}, {"satisfied", g.satisfied}};
}

ordered_json bounds_json(const std::vector<BoundCheck>& bounds) {
    ordered_json arr = ordered_json::array();
    for (const auto& b : bounds) {
        arr.push_back({{"name", b.name},
                       {"relation", b.relation},
                       {"lhs", big_str(b.lhs)},
                       {"rhs", big_str(b.rhs)},
                       {"applicable", b.applicable},
                       {"satisfied", b.satisfied}});
    }
    return arr;
}

ordered_json casolo_json(const CasoloResult& c) {
    ordered_json j;
    j["verified"] = c.verified;
    ordered_json arr = ordered_json::array();
    for (const auto& e : c.entries) {
        arr.push_back({{"generator", e.generator},
                       {"subgroup_order", e.subgroup_order},
                       {"lambda", big_str(e.lambda)},
                       {"lambda_enumerated", e.lambda_was_enumerated},
                       {"lambda_linear", big_str(e.lambda_linear)},
                       {"normalizer_index", big_str(e.normalizer_index)},
                       {"fixed_order", big_str(e.fixed_order)},
                       {"holds", e.holds}});
    }
    j["subgroups"] = arr;
    return j;
}

ordered_json cover_json(const SemidirectGroup& G, const SylowCover& cover, bool include_vectors) {
    ordered_json j;
    j["method"] = cover_method_name(cover.method);
    j["size"] = cover.representatives.size();
    j["verified"] = cover.verified;
    j["verified_exhaustively"] = cover.verified_exhaustively;
    if (cover.method == CoverMethod::Greedy || cover.method == CoverMethod::Exact) {
        // ceil((|G_p| - 1) / (|P| - 1)): no cover can beat this.
        const BigInt gp = G.count_p_elements().total;
        const BigInt denom = BigInt(G.pgroup().order()) - 1;
        if (denom > 0) j["trivial_lower_bound"] = big_str((gp - 1 + denom - 1) / denom);
    }
    j["bounds"] = bounds_json(cover_bound_checks(G, cover));
    if (include_vectors) {
        ordered_json arr = ordered_json::array();
        for (const Vec& v : cover.representatives) arr.push_back(vec_json(v));
        j["representatives"] = arr;
    }
    return j;
}

ordered_json union_ratio_json(const UnionRatioResult& r) {
    BigInt num = r.numerator, den = r.denominator;
    const BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    ordered_json j;
    j["n"] = r.n;
    j["union_size"] = big_str(r.numerator);
    j["g_p_size"] = big_str(r.denominator);
    j["ratio"] = big_str(num) + "/" + big_str(den);
    j["exact"] = r.exact;
    j["covers_all"] = r.covers_all;
    return j;
}

} // namespace detail

std::vector<InstanceRequest> default_grid() {
    std::vector<InstanceRequest> grid;
    const std::vector<std::pair<std::string, std::uint64_t>> thm1 = {
        {"C2^2", 3}, {"C2^2", 5}, {"C2^2", 7}, {"C4xC2", 3}, {"D8", 3}, {"Q8", 3}, {"C3^2", 2}};
    for (const auto& [name, q] : thm1) {
        InstanceRequest r;
        r.group_name = name;
        r.provenance = Provenance::Thm1;
        r.q = q;
        grid.push_back(std::move(r));
    }
    for (const char* name : {"C2^2", "C4xC2", "D8", "Q8", "M16", "C3^2", "C9xC3", "Heis3"}) {
        InstanceRequest r;
        r.group_name = name;
        r.provenance = Provenance::Thm2;
        grid.push_back(std::move(r));
    }
    return grid;
}

SemidirectGroup build_instance(const InstanceRequest& request) {
    PGroup group = request.group_file ? PGroup::from_json_file(*request.group_file)
                                      : PGroup::catalog(request.group_name);
    auto shared = std::make_shared<const PGroup>(std::move(group));
    switch (request.provenance) {
        case Provenance::Thm1:
            if (!request.q) throw Error(ErrorKind::ConfigError, "thm1 requires --q");
            return SemidirectGroup(thm1_action(shared, *request.q));
        case Provenance::Thm2:
            if (request.q) throw Error(ErrorKind::ConfigError, "thm2 does not take --q");
            return SemidirectGroup(thm2_action(shared));
        case Provenance::Custom:
            throw Error(ErrorKind::ConfigError, "custom actions are library-level only");
    }
    throw Error(ErrorKind::ConfigError, "unreachable provenance");
}

ReportBundle build_instance_report(const InstanceRequest& request, const Budgets& budgets,
                                   bool full_suite) {
    using detail::ordered_json;

    const SemidirectGroup G = build_instance(request);
    std::vector<std::string> failed;

    const RedundancyResult redundancy = is_redundant(G, budgets);
    if (!redundancy.oracle_agrees()) failed.push_back("redundancy_oracle_mismatch");

    const std::vector<LambdaEntry> lambdas = lambda_table(G, budgets);
    for (const auto& e : lambdas) {
        if (!e.agree()) failed.push_back("lambda_route_mismatch");
    }

    const auto counts = G.count_p_elements();
    const GheriResult gheri = check_gheri(G, budgets);
    if (!gheri.satisfied) failed.push_back("gheri_inequality");

    const std::vector<BoundCheck> bounds = check_bounds(G, redundancy, gheri, lambdas, budgets);
    for (const auto& b : bounds) {
        if (b.applicable && !b.satisfied) failed.push_back(b.name);
    }

    ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    ordered_json cfg;
    cfg["command"] = full_suite ? "verify" : "construct";
    cfg["group"] = request.group_name;
    if (request.group_file) cfg["group_file"] = *request.group_file;
    cfg["provenance"] = provenance_name(request.provenance);
    if (request.q) cfg["q"] = *request.q;
    cfg["budgets"] = detail::budgets_json(budgets);
    j["config"] = cfg;
    j["instance"] = detail::instance_json(G, request);
    j["sylow"] = {{"nu_p", big_str(G.sylow_count())}};
    j["p_elements"] = detail::p_elements_json(counts);
    j["redundant"] = detail::redundancy_json(redundancy);
    j["lambda"] = detail::lambda_json(lambdas);
    j["gheri"] = detail::gheri_json(gheri);

    if (full_suite) {
        // Independent recount by powering every element; a ceiling only
        // disables the recount, never the report.
        if (G.order() <= budgets.exhaustive_group_ceiling &&
            G.n_order() <= budgets.enumeration_ceiling) {
            const BigInt exhaustive = count_p_elements_exhaustive(G, budgets);
            j["p_elements"]["exhaustive_total"] = big_str(exhaustive);
            if (exhaustive != counts.total) failed.push_back("p_element_count_mismatch");
        }

        ordered_json covers;
        auto run_cover = [&](const char* key, auto&& make) {
            try {
                const SylowCover cover = make();
                covers[key] = detail::cover_json(G, cover, true);
                if (!cover.verified) failed.push_back(std::string("cover_") + key + "_verification");
                for (const auto& b : cover_bound_checks(G, cover)) {
                    if (b.applicable && !b.satisfied) failed.push_back(b.name);
                }
                return cover.representatives.size();
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::TooLargeToEnumerate ||
                    e.kind() == ErrorKind::ExactBudgetExceeded ||
                    e.kind() == ErrorKind::WrongProvenance) {
                    covers[key] = {{"skipped", error_kind_name(e.kind())}};
                    return std::size_t{0};
                }
                throw;
            }
        };
        run_cover("transversal", [&] { return transversal_cover(G, budgets); });
        const std::size_t improved_size =
            run_cover("improved", [&] { return improved_cover(G, budgets); });
        std::size_t greedy_size = 0, exact_size = 0;
        bool exact_ran = false;
        try {
            const MinimalCoverResult greedy = minimal_cover(G, CoverMethod::Greedy, budgets);
            covers["greedy"] = detail::cover_json(G, greedy.cover, true);
            greedy_size = greedy.cover.representatives.size();
            const MinimalCoverResult exact = minimal_cover(G, CoverMethod::Exact, budgets);
            covers["exact"] = detail::cover_json(G, exact.cover, true);
            covers["exact"]["proven_minimum"] = exact.exact;
            exact_size = exact.cover.representatives.size();
            exact_ran = exact.exact;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TooLargeToEnumerate ||
                e.kind() == ErrorKind::ExactBudgetExceeded) {
                covers["minimal"] = {{"skipped", error_kind_name(e.kind())}};
            } else {
                throw;
            }
        }
        if (exact_ran && improved_size > 0 &&
            !(exact_size <= greedy_size && greedy_size <= improved_size)) {
            failed.push_back("minimal_cover_chain");
        }
        j["covers"] = covers;

        const CasoloResult casolo = check_casolo(G, budgets);
        j["casolo"] = detail::casolo_json(casolo);
        if (!casolo.verified) failed.push_back("casolo_identity");
    }

    j["bounds"] = detail::bounds_json(bounds);
    ordered_json failed_json = ordered_json::array();
    for (const auto& name : failed) failed_json.push_back(name);
    j["checks_failed"] = failed_json;

    return ReportBundle{j.dump(2) + "\n", failed};
}

namespace {

void render_value(const nlohmann::ordered_json& v, const std::string& indent, std::ostream& out);

void render_object(const nlohmann::ordered_json& obj, const std::string& indent, std::ostream& out) {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured())) {
            out << indent << key << ":\n";
            render_value(value, indent + "  ", out);
        } else {
            out << indent << key << ": ";
            render_value(value, "", out);
            out << "\n";
        }
    }
}

void render_value(const nlohmann::ordered_json& v, const std::string& indent, std::ostream& out) {
    if (v.is_object()) {
        render_object(v, indent, out);
    } else if (v.is_array()) {
        if (!v.empty() && v[0].is_structured()) {
            for (const auto& item : v) {
                out << indent << "-\n";
                render_value(item, indent + "  ", out);
            }
        } else {
            out << v.dump();
        }
    } else if (v.is_string()) {
        out << v.get<std::string>();
    } else {
        out << v.dump();
    }
}

} // namespace

std::string render_text(const std::string& report_json) {
    const auto j = nlohmann::ordered_json::parse(report_json);
    std::ostringstream out;
    render_object(j, "", out);
    return out.str();
}

} // namespace redsyl
