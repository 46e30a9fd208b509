#ifndef REDSYL_REPORT_HPP
#define REDSYL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "redsyl/analysis.hpp"
#include "redsyl/semidirect.hpp"

namespace redsyl {

// What to build: a catalog or file-backed p-group plus one of the two
// construction routes (q only applies to thm1).
struct InstanceRequest {
    std::string group_name;
    std::optional<std::string> group_file;
    Provenance provenance = Provenance::Thm1;
    std::optional<std::uint64_t> q;
};

SemidirectGroup build_instance(const InstanceRequest& request);

// The instances every stock verification sweep runs: small thm1 pairs
// (group, q) plus the thm2 construction on each catalog group that stays
// within the enumeration ceiling.
std::vector<InstanceRequest> default_grid();

struct ReportBundle {
    std::string json;                        // canonical report_v1 document
    std::vector<std::string> failed_checks;  // names of failed paper-implied assertions
};

// The construct-level report: redundancy, Sylow count, p-element counts,
// Gheri and the bound suite. full_suite adds covers, the Casolo ledger, the
// route cross-checks and the exhaustive recount. All quantities are computed
// fresh here; nothing is cached between build and serialization.
ReportBundle build_instance_report(const InstanceRequest& request, const Budgets& budgets,
                                   bool full_suite);

// Human-readable rendering, derived from the JSON document itself.
std::string render_text(const std::string& report_json);

} // namespace redsyl

#endif
