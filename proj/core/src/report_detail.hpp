// Internal JSON assembly shared by report.cpp and cli.cpp; not installed.
#ifndef REDSYL_REPORT_DETAIL_HPP
#define REDSYL_REPORT_DETAIL_HPP

#include <nlohmann/json.hpp>

#include "redsyl/analysis.hpp"
#include "redsyl/report.hpp"

namespace redsyl::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json vec_json(const Vec& v);
ordered_json instance_json(const SemidirectGroup& G, const InstanceRequest& request);
ordered_json budgets_json(const Budgets& budgets);
ordered_json p_elements_json(const SemidirectGroup::PElementCount& counts);
ordered_json redundancy_json(const RedundancyResult& r);
ordered_json lambda_json(const std::vector<LambdaEntry>& table);
ordered_json gheri_json(const GheriResult& g);
ordered_json bounds_json(const std::vector<BoundCheck>& bounds);
ordered_json casolo_json(const CasoloResult& c);
ordered_json cover_json(const SemidirectGroup& G, const SylowCover& cover, bool include_vectors);
ordered_json union_ratio_json(const UnionRatioResult& r);

} // namespace redsyl::detail

#endif
