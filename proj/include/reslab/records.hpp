#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reslab/engine.hpp"

namespace reslab {

using Json = nlohmann::ordered_json;

const char* version();

Json to_json(const ExperimentConfig& config);
Json to_json(const BudgetOutcome& outcome);
/// Per-trial record; wall time is included only when `timing` is set.
Json to_json(const TrialRecord& record, bool timing = true);
Json to_json(const CurvePoint& point);
Json to_json(const ResilienceCurve& curve);
Json to_json(const LemmaReport& report);

/// Run summary: version, resolved config and curve. Contains nothing
/// time-dependent, so reruns with the same seed are byte-identical.
Json summary(const ExperimentConfig& config, const ResilienceCurve& curve);

/// One JSON object per line.
std::string to_jsonl(const std::vector<TrialRecord>& records, bool timing = true);

/// r,r_over_np,trials,destroyed,destroyed_fraction,ci_lo,ci_hi,mean_h_max_degree,applied_fraction,errors
std::string to_csv(const ResilienceCurve& curve);

}  // namespace reslab
