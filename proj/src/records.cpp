#include "reslab/records.hpp"

#include <cmath>
#include <sstream>

namespace reslab {

namespace {

// Non-finite doubles become null rather than invalid JSON.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

const char* version() { return RESLAB_VERSION; }

Json to_json(const ExperimentConfig& c) {
  Json source{{"model", c.source.model}, {"n", c.source.n}};
  if (c.source.model == "gnp")
    source["p"] = c.source.p;
  else
    source["d"] = c.source.d;
  source["np"] = number(c.source.np());
  return Json{
      {"property", to_string(c.property)},
      {"source", source},
      {"strategy", c.adversary.strategy},
      {"mode", to_string(c.adversary.mode)},
      {"budget_unit", c.unit == BudgetUnit::absolute ? "absolute" : "fraction-of-np"},
      {"budgets", c.budgets},
      {"resolved_budgets", c.resolved_budgets()},
      {"trials", c.trials},
      {"seed", c.seed.value},
      {"chromatic_epsilon", c.chromatic_epsilon},
      {"posa", {{"restart_budget", c.posa.restart_budget}, {"rotation_budget", c.posa.rotation_budget}}},
  };
}

Json to_json(const BudgetOutcome& o) {
  Json j{{"r", o.r},
         {"applied", o.applied},
         {"destroyed", o.destroyed},
         {"h_max_degree", o.h_max_degree},
         {"certificate", o.certificate}};
  if (o.chi_base) j["chi_base"] = *o.chi_base;
  if (o.chi_modified) j["chi_modified"] = *o.chi_modified;
  if (o.error) j["error"] = *o.error;
  return j;
}

Json to_json(const TrialRecord& r, bool timing) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(to_json(o));
  Json j{{"trial", r.trial}, {"seed", r.seed.value}, {"n", r.n},
         {"m", r.m},         {"base_holds", r.base_holds}, {"outcomes", outcomes}};
  if (r.error) j["error"] = *r.error;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const CurvePoint& p) {
  return Json{{"r", p.r},
              {"r_over_np", number(p.r_over_np)},
              {"trials", p.trials},
              {"destroyed", p.destroyed},
              {"destroyed_fraction", p.destroyed_fraction},
              {"ci_lo", p.ci_lo},
              {"ci_hi", p.ci_hi},
              {"mean_h_max_degree", p.mean_h_max_degree},
              {"applied_fraction", p.applied_fraction},
              {"errors", p.errors}};
}

Json to_json(const ResilienceCurve& c) {
  Json points = Json::array();
  for (const auto& p : c.points) points.push_back(to_json(p));
  return Json{{"np", number(c.np)},
              {"threshold", optional_json(c.threshold)},
              {"normalized_threshold", optional_json(c.normalized_threshold)},
              {"points", points}};
}

Json to_json(const LemmaReport& r) {
  return Json{{"lemma", r.lemma},
              {"n", r.n},
              {"p", r.p},
              {"trials", r.trials},
              {"pass_fraction", r.pass_fraction},
              {"worst_margin", number(r.worst_margin)},
              {"samples", r.samples},
              {"sample_pass_fraction", r.sample_pass_fraction}};
}

Json summary(const ExperimentConfig& config, const ResilienceCurve& curve) {
  return Json{{"version", version()}, {"config", to_json(config)}, {"curve", to_json(curve)}};
}

std::string to_jsonl(const std::vector<TrialRecord>& records, bool timing) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r, timing).dump();
    out += '\n';
  }
  return out;
}

std::string to_csv(const ResilienceCurve& curve) {
  std::ostringstream os;
  os.precision(17);
  os << "r,r_over_np,trials,destroyed,destroyed_fraction,ci_lo,ci_hi,mean_h_max_degree,applied_fraction,errors\n";
  for (const auto& p : curve.points)
    os << p.r << ',' << p.r_over_np << ',' << p.trials << ',' << p.destroyed << ',' << p.destroyed_fraction << ','
       << p.ci_lo << ',' << p.ci_hi << ',' << p.mean_h_max_degree << ',' << p.applied_fraction << ',' << p.errors
       << '\n';
  return os.str();
}

}  // namespace reslab
