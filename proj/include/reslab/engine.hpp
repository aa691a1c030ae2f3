#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reslab/adversaries.hpp"
#include "reslab/graph.hpp"
#include "reslab/hamilton.hpp"
#include "reslab/rng.hpp"

namespace reslab {

enum class Property { perfect_matching, hamiltonicity, chromatic_inflation };
std::string to_string(Property p);
Property parse_property(const std::string& text);

struct GraphSource {
  std::string model = "gnp";  ///< gnp | regular
  int n = 100;
  double p = 0.5;  ///< gnp only
  int d = 3;       ///< regular only

  /// Expected degree: n*p for gnp, d for regular.
  double np() const;
};

/// Strategy names: isolate, isolate-lowest, cut, random, min-degree, clique.
struct AdversarySpec {
  std::string strategy = "random";
  MoveMode mode = MoveMode::remove;  ///< used by `random`; the others fix their own mode
};

enum class BudgetUnit { absolute, fraction_of_np };

struct ExperimentConfig {
  Property property = Property::perfect_matching;
  GraphSource source;
  AdversarySpec adversary;
  std::vector<double> budgets{0.0};
  BudgetUnit unit = BudgetUnit::absolute;
  int trials = 1;
  Seed seed{};
  double chromatic_epsilon = 0.25;
  PosaOptions posa;
  int threads = 0;  ///< 0: hardware concurrency

  /// Throws on trials < 1, empty or non-ascending budgets, unknown strategy.
  void validate() const;
  /// Integer budgets r, fractions resolved as round(f * np).
  std::vector<int> resolved_budgets() const;
};

/// How much an outcome proves. A destroyed outcome by an exact or structural
/// argument bounds resilience from above; survival only says this strategy failed.
inline constexpr const char* kCertDestroyed = "destroyed";
inline constexpr const char* kCertDestroyedUnverified = "destroyed-unverified";
inline constexpr const char* kCertSurvived = "survived-heuristic";

struct BudgetOutcome {
  int r = 0;
  bool applied = false;     ///< the strategy could act within r
  bool destroyed = false;
  int h_max_degree = 0;     ///< Δ(H) of the applied move (0 if none)
  std::string certificate = kCertSurvived;
  std::optional<int> chi_base, chi_modified;
  std::optional<std::string> error;
};

struct TrialRecord {
  int trial = 0;
  Seed seed{};
  int n = 0;
  std::int64_t m = 0;
  bool base_holds = false;
  std::vector<BudgetOutcome> outcomes;
  std::optional<std::string> error;
  double wall_ms = 0.0;  ///< excluded from summaries
};

struct CurvePoint {
  int r = 0;
  double r_over_np = 0.0;
  int trials = 0;  ///< trials without errors
  int destroyed = 0;
  double destroyed_fraction = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;  ///< Wilson 95%
  double mean_h_max_degree = 0.0;
  double applied_fraction = 0.0;
  int errors = 0;
};

struct ResilienceCurve {
  double np = 0.0;
  std::vector<CurvePoint> points;
  std::optional<double> threshold;             ///< r*: first crossing of 1/2, interpolated
  std::optional<double> normalized_threshold;  ///< r* / np
};

struct WilsonInterval {
  double lo, hi;
};
WilsonInterval wilson_interval(int successes, int trials, double z = 1.959963984540054);

/// First crossing of destroyed_fraction >= 1/2, linearly interpolated between
/// neighboring budgets; nullopt if the curve never reaches 1/2.
std::optional<double> fit_threshold(const std::vector<CurvePoint>& points);

struct CheckOptions {
  Property property = Property::perfect_matching;
  double chromatic_epsilon = 0.25;
  PosaOptions posa;
  Seed checker_seed{};
  /// The move carries its own proof of destruction (an isolated independent
  /// majority or a disconnecting cut), so a failed search counts as proven.
  bool structural_move = false;
};

/// Checks the property on G modified by `move` (G itself when null).
/// chromatic-inflation compares the modified graph against G.
BudgetOutcome evaluate_move(const Graph& g, const AdversaryMove* move, const CheckOptions& opts);

/// The strategy's move against G for budget r. Budget-independent strategies
/// (isolate, isolate-lowest, cut) ignore r; their move.budget is the Δ(H) they need.
AdversaryMove plan_move(const AdversarySpec& spec, const Graph& g, int r, Seed seed);
bool is_budget_independent(const std::string& strategy);

TrialRecord run_trial(const ExperimentConfig& config, int trial_index);

/// Runs all trials (concurrently, config.threads) and folds them in trial order.
ResilienceCurve sweep(const ExperimentConfig& config, std::vector<TrialRecord>* records = nullptr);

ResilienceCurve aggregate(const ExperimentConfig& config, const std::vector<TrialRecord>& records);

struct InflationOutcome {
  bool destroyed = false;
  int chi_base = 0;
  int chi_modified = 0;
  bool exact = false;  ///< both counts exact (n <= 18), otherwise DSATUR
};

/// destroyed iff χ̂(G ∪ H) > (1 + epsilon) χ̂(G).
InflationOutcome chromatic_inflation_trial(const Graph& g, const Graph& h, double epsilon);

// Lemma validators.

struct LemmaOptions {
  int samples = 200;             ///< sampled set (pairs) per trial
  double band_scale = 1.0;       ///< (1 ± band_scale / ln n) for (1+o(1)) statements
  double sample_quorum = 0.95;   ///< sampled lemmas: fraction of samples a trial needs
  double epsilon = 0.25;         ///< chromatic-bounds
  int threads = 0;
};

struct LemmaReport {
  std::string lemma;
  int n = 0;
  double p = 0.0;
  int trials = 0;
  double pass_fraction = 0.0;
  double worst_margin = 0.0;  ///< negative means some trial violated the bound
  std::int64_t samples = 0;
  double sample_pass_fraction = 1.0;
};

/// Known ids: degree-concentration, max-degree-half, edge-distribution,
/// edge-cut, chromatic-bounds.
std::vector<std::string> lemma_ids();
LemmaReport validate_lemma(const std::string& lemma_id, int n, double p, int trials, Seed seed,
                           const LemmaOptions& opts = {});

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace reslab
