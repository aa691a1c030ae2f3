#include "reslab/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "reslab/coloring.hpp"
#include "reslab/generators.hpp"
#include "reslab/matching.hpp"

namespace reslab {

std::string to_string(Property p) {
  switch (p) {
    case Property::perfect_matching: return "perfect-matching";
    case Property::hamiltonicity: return "hamiltonicity";
    case Property::chromatic_inflation: return "chromatic-inflation";
  }
  return "?";
}

Property parse_property(const std::string& text) {
  if (text == "perfect-matching" || text == "matching") return Property::perfect_matching;
  if (text == "hamiltonicity" || text == "hamilton") return Property::hamiltonicity;
  if (text == "chromatic-inflation" || text == "chromatic") return Property::chromatic_inflation;
  throw Error("unknown property '" + text + "'");
}

double GraphSource::np() const {
  if (model == "gnp") return n * p;
  if (model == "regular") return d;
  throw Error("unknown graph model '" + model + "'");
}

namespace {

const std::vector<std::string> kStrategies{"isolate", "isolate-lowest", "cut", "random", "min-degree", "clique"};

Graph sample_graph(const GraphSource& src, Seed seed) {
  if (src.model == "gnp") return gnp(src.n, src.p, seed);
  if (src.model == "regular") return random_regular(src.n, src.d, seed);
  throw Error("unknown graph model '" + src.model + "'");
}

bool budget_independent(const std::string& strategy) {
  return strategy == "isolate" || strategy == "isolate-lowest" || strategy == "cut";
}

AdversaryMove fixed_move(const std::string& strategy, const Graph& g, Seed seed) {
  if (strategy == "isolate") return isolate_larger_half(g, seed, IsolateVariant::uniform);
  if (strategy == "isolate-lowest") return isolate_larger_half(g, seed, IsolateVariant::lowest_degree);
  return cut_bisection(g, seed);
}

AdversaryMove budget_move(const AdversarySpec& spec, const Graph& g, int r, Seed seed) {
  if (spec.strategy == "random") return random_degree_bounded(g, r, spec.mode, seed);
  if (spec.strategy == "min-degree") return min_degree_attack(g, r, seed);
  if (spec.strategy == "clique") return clique_addition(g, r, seed);
  throw Error("unknown strategy '" + spec.strategy + "'");
}

int chi_hat(const Graph& g, bool& exact) {
  exact = g.order() <= kExactChromaticCap;
  return exact ? exact_chromatic(g) : dsatur(g).count;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (trials < 1) throw Error("trials must be at least 1");
  if (budgets.empty()) throw Error("budgets must be non-empty");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i] < 0) throw Error("budgets must be non-negative");
    if (i > 0 && budgets[i] <= budgets[i - 1]) throw Error("budgets must be strictly ascending");
  }
  if (std::find(kStrategies.begin(), kStrategies.end(), adversary.strategy) == kStrategies.end())
    throw Error("unknown strategy '" + adversary.strategy + "'");
  if (source.model != "gnp" && source.model != "regular") throw Error("unknown graph model '" + source.model + "'");
  if (source.model == "gnp" && !(source.p >= 0.0 && source.p <= 1.0)) throw Error("p must lie in [0,1]");
  if (chromatic_epsilon < 0) throw Error("chromatic epsilon must be non-negative");
}

std::vector<int> ExperimentConfig::resolved_budgets() const {
  std::vector<int> out;
  const double scale = unit == BudgetUnit::fraction_of_np ? source.np() : 1.0;
  for (double b : budgets) out.push_back(static_cast<int>(std::lround(b * scale)));
  return out;
}

WilsonInterval wilson_interval(int successes, int trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = trials;
  const double phat = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {successes == 0 ? 0.0 : std::max(0.0, center - half), successes == trials ? 1.0 : std::min(1.0, center + half)};
}

std::optional<double> fit_threshold(const std::vector<CurvePoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].destroyed_fraction < 0.5) continue;
    if (i == 0) return points[0].r;
    const auto& a = points[i - 1];
    const auto& b = points[i];
    const double t = (0.5 - a.destroyed_fraction) / (b.destroyed_fraction - a.destroyed_fraction);
    return a.r + t * (b.r - a.r);
  }
  return std::nullopt;
}

InflationOutcome chromatic_inflation_trial(const Graph& g, const Graph& h, double epsilon) {
  InflationOutcome out;
  bool exact_base = false, exact_mod = false;
  out.chi_base = chi_hat(g, exact_base);
  out.chi_modified = h.size() == 0 ? out.chi_base : chi_hat(edge_union(g, h), exact_mod);
  if (h.size() == 0) exact_mod = exact_base;
  out.exact = exact_base && exact_mod;
  out.destroyed = out.chi_modified > (1.0 + epsilon) * out.chi_base;
  return out;
}

BudgetOutcome evaluate_move(const Graph& g, const AdversaryMove* move, const CheckOptions& opts) {
  BudgetOutcome out;
  Graph target = move ? apply_move(g, *move) : g;
  if (move) {
    out.r = move->budget;
    out.applied = true;
    out.h_max_degree = max_degree(move->h);
  }
  switch (opts.property) {
    case Property::perfect_matching:
      out.destroyed = !has_perfect_matching(target);
      if (out.destroyed) out.certificate = kCertDestroyed;
      break;
    case Property::hamiltonicity: {
      auto cycle = posa_find_hamilton(target, opts.checker_seed, opts.posa);
      out.destroyed = !cycle;
      if (out.destroyed) {
        const bool proven = target.order() <= kExactHamiltonCap ? !exact_hamilton(target)
                                                               : (move && opts.structural_move);
        out.certificate = proven ? kCertDestroyed : kCertDestroyedUnverified;
      }
      break;
    }
    case Property::chromatic_inflation: {
      bool exact_base = false, exact_mod = false;
      const int base = chi_hat(g, exact_base);
      const int modified = move ? chi_hat(target, exact_mod) : base;
      if (!move) exact_mod = exact_base;
      out.chi_base = base;
      out.chi_modified = modified;
      out.destroyed = modified > (1.0 + opts.chromatic_epsilon) * base;
      if (out.destroyed) out.certificate = exact_base && exact_mod ? kCertDestroyed : kCertDestroyedUnverified;
      break;
    }
  }
  if (!out.destroyed) out.certificate = kCertSurvived;
  return out;
}

AdversaryMove plan_move(const AdversarySpec& spec, const Graph& g, int r, Seed seed) {
  if (budget_independent(spec.strategy)) return fixed_move(spec.strategy, g, seed);
  return budget_move(spec, g, r, seed);
}

bool is_budget_independent(const std::string& strategy) { return budget_independent(strategy); }

TrialRecord run_trial(const ExperimentConfig& config, int trial_index) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.trial = trial_index;
  rec.seed = derive_seed(config.seed, stream::trial, static_cast<std::uint64_t>(trial_index));
  const auto budgets = config.resolved_budgets();

  try {
    Graph g = sample_graph(config.source, derive_seed(rec.seed, stream::graph));
    rec.n = g.order();
    rec.m = g.size();
    const Seed adversary_seed = derive_seed(rec.seed, stream::adversary);
    CheckOptions check{config.property, config.chromatic_epsilon, config.posa, {},
                       budget_independent(config.adversary.strategy)};

    // The base property is evaluated once and reused whenever a move is unaffordable.
    check.checker_seed = derive_seed(rec.seed, stream::checker, budgets.size());
    const BudgetOutcome base = evaluate_move(g, nullptr, check);
    rec.base_holds = !base.destroyed;

    std::optional<AdversaryMove> fixed;
    std::optional<std::string> fixed_error;
    if (budget_independent(config.adversary.strategy)) {
      try {
        fixed = fixed_move(config.adversary.strategy, g, adversary_seed);
      } catch (const Error& e) {
        fixed_error = e.what();
      }
    }

    for (std::size_t i = 0; i < budgets.size(); ++i) {
      BudgetOutcome out;
      out.r = budgets[i];
      try {
        if (fixed_error) throw Error(*fixed_error);
        std::optional<AdversaryMove> move;
        if (fixed) {
          if (fixed->budget <= out.r) move = *fixed;
        } else {
          move = budget_move(config.adversary, g, out.r, adversary_seed);
          if (move->h.size() == 0) move.reset();
        }
        if (!move) {
          out = base;
        } else {
          move->budget = out.r;
          validate_move(g, *move);  // budget audit before the checker runs
          check.checker_seed = derive_seed(rec.seed, stream::checker, i);
          out = evaluate_move(g, &*move, check);
        }
        out.r = budgets[i];
      } catch (const Error& e) {
        out.error = e.what();
      }
      rec.outcomes.push_back(std::move(out));
    }
  } catch (const Error& e) {
    rec.error = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ResilienceCurve aggregate(const ExperimentConfig& config, const std::vector<TrialRecord>& records) {
  ResilienceCurve curve;
  curve.np = config.source.np();
  const auto budgets = config.resolved_budgets();
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    CurvePoint pt;
    pt.r = budgets[i];
    pt.r_over_np = curve.np > 0 ? pt.r / curve.np : 0.0;
    double degree_sum = 0.0;
    int applied = 0;
    for (const auto& rec : records) {
      if (rec.error || i >= rec.outcomes.size() || rec.outcomes[i].error) {
        ++pt.errors;
        continue;
      }
      const auto& o = rec.outcomes[i];
      ++pt.trials;
      pt.destroyed += o.destroyed;
      applied += o.applied;
      degree_sum += o.h_max_degree;
    }
    if (pt.trials > 0) {
      pt.destroyed_fraction = static_cast<double>(pt.destroyed) / pt.trials;
      pt.mean_h_max_degree = degree_sum / pt.trials;
      pt.applied_fraction = static_cast<double>(applied) / pt.trials;
    }
    auto ci = wilson_interval(pt.destroyed, pt.trials);
    pt.ci_lo = ci.lo;
    pt.ci_hi = ci.hi;
    curve.points.push_back(pt);
  }
  curve.threshold = fit_threshold(curve.points);
  if (curve.threshold && curve.np > 0) curve.normalized_threshold = *curve.threshold / curve.np;
  return curve;
}

ResilienceCurve sweep(const ExperimentConfig& config, std::vector<TrialRecord>* records) {
  config.validate();
  std::vector<TrialRecord> out(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.threads, [&](int i) { out[i] = run_trial(config, i); });
  ResilienceCurve curve = aggregate(config, out);
  if (records) *records = std::move(out);
  return curve;
}

// ---------------------------------------------------------------------------

std::vector<std::string> lemma_ids() {
  return {"degree-concentration", "max-degree-half", "edge-distribution", "edge-cut", "chromatic-bounds"};
}

namespace {

struct TrialVerdict {
  bool pass = true;
  double margin = std::numeric_limits<double>::infinity();
  std::int64_t samples = 0;
  std::int64_t sample_passes = 0;
};

// Disjoint A, B drawn from one shuffled permutation.
void shuffle_prefix(std::vector<Vertex>& perm, int k, Rng& rng) {
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < k; ++i) std::swap(perm[i], perm[std::uniform_int_distribution<int>(i, n - 1)(rng)]);
}

TrialVerdict lemma_trial(const std::string& id, int n, double p, Seed seed, const LemmaOptions& opts) {
  TrialVerdict v;
  const double np = n * p;
  const double ln_n = std::log(static_cast<double>(n));
  const Seed graph_seed = derive_seed(seed, stream::graph);

  if (id == "degree-concentration") {
    Graph g = gnp(n, p, graph_seed);
    const double bound = np - 2.0 * std::sqrt(np * ln_n);
    v.pass = min_degree(g) >= bound;
    v.margin = (min_degree(g) - bound) / std::max(np, 1.0);
    return v;
  }
  if (id == "max-degree-half") {
    Graph g = gnp(n / 2 + 1, p, graph_seed);
    const double bound = np / 2.0 + 2.0 * std::sqrt(np * ln_n);
    v.pass = max_degree(g) <= bound;
    v.margin = (bound - max_degree(g)) / std::max(np, 1.0);
    return v;
  }
  if (id == "chromatic-bounds") {
    Graph g = gnp(n, p, graph_seed);
    const double center = np / (2.0 * std::log(np));
    const double chi = dsatur(g).count;
    const double lo = (1.0 - opts.epsilon / 4.0) * center;
    const double hi = (1.0 + opts.epsilon / 4.0) * center;
    v.pass = chi > lo && chi < hi;
    v.margin = std::min(chi - lo, hi - chi) / center;
    return v;
  }
  if (id != "edge-distribution" && id != "edge-cut") throw Error("unknown lemma id '" + id + "'");

  Graph g = gnp(n, p, graph_seed);
  std::vector<Vertex> perm(n);
  std::vector<char> in_b(n);
  const double band = opts.band_scale / ln_n;
  for (int s = 0; s < opts.samples; ++s) {
    Rng rng = make_rng(derive_seed(seed, stream::sample, static_cast<std::uint64_t>(s)));
    std::iota(perm.begin(), perm.end(), 0);
    bool ok = true;
    double margin = 0.0;
    if (id == "edge-distribution") {
      const int size = std::uniform_int_distribution<int>(1, std::max(1, n / 4))(rng);
      shuffle_prefix(perm, 2 * size, rng);
      std::fill(in_b.begin(), in_b.end(), 0);
      for (int i = size; i < 2 * size; ++i) in_b[perm[i]] = 1;
      std::int64_t e = 0;
      for (int i = 0; i < size; ++i)
        for (Vertex w : g.neighbors(perm[i])) e += in_b[w];
      const double bound = size * (np / 4.0 + std::sqrt(2.0 * np * ln_n));
      ok = e <= bound;
      margin = (bound - e) / (size * std::max(np, 1.0));
    } else {
      const int a = std::uniform_int_distribution<int>(1, std::max(1, n - 1))(rng);
      shuffle_prefix(perm, a, rng);
      std::fill(in_b.begin(), in_b.end(), 1);
      for (int i = 0; i < a; ++i) in_b[perm[i]] = 0;
      std::int64_t e = 0;
      for (int i = 0; i < a; ++i)
        for (Vertex w : g.neighbors(perm[i])) e += in_b[w];
      const double expected = static_cast<double>(a) * (n - a) * p;
      const double rel = expected > 0 ? std::abs(e - expected) / expected : (e == 0 ? 0.0 : 1.0);
      ok = rel <= band;
      margin = band - rel;
    }
    ++v.samples;
    v.sample_passes += ok;
    v.margin = std::min(v.margin, margin);
  }
  if (id == "edge-distribution")
    v.pass = v.sample_passes == v.samples;
  else
    v.pass = v.samples == 0 || static_cast<double>(v.sample_passes) / v.samples >= opts.sample_quorum;
  return v;
}

}  // namespace

LemmaReport validate_lemma(const std::string& lemma_id, int n, double p, int trials, Seed seed,
                           const LemmaOptions& opts) {
  auto ids = lemma_ids();
  if (std::find(ids.begin(), ids.end(), lemma_id) == ids.end()) throw Error("unknown lemma id '" + lemma_id + "'");
  if (n < 2) throw Error("validate_lemma: n must be at least 2");
  if (!(p > 0.0 && p <= 1.0)) throw Error("validate_lemma: p must lie in (0,1]");
  if (trials < 1) throw Error("validate_lemma: trials must be at least 1");

  std::vector<TrialVerdict> verdicts(trials);
  parallel_for(trials, opts.threads, [&](int t) {
    verdicts[t] = lemma_trial(lemma_id, n, p, derive_seed(seed, stream::trial, static_cast<std::uint64_t>(t)), opts);
  });

  LemmaReport report;
  report.lemma = lemma_id;
  report.n = n;
  report.p = p;
  report.trials = trials;
  int passes = 0;
  std::int64_t sample_passes = 0;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& v : verdicts) {
    passes += v.pass;
    report.samples += v.samples;
    sample_passes += v.sample_passes;
    report.worst_margin = std::min(report.worst_margin, v.margin);
  }
  report.pass_fraction = static_cast<double>(passes) / trials;
  report.sample_pass_fraction = report.samples > 0 ? static_cast<double>(sample_passes) / report.samples : 1.0;
  return report;
}

}  // namespace reslab
