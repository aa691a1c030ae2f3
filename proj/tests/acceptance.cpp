// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "reslab/adversaries.hpp"
#include "reslab/coloring.hpp"
#include "reslab/engine.hpp"
#include "reslab/generators.hpp"
#include "reslab/hamilton.hpp"
#include "reslab/matching.hpp"
#include "reslab/spectral.hpp"

using namespace reslab;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = time_limit_s <= 0 || secs < time_limit_s;
  const bool pass = v.pass && in_time;
  failures += !pass;
  std::printf("%s %2d %s: %s [%.1fs%s]\n", pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs,
              in_time ? "" : " over time limit");
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<TrialRecord> run_sweep(ExperimentConfig c, ResilienceCurve* curve = nullptr) {
  std::vector<TrialRecord> recs;
  ResilienceCurve out = sweep(c, &recs);
  if (curve) *curve = out;
  return recs;
}

ExperimentConfig base_config(Property prop, int n, double p, const std::string& strategy, std::uint64_t seed) {
  ExperimentConfig c;
  c.property = prop;
  c.source = GraphSource{"gnp", n, p, 0};
  c.adversary = AdversarySpec{strategy, MoveMode::remove};
  c.seed = Seed{seed};
  return c;
}

std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (run_cli(args, out, err) != 0) throw Error("cli failed: " + err.str());
  return out.str();
}

}  // namespace

int main() {
  std::printf("reslab acceptance suite\n");

  criterion(1, "matching destruction by isolating the larger half", 60, [] {
    auto c = base_config(Property::perfect_matching, 1000, 0.2, "isolate", 101);
    c.budgets = {1000};
    c.trials = 50;
    const double np = 200, bound = np / 2 + 2 * std::sqrt(np * std::log(1000.0));
    int destroyed = 0, within = 0, worst = 0;
    for (const auto& r : run_sweep(c)) {
      if (r.error || r.outcomes[0].error) continue;
      destroyed += r.outcomes[0].destroyed;
      within += r.outcomes[0].h_max_degree <= bound;
      worst = std::max(worst, r.outcomes[0].h_max_degree);
    }
    return Verdict{destroyed == 50 && within >= 45,
                   fmt("destroyed %d/50, Δ(H) <= %.1f in %d/50 (max %d)", destroyed, bound, within, worst)};
  });

  criterion(2, "matching survives r = 0.3 np (random, min-degree)", 120, [] {
    std::string detail;
    bool ok = true;
    for (const char* strategy : {"random", "min-degree"}) {
      auto c = base_config(Property::perfect_matching, 1000, 0.2, strategy, 202);
      c.budgets = {0.3};
      c.unit = BudgetUnit::fraction_of_np;
      c.trials = 100;
      int survived = 0;
      for (const auto& r : run_sweep(c)) survived += !r.error && !r.outcomes[0].error && !r.outcomes[0].destroyed;
      ok = ok && survived >= 90;
      detail += fmt("%s %d/100 ", strategy, survived);
    }
    return Verdict{ok, detail + "survived (need >= 90)"};
  });

  criterion(3, "Hamiltonicity survives r = 0.3 np (random)", 120, [] {
    auto c = base_config(Property::hamiltonicity, 500, 0.1, "random", 303);
    c.budgets = {0.3};
    c.unit = BudgetUnit::fraction_of_np;
    c.trials = 50;
    int found = 0;
    for (const auto& r : run_sweep(c)) found += !r.error && !r.outcomes[0].error && !r.outcomes[0].destroyed;
    return Verdict{found >= 45, fmt("verified cycle in %d/50 (need >= 45)", found)};
  });

  criterion(4, "rotation-extension finder vs exact oracle on Dirac graphs", 60, [] {
    PosaOptions opts;
    opts.restart_budget = 50;
    Rng rng = make_rng(Seed{404});
    int graphs = 0, agree = 0, verified = 0, returned = 0;
    while (graphs < 500) {
      const int n = std::uniform_int_distribution<int>(3, 12)(rng);
      const double p = std::uniform_real_distribution<double>(0.5, 0.95)(rng);
      Graph g = gnp(n, p, Seed{rng()});
      if (2 * min_degree(g) < n) continue;
      ++graphs;
      auto exact = exact_hamilton(g);
      auto found = posa_find_hamilton(g, Seed{rng()}, opts);
      agree += !exact || found.has_value();
      if (found) {
        ++returned;
        verified += verify_hamilton_cycle(g, *found);
      }
    }
    const bool petersen = !exact_hamilton(petersen_graph()) && !posa_find_hamilton(petersen_graph(), Seed{1}, opts);
    return Verdict{agree == 500 && verified == returned && petersen,
                   fmt("agreement %d/500, verified %d/%d, Petersen none: %s", agree, verified, returned,
                       petersen ? "yes" : "no")};
  });

  criterion(5, "maximum matching vs exhaustive search (n <= 8)", 30, [] {
    Rng rng = make_rng(Seed{505});
    int agree = 0;
    for (int i = 0; i < 500; ++i) {
      const int n = std::uniform_int_distribution<int>(1, 8)(rng);
      const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      Graph g = gnp(n, p, Seed{rng()});
      Matching m = max_matching(g);
      agree += is_valid_matching(g, m) && static_cast<int>(m.size()) == oracle::max_matching_size(g);
    }
    return Verdict{agree == 500, fmt("%d/500 agree", agree)};
  });

  criterion(6, "expander mixing inequality on random_regular(500,10)", 60, [] {
    Graph g = random_regular(500, 10, Seed{606});
    auto prof = spectral::adjacency_spectrum(g);
    Rng rng = make_rng(Seed{607});
    int holds = 0;
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      VertexSet b = random_subset(500, std::uniform_int_distribution<int>(1, 500)(rng), rng);
      VertexSet c = random_subset(500, std::uniform_int_distribution<int>(1, 500)(rng), rng);
      auto m = spectral::mixing_discrepancy(g, prof, b, c);
      holds += m.holds();
      if (m.rhs > 0) worst = std::max(worst, m.lhs / m.rhs);
    }
    return Verdict{holds == 1000, fmt("lhs <= rhs in %d/1000 (max lhs/rhs %.3f, lambda %.3f)", holds, worst, prof.lambda)};
  });

  criterion(7, "k0 at n = 1000, p = 1/2", 1, [] {
    const int k = k0(1000, 0.5);
    const double target = 2 * std::log2(500.0);
    const bool near = std::abs(k - target) <= 3;
    const bool at = k0_inequality_holds(1000, 0.5, k);
    const bool above = !k0_inequality_holds(1000, 0.5, k + 1);
    return Verdict{near && at && above, fmt("k0 = %d vs 2 log2(500) = %.2f; holds at k0: %s, fails at k0+1: %s", k,
                                            target, at ? "yes" : "no", above ? "yes" : "no")};
  });

  criterion(8, "lemma validators at n = 5000, p = 0.05", 120, [] {
    auto deg = validate_lemma("degree-concentration", 5000, 0.05, 20, Seed{808});
    auto cut = validate_lemma("edge-cut", 5000, 0.05, 20, Seed{809}, LemmaOptions{200});
    const bool ok = deg.pass_fraction == 1.0 && cut.sample_pass_fraction >= 0.95;
    return Verdict{ok, fmt("degree concentration %.0f/20 trials; edge cut %.1f%% of %lld samples in band",
                           deg.pass_fraction * 20, 100 * cut.sample_pass_fraction,
                           static_cast<long long>(cut.samples))};
  });

  criterion(9, "partition coloring of G ∪ H (n = 2000, p = 0.5, Δ(H) <= 3)", 180, [] {
    int proper = 0, small = 0;
    int last_colors = 0, last_dsatur = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      Graph g = gnp(2000, 0.5, derive_seed(Seed{909}, stream::graph, i));
      Graph h = random_degree_bounded(g, 3, MoveMode::add, derive_seed(Seed{909}, stream::adversary, i)).h;
      auto u = partition_color_union(g, h, 3, derive_seed(Seed{909}, stream::split, i), 0.5);
      proper += is_proper(edge_union(g, h), u.coloring);
      last_colors = u.coloring.count;
      last_dsatur = dsatur(g).count;
      small += last_colors <= 2 * last_dsatur;
    }
    return Verdict{proper == 100 && small >= 90,
                   fmt("proper %d/100; colors <= 2 dsatur(G) in %d/100 (e.g. %d vs 2*%d)", proper, small, last_colors,
                       last_dsatur)};
  });

  criterion(10, "threshold bracket for isolate-lowest on perfect matching", 300, [] {
    auto c = base_config(Property::perfect_matching, 1000, 0.2, "isolate-lowest", 1010);
    c.budgets = {0.3, 0.4, 0.45, 0.5, 0.55, 0.6, 0.7};
    c.unit = BudgetUnit::fraction_of_np;
    c.trials = 30;
    ResilienceCurve curve;
    run_sweep(c, &curve);
    if (!curve.normalized_threshold) return Verdict{false, "curve never reaches 1/2"};
    const double t = *curve.normalized_threshold;
    return Verdict{t >= 0.45 && t <= 0.62, fmt("r*/np = %.4f (bracket [0.45, 0.62])", t)};
  });

  criterion(11, "determinism of JSON summaries", 0, [] {
    const std::vector<std::vector<std::string>> commands{
        {"sweep", "--n", "1000", "--p", "0.2", "--strategy", "isolate-lowest", "--budgets",
         "0.3,0.4,0.45,0.5,0.55,0.6,0.7", "--fractions", "--trials", "30", "--seed", "1010"},
        {"sweep", "--n", "500", "--p", "0.1", "--property", "hamiltonicity", "--strategy", "random", "--budgets", "0.3",
         "--fractions", "--trials", "10", "--seed", "303"},
        {"attack", "--n", "1000", "--p", "0.2", "--strategy", "isolate", "--budget", "1000", "--seed", "101"},
        {"validate", "--lemma", "edge-cut", "--n", "2000", "--p", "0.05", "--trials", "5", "--seed", "809"},
    };
    int identical = 0;
    for (const auto& args : commands) {
      auto threaded = args;
      threaded.insert(threaded.end(), {"--threads", "3"});
      const bool sweep_like = args[0] == "sweep" || args[0] == "validate";
      identical += cli(args) == cli(sweep_like ? threaded : args);
    }
    return Verdict{identical == static_cast<int>(commands.size()),
                   fmt("%d/%zu commands byte-identical on rerun", identical, commands.size())};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
