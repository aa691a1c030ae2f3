#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "reslab/adversaries.hpp"
#include "reslab/coloring.hpp"
#include "reslab/engine.hpp"
#include "reslab/generators.hpp"
#include "reslab/hamilton.hpp"
#include "reslab/matching.hpp"
#include "reslab/records.hpp"

namespace reslab {

namespace {

struct SourceArgs {
  std::string model = "gnp";
  int n = 100;
  double p = 0.5;
  int d = 3;

  GraphSource source() const { return GraphSource{model, n, p, d}; }
};

void add_source_options(CLI::App* app, SourceArgs& a) {
  app->add_option("--model", a.model, "Random graph model")->check(CLI::IsMember({"gnp", "regular"}));
  app->add_option("--n", a.n, "Number of vertices")->check(CLI::PositiveNumber);
  app->add_option("--p", a.p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  app->add_option("--d", a.d, "Degree (regular)")->check(CLI::NonNegativeNumber);
}

// Listed for --help; the file itself is expanded into flags before parsing.
void add_config(CLI::App* app) {
  app->add_option("--config", "Flat key=value file of long options; explicit flags take precedence");
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args)
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  return false;
}

// Replaces "--config FILE" by "--key=value" for every file entry whose key is
// not already on the command line. Blank lines and '#' comments are skipped.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> files;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw Error("--config requires a file");
      files.push_back(args[++i]);
    } else if (args[i].rfind("--config=", 0) == 0) {
      files.push_back(args[i].substr(9));
    } else {
      rest.push_back(args[i]);
    }
  }
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(path + ":" + std::to_string(line_no) + ": expected key=value");
      const std::string key = "--" + trim(line.substr(0, eq));
      if (!given(rest, key)) rest.push_back(key + "=" + trim(line.substr(eq + 1)));
    }
  }
  return rest;
}

// Draws a seed from entropy when none was given, and reports it so the run can be replayed.
Seed resolve_seed(const std::optional<std::uint64_t>& given, std::ostream& err) {
  if (given) return Seed{*given};
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << s << '\n';
  return Seed{s};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error("failed writing '" + path + "'");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text(path, text);
}

Graph generate(const GraphSource& src, Seed seed) {
  if (src.model == "gnp") return gnp(src.n, src.p, seed);
  return random_regular(src.n, src.d, seed);
}

Json check_graph(const Graph& g, Property property, Seed seed, const PosaOptions& posa, bool exact) {
  Json j{{"n", g.order()}, {"m", g.size()}};
  switch (property) {
    case Property::perfect_matching: {
      Matching m = max_matching(g);
      j["perfect"] = m.is_perfect(g.order());
      j["near_perfect"] = m.is_near_perfect(g.order());
      j["matching_size"] = m.size();
      j["method"] = "blossom";
      break;
    }
    case Property::hamiltonicity: {
      auto cycle = exact ? exact_hamilton(g) : posa_find_hamilton(g, seed, posa);
      j["found"] = cycle.has_value();
      j["method"] = exact ? "exact" : "rotation-extension";
      // Without --exact a missing cycle is only a failed search.
      j["certain"] = exact || cycle.has_value();
      if (cycle) j["cycle"] = *cycle;
      break;
    }
    case Property::chromatic_inflation: {
      const bool small = exact || g.order() <= kExactChromaticCap;
      j["chromatic_number"] = small ? exact_chromatic(g) : dsatur(g).count;
      j["method"] = small ? "exact" : "dsatur";
      break;
    }
  }
  return j;
}

Json envelope(Json config, Json result) {
  return Json{{"version", version()}, {"config", std::move(config)}, {"result", std::move(result)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random graph resilience laboratory", "reslab"};
  app.set_version_flag("--version", std::string("reslab ") + version());
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a random graph and write it as an edge list");
  SourceArgs gen_src;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out;
  add_config(gen);
  add_source_options(gen, gen_src);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out,-o", gen_out, "Output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Test a property of a graph read from an edge list");
  std::string check_graph_path, check_property = "perfect-matching";
  std::optional<std::uint64_t> check_seed;
  PosaOptions check_posa;
  add_config(check);
  check->add_option("--graph,-g", check_graph_path, "Edge list file")->required();
  check->add_option("--property", check_property, "perfect-matching | hamiltonicity | chromatic-inflation");
  check->add_option("--seed", check_seed, "Seed for randomized checkers");
  check->add_option("--restarts", check_posa.restart_budget, "Rotation search restarts");
  check->add_option("--rotations", check_posa.rotation_budget, "Rotations per restart (default 50n)");
  bool check_exact = false;
  check->add_flag("--exact", check_exact, "Exact decision (n <= 20 for Hamiltonicity, n <= 18 for coloring)");

  // attack
  auto* attack = app.add_subcommand("attack", "Apply one adversary move and re-check the property");
  SourceArgs atk_src;
  std::string atk_graph_path, atk_property = "perfect-matching", atk_strategy = "random", atk_mode = "delete",
                              atk_h_out;
  int atk_budget = 0;
  double atk_eps = 0.25;
  std::optional<std::uint64_t> atk_seed;
  PosaOptions atk_posa;
  add_config(attack);
  attack->add_option("--graph,-g", atk_graph_path, "Edge list file (otherwise a graph is sampled)");
  add_source_options(attack, atk_src);
  attack->add_option("--property", atk_property, "perfect-matching | hamiltonicity | chromatic-inflation");
  attack->add_option("--strategy", atk_strategy, "isolate | isolate-lowest | cut | random | min-degree | clique");
  attack->add_option("--mode", atk_mode, "delete | add | symmetric-difference (random strategy)");
  attack->add_option("--budget,-r", atk_budget, "Max degree r of the modification")->check(CLI::NonNegativeNumber);
  attack->add_option("--epsilon", atk_eps, "Chromatic inflation tolerance");
  attack->add_option("--seed", atk_seed, "Random seed");
  attack->add_option("--restarts", atk_posa.restart_budget, "Rotation search restarts");
  attack->add_option("--h-out", atk_h_out, "Write the modification H as an edge list");
  std::string atk_h_in, atk_out;
  attack->add_option("--h-in", atk_h_in, "Use this edge list as H instead of a strategy (audited against the budget)");
  attack->add_option("--out,-o", atk_out, "Write the modified graph as an edge list");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimate a resilience curve over a budget grid");
  SourceArgs sw_src;
  std::string sw_property = "perfect-matching", sw_strategy = "random", sw_mode = "delete", sw_out, sw_records,
              sw_csv;
  std::vector<double> sw_budgets{0.0};
  bool sw_fractions = false, sw_timing = false;
  int sw_trials = 20, sw_threads = 0;
  double sw_eps = 0.25;
  std::optional<std::uint64_t> sw_seed;
  PosaOptions sw_posa;
  add_config(sweep_cmd);
  add_source_options(sweep_cmd, sw_src);
  sweep_cmd->add_option("--property", sw_property, "perfect-matching | hamiltonicity | chromatic-inflation");
  sweep_cmd->add_option("--strategy", sw_strategy, "isolate | isolate-lowest | cut | random | min-degree | clique");
  sweep_cmd->add_option("--mode", sw_mode, "delete | add | symmetric-difference (random strategy)");
  sweep_cmd->add_option("--budgets", sw_budgets, "Ascending budget grid, comma separated")->delimiter(',');
  sweep_cmd->add_flag("--fractions", sw_fractions, "Budgets are fractions of np");
  sweep_cmd->add_option("--trials", sw_trials, "Trials per budget")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", sw_threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--epsilon", sw_eps, "Chromatic inflation tolerance");
  sweep_cmd->add_option("--seed", sw_seed, "Random seed");
  sweep_cmd->add_option("--restarts", sw_posa.restart_budget, "Rotation search restarts");
  sweep_cmd->add_option("--out,-o", sw_out, "Summary JSON (default stdout)");
  sweep_cmd->add_option("--records", sw_records, "Per-trial JSON lines");
  sweep_cmd->add_option("--csv", sw_csv, "Curve as CSV");
  sweep_cmd->add_flag("--timing", sw_timing, "Include wall time in per-trial records");

  // validate
  auto* validate = app.add_subcommand("validate", "Check the random-graph lemmas empirically");
  std::string val_lemma = "all";
  int val_n = 1000, val_trials = 20;
  double val_p = 0.5;
  std::optional<std::uint64_t> val_seed;
  LemmaOptions val_opts;
  add_config(validate);
  validate->add_option("--lemma", val_lemma, "Lemma id or 'all'");
  validate->add_option("--n", val_n, "Number of vertices")->check(CLI::PositiveNumber);
  validate->add_option("--p", val_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  validate->add_option("--trials", val_trials, "Independent graphs")->check(CLI::PositiveNumber);
  validate->add_option("--samples", val_opts.samples, "Sampled sets per graph")->check(CLI::NonNegativeNumber);
  validate->add_option("--band-scale", val_opts.band_scale, "Band width c in (1 ± c/ln n)");
  validate->add_option("--epsilon", val_opts.epsilon, "Chromatic bounds epsilon");
  validate->add_option("--threads", val_opts.threads, "Worker threads (0: all cores)");
  validate->add_option("--seed", val_seed, "Random seed");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      const Seed seed = resolve_seed(gen_seed, err);
      const GraphSource src = gen_src.source();
      emit(gen_out, serialize_edge_list(generate(src, seed)), out);
      Json config{{"command", "gen"}, {"model", src.model}, {"n", src.n}, {"seed", seed.value}};
      if (src.model == "gnp")
        config["p"] = src.p;
      else
        config["d"] = src.d;
      // The edge list owns stdout unless it went to a file.
      (gen_out.empty() || gen_out == "-" ? err : out) << Json{{"version", version()}, {"config", config}}.dump() << '\n';
    } else if (check->parsed()) {
      const Graph g = read_edge_list_file(check_graph_path);
      const Seed seed = resolve_seed(check_seed, err);
      const Property property = parse_property(check_property);
      Json config{{"command", "check"},
                  {"graph", check_graph_path},
                  {"property", to_string(property)},
                  {"seed", seed.value},
                  {"exact", check_exact},
                  {"restart_budget", check_posa.restart_budget},
                  {"rotation_budget", check_posa.rotation_budget}};
      out << envelope(config, check_graph(g, property, seed, check_posa, check_exact)).dump(2) << '\n';
    } else if (attack->parsed()) {
      const Seed seed = resolve_seed(atk_seed, err);
      const Graph g = atk_graph_path.empty() ? generate(atk_src.source(), derive_seed(seed, stream::graph))
                                             : read_edge_list_file(atk_graph_path);
      AdversarySpec spec{atk_strategy, parse_move_mode(atk_mode)};
      AdversaryMove move;
      int required = 0;
      bool applied = false;
      if (!atk_h_in.empty()) {
        // A supplied H must pass the audit; a violation is an error, not a skipped move.
        move = AdversaryMove{read_edge_list_file(atk_h_in), spec.mode, atk_budget};
        validate_move(g, move);
        required = max_degree(move.h);
        applied = move.h.size() > 0;
      } else {
        move = plan_move(spec, g, atk_budget, derive_seed(seed, stream::adversary));
        required = is_budget_independent(atk_strategy) ? move.budget : max_degree(move.h);
        applied = required <= atk_budget && move.h.size() > 0;
        move.budget = atk_budget;
        if (applied) validate_move(g, move);
      }
      CheckOptions opts{parse_property(atk_property), atk_eps, atk_posa, derive_seed(seed, stream::checker),
                        atk_h_in.empty() && is_budget_independent(atk_strategy)};
      BudgetOutcome outcome = evaluate_move(g, applied ? &move : nullptr, opts);
      outcome.r = atk_budget;
      const Graph h = applied ? move.h : Graph(g.order());
      Json config{{"command", "attack"},
                  {"graph", atk_graph_path.empty() ? Json(nullptr) : Json(atk_graph_path)},
                  {"property", to_string(opts.property)},
                  {"strategy", atk_h_in.empty() ? Json(atk_strategy) : Json(nullptr)},
                  {"h", atk_h_in.empty() ? Json(nullptr) : Json(atk_h_in)},
                  {"mode", to_string(move.mode)},
                  {"budget", atk_budget},
                  {"epsilon", atk_eps},
                  {"seed", seed.value}};
      if (atk_graph_path.empty()) {
        config["model"] = atk_src.model;
        config["n"] = atk_src.n;
        if (atk_src.model == "gnp")
          config["p"] = atk_src.p;
        else
          config["d"] = atk_src.d;
      }
      Json result{{"n", g.order()},
                  {"m", g.size()},
                  {"required_budget", required},
                  {"h_edges", h.size()},
                  {"h_max_degree", max_degree(h)},
                  {"outcome", to_json(outcome)}};
      if (!atk_h_out.empty()) write_text(atk_h_out, serialize_edge_list(h));
      if (!atk_out.empty()) write_text(atk_out, serialize_edge_list(applied ? apply_move(g, move) : g));
      out << envelope(config, result).dump(2) << '\n';
    } else if (sweep_cmd->parsed()) {
      ExperimentConfig config;
      config.property = parse_property(sw_property);
      config.source = sw_src.source();
      config.adversary = AdversarySpec{sw_strategy, parse_move_mode(sw_mode)};
      config.budgets = sw_budgets;
      config.unit = sw_fractions ? BudgetUnit::fraction_of_np : BudgetUnit::absolute;
      config.trials = sw_trials;
      config.threads = sw_threads;
      config.chromatic_epsilon = sw_eps;
      config.posa = sw_posa;
      config.seed = resolve_seed(sw_seed, err);
      std::vector<TrialRecord> records;
      const ResilienceCurve curve = sweep(config, &records);
      emit(sw_out, summary(config, curve).dump(2) + "\n", out);
      if (!sw_records.empty()) write_text(sw_records, to_jsonl(records, sw_timing));
      if (!sw_csv.empty()) write_text(sw_csv, to_csv(curve));
    } else if (validate->parsed()) {
      const Seed seed = resolve_seed(val_seed, err);
      std::vector<std::string> ids = val_lemma == "all" ? lemma_ids() : std::vector<std::string>{val_lemma};
      Json reports = Json::array();
      for (std::size_t i = 0; i < ids.size(); ++i)
        reports.push_back(to_json(validate_lemma(ids[i], val_n, val_p, val_trials, derive_seed(seed, stream::split, i),
                                                 val_opts)));
      Json config{{"command", "validate"},     {"lemma", val_lemma},
                  {"n", val_n},                {"p", val_p},
                  {"trials", val_trials},      {"seed", seed.value},
                  {"samples", val_opts.samples}, {"band_scale", val_opts.band_scale},
                  {"epsilon", val_opts.epsilon}};
      out << envelope(config, reports).dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace reslab
