#include "reslab/adversaries.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "reslab/generators.hpp"

namespace reslab {

std::string to_string(MoveMode mode) {
  switch (mode) {
    case MoveMode::remove: return "delete";
    case MoveMode::add: return "add";
    case MoveMode::symmetric_difference: return "symmetric-difference";
  }
  return "?";
}

MoveMode parse_move_mode(const std::string& text) {
  if (text == "delete" || text == "remove") return MoveMode::remove;
  if (text == "add") return MoveMode::add;
  if (text == "symmetric-difference" || text == "symdiff") return MoveMode::symmetric_difference;
  throw Error("unknown mode '" + text + "' (expected delete, add or symmetric-difference)");
}

void validate_move(const Graph& g, const AdversaryMove& move) {
  if (move.h.order() != g.order())
    throw Error("adversary move has " + std::to_string(move.h.order()) + " vertices, target has " +
                std::to_string(g.order()));
  for (Vertex v = 0; v < move.h.order(); ++v)
    if (move.h.degree_unchecked(v) > move.budget)
      throw Error("budget violated at vertex " + std::to_string(v) + ": degree " +
                  std::to_string(move.h.degree_unchecked(v)) + " in H exceeds r=" + std::to_string(move.budget));
  if (move.mode == MoveMode::symmetric_difference) return;
  for (auto [u, v] : move.h.edges()) {
    bool present = g.has_edge(u, v);
    if (move.mode == MoveMode::remove && !present)
      throw Error("delete move contains non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (move.mode == MoveMode::add && present)
      throw Error("add move contains existing edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
}

Graph apply_move(const Graph& g, const AdversaryMove& move) {
  switch (move.mode) {
    case MoveMode::remove: return subtract(g, move.h);
    case MoveMode::add: return edge_union(g, move.h);
    case MoveMode::symmetric_difference: return symmetric_difference(g, move.h);
  }
  throw Error("unknown move mode");
}

namespace {

VertexSet lowest_degree_half(const Graph& g, int keep, Rng& rng) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<std::uint64_t> tiebreak(n);
  std::set<std::tuple<int, std::uint64_t, Vertex>> by_degree;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree_unchecked(v);
    tiebreak[v] = rng();
    by_degree.emplace(deg[v], tiebreak[v], v);
  }
  std::vector<char> removed(n, 0);
  for (int left = n; left > keep; --left) {
    auto it = std::prev(by_degree.end());
    Vertex v = std::get<2>(*it);
    by_degree.erase(it);
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      by_degree.erase({deg[w], tiebreak[w], w});
      --deg[w];
      by_degree.emplace(deg[w], tiebreak[w], w);
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) kept.push_back(v);
  return VertexSet(std::move(kept));
}

}  // namespace

AdversaryMove isolate_larger_half(const Graph& g, Seed seed, IsolateVariant variant, VertexSet* chosen) {
  const int n = g.order();
  if (n < 4) throw Error("isolate_larger_half: need n >= 4");
  Rng rng = make_rng(seed);
  const int size = n / 2 + 1;
  VertexSet x = variant == IsolateVariant::uniform ? random_subset(n, size, rng) : lowest_degree_half(g, size, rng);
  AdversaryMove move;
  move.h = induced_on_full(g, x);
  move.mode = MoveMode::remove;
  move.budget = max_degree(move.h);
  if (chosen) *chosen = std::move(x);
  return move;
}

AdversaryMove cut_bisection(const Graph& g, Seed seed, VertexSet* side) {
  const int n = g.order();
  if (n < 2) throw Error("cut_bisection: need n >= 2");
  auto [a, b] = random_balanced_bipartition(n, seed);
  auto in_a = a.mask(n);
  std::vector<Edge> crossing;
  for (auto [u, v] : g.edges())
    if (in_a[u] != in_a[v]) crossing.emplace_back(u, v);
  AdversaryMove move;
  move.h = Graph::from_edges(n, crossing);
  move.mode = MoveMode::remove;
  move.budget = max_degree(move.h);
  if (side) *side = std::move(a);
  return move;
}

AdversaryMove random_degree_bounded(const Graph& g, int r, MoveMode mode, Seed seed) {
  if (r < 0) throw Error("random_degree_bounded: negative budget");
  const int n = g.order();
  AdversaryMove move;
  move.mode = mode;
  move.budget = r;
  if (r == 0) {
    move.h = Graph(n);
    return move;
  }
  std::vector<Edge> candidates;
  if (mode == MoveMode::remove) {
    candidates = g.edges();
  } else {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (mode == MoveMode::symmetric_difference || !g.has_edge(u, v)) candidates.emplace_back(u, v);
  }
  Rng rng = make_rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<int> hdeg(n, 0);
  std::vector<Edge> chosen;
  for (auto [u, v] : candidates)
    if (hdeg[u] < r && hdeg[v] < r) {
      ++hdeg[u];
      ++hdeg[v];
      chosen.emplace_back(u, v);
    }
  move.h = Graph::from_edges(n, chosen);
  return move;
}

AdversaryMove clique_addition(const Graph& g, int r, Seed seed) {
  const int n = g.order();
  if (r < 0 || r + 1 > n) throw Error("clique_addition: need 0 <= r and r+1 <= n");
  Rng rng = make_rng(seed);
  VertexSet k = random_subset(n, r + 1, rng);
  std::vector<Edge> edges;
  const auto& m = k.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.has_edge(m[i], m[j])) edges.emplace_back(m[i], m[j]);
  AdversaryMove move;
  move.h = Graph::from_edges(n, edges);
  move.mode = MoveMode::add;
  move.budget = r;
  return move;
}

AdversaryMove min_degree_attack(const Graph& g, int r, Seed seed) {
  if (r < 0) throw Error("min_degree_attack: negative budget");
  const int n = g.order();
  AdversaryMove move;
  move.mode = MoveMode::remove;
  move.budget = r;
  if (r == 0) {
    move.h = Graph(n);
    return move;
  }
  Rng rng = make_rng(seed);
  std::vector<std::vector<Vertex>> residual(n);
  for (Vertex v = 0; v < n; ++v) residual[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<int> hdeg(n, 0);
  std::vector<std::uint64_t> tiebreak(n);
  std::set<std::tuple<int, std::uint64_t, Vertex>> eligible;
  for (Vertex v = 0; v < n; ++v) {
    tiebreak[v] = rng();
    if (!residual[v].empty()) eligible.emplace(static_cast<int>(residual[v].size()), tiebreak[v], v);
  }
  auto drop = [&](Vertex v) { eligible.erase({static_cast<int>(residual[v].size()), tiebreak[v], v}); };
  auto erase_neighbor = [&](Vertex v, Vertex w) {
    auto it = std::find(residual[v].begin(), residual[v].end(), w);
    *it = residual[v].back();
    residual[v].pop_back();
  };

  std::vector<Edge> chosen;
  std::vector<Vertex> legal;
  while (!eligible.empty()) {
    Vertex v = std::get<2>(*eligible.begin());
    legal.clear();
    for (Vertex w : residual[v])
      if (hdeg[w] < r) legal.push_back(w);
    if (legal.empty()) {
      drop(v);
      continue;
    }
    std::sort(legal.begin(), legal.end());
    Vertex w = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
    drop(v);
    drop(w);
    erase_neighbor(v, w);
    erase_neighbor(w, v);
    ++hdeg[v];
    ++hdeg[w];
    chosen.emplace_back(std::min(v, w), std::max(v, w));
    for (Vertex x : {v, w})
      if (hdeg[x] < r && !residual[x].empty()) eligible.emplace(static_cast<int>(residual[x].size()), tiebreak[x], x);
  }
  move.h = Graph::from_edges(n, chosen);
  return move;
}

}  // namespace reslab
