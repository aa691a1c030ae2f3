#include "reslab/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace reslab {

PathRecord::PathRecord(int n, std::vector<Vertex> vertices) : order(std::move(vertices)), on_path(n, 0) {
  for (Vertex v : order) {
    if (v < 0 || v >= n) throw Error("path vertex " + std::to_string(v) + " out of range");
    if (on_path[v]) throw Error("path repeats vertex " + std::to_string(v));
    on_path[v] = 1;
  }
}

bool is_valid_path(const Graph& g, const PathRecord& p) {
  if (static_cast<int>(p.on_path.size()) != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    Vertex v = p.order[i];
    if (v < 0 || v >= g.order() || seen[v] || !p.on_path[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.order[i - 1], v)) return false;
  }
  return std::count(p.on_path.begin(), p.on_path.end(), 1) == static_cast<std::ptrdiff_t>(p.order.size());
}

PathRecord rotate(const Graph& g, const PathRecord& p, int pivot_index) {
  const int l = static_cast<int>(p.length());
  if (pivot_index < 0 || pivot_index >= l - 2)
    throw Error("rotate: pivot index " + std::to_string(pivot_index) + " outside [0, " + std::to_string(l - 2) + ")");
  if (!g.has_edge(p.order[pivot_index], p.back()))
    throw Error("rotate: pivot " + std::to_string(p.order[pivot_index]) + " is not adjacent to the free end " +
                std::to_string(p.back()));
  PathRecord out = p;
  std::reverse(out.order.begin() + pivot_index + 1, out.order.end());
  return out;
}

namespace {

enum class BfsEnd { stopped, exhausted, out_of_budget };

struct BfsNode {
  std::vector<Vertex> order;
  int record_index;
};

// Breadth-first rotation closure with start.front() fixed. `visit` sees every
// discovered path (the start first) and returns true to stop the search.
// Pivots are processed in path order.
template <typename Visit>
BfsEnd rotation_bfs(const Graph& g, const std::vector<Vertex>& start, bool restrict_to_original,
                    std::int64_t max_rotations, std::int64_t& rotations, Visit&& visit, RotationState* record) {
  const int n = g.order();
  const std::size_t l = start.size();
  std::vector<char> seen(n, 0);
  std::vector<int> pos(n, -1), orig_pos;
  if (restrict_to_original) {
    orig_pos.assign(n, -1);
    for (std::size_t i = 0; i < l; ++i) orig_pos[start[i]] = static_cast<int>(i);
  }

  seen[start.back()] = 1;
  if (record) {
    record->endpoint_set.push_back(start.back());
    record->transform_log.emplace_back();
    record->round.push_back(0);
  }
  if (visit(start)) return BfsEnd::stopped;

  std::deque<BfsNode> queue;
  queue.push_back({start, 0});
  std::vector<std::size_t> pivots;
  while (!queue.empty()) {
    BfsNode node = std::move(queue.front());
    queue.pop_front();
    const auto& order = node.order;
    for (std::size_t i = 0; i < l; ++i) pos[order[i]] = static_cast<int>(i);
    const Vertex x = order.back();

    pivots.clear();
    for (Vertex w : g.neighbors(x)) {
      int i = pos[w];
      if (i >= 0 && static_cast<std::size_t>(i) + 2 < l) pivots.push_back(static_cast<std::size_t>(i));
    }
    std::sort(pivots.begin(), pivots.end());

    for (std::size_t i : pivots) {
      Vertex z = order[i + 1];
      if (seen[z]) continue;
      if (restrict_to_original && std::abs(orig_pos[order[i]] - orig_pos[z]) != 1) continue;
      if (max_rotations >= 0 && rotations >= max_rotations) {
        for (Vertex v : order) pos[v] = -1;
        return BfsEnd::out_of_budget;
      }
      ++rotations;
      seen[z] = 1;
      std::vector<Vertex> next(order);
      std::reverse(next.begin() + static_cast<std::ptrdiff_t>(i) + 1, next.end());
      int index = -1;
      if (record) {
        index = static_cast<int>(record->endpoint_set.size());
        record->endpoint_set.push_back(z);
        auto log = record->transform_log[node.record_index];
        log.push_back(order[i]);
        record->transform_log.push_back(std::move(log));
        record->round.push_back(record->round[node.record_index] + 1);
      }
      if (visit(next)) return BfsEnd::stopped;
      queue.push_back({std::move(next), index});
    }
    for (Vertex v : order) pos[v] = -1;
  }
  return BfsEnd::exhausted;
}

struct PhaseResult {
  enum Kind { extended, closed, failed, out_of_budget } kind = failed;
  std::vector<Vertex> path;
};

}  // namespace

RotationState rotation_closure(const Graph& g, const PathRecord& p, const RotationOptions& opts) {
  if (p.length() == 0) throw Error("rotation_closure: empty path");
  RotationState state;
  state.path = p;
  state.fixed_end = p.front();
  std::int64_t rotations = 0;
  rotation_bfs(g, p.order, opts.restrict_to_original_edges, opts.max_rotations, rotations,
               [](const std::vector<Vertex>&) { return false; }, &state);
  return state;
}

PathRecord replay(const Graph& g, const RotationState& state, std::size_t index) {
  if (index >= state.endpoint_set.size()) throw Error("replay: endpoint index out of range");
  PathRecord p = state.path;
  for (Vertex pivot : state.transform_log[index]) {
    auto it = std::find(p.order.begin(), p.order.end(), pivot);
    if (it == p.order.end()) throw Error("replay: pivot " + std::to_string(pivot) + " is not on the path");
    p = rotate(g, p, static_cast<int>(it - p.order.begin()));
  }
  return p;
}

bool verify_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

std::optional<std::vector<Vertex>> posa_find_hamilton(const Graph& g, Seed seed, const PosaOptions& opts,
                                                      PosaStats* stats) {
  const int n = g.order();
  PosaStats local;
  PosaStats& st = stats ? *stats : local;
  st = {};
  if (n < 3 || min_degree(g) < 2) return std::nullopt;
  const std::int64_t budget = opts.rotation_budget < 0 ? 50LL * n : opts.rotation_budget;

  std::vector<char> on(n, 0);
  std::vector<Vertex> path, offpath;

  for (int restart = 0; restart < opts.restart_budget; ++restart) {
    st.restarts_used = restart + 1;
    Rng rng = make_rng(derive_seed(seed, stream::restart, static_cast<std::uint64_t>(restart)));
    std::fill(on.begin(), on.end(), 0);
    path.clear();
    std::int64_t rotations = 0;

    auto random_off_path_neighbor = [&](Vertex x) -> Vertex {
      offpath.clear();
      for (Vertex w : g.neighbors(x))
        if (!on[w]) offpath.push_back(w);
      if (offpath.empty()) return -1;
      std::uniform_int_distribution<std::size_t> pick(0, offpath.size() - 1);
      return offpath[pick(rng)];
    };
    auto push = [&](Vertex w) {
      path.push_back(w);
      on[w] = 1;
    };

    push(std::uniform_int_distribution<Vertex>(0, n - 1)(rng));

    // Visitor shared by both rotation levels: stop on an extension or a closure.
    PhaseResult phase;
    auto visitor = [&](const std::vector<Vertex>& q) {
      Vertex w = random_off_path_neighbor(q.back());
      if (w != -1) {
        phase.kind = PhaseResult::extended;
        phase.path = q;
        phase.path.push_back(w);
        return true;
      }
      if (g.has_edge(q.back(), q.front())) {
        phase.kind = PhaseResult::closed;
        phase.path = q;
        return true;
      }
      return false;
    };

    bool give_up = false;
    while (!give_up) {
      // Greedy extension at either end.
      for (;;) {
        Vertex w = random_off_path_neighbor(path.back());
        if (w != -1) {
          push(w);
          continue;
        }
        w = random_off_path_neighbor(path.front());
        if (w != -1) {
          std::reverse(path.begin(), path.end());
          push(w);
          continue;
        }
        break;
      }
      if (static_cast<int>(path.size()) == n && g.has_edge(path.back(), path.front())) break;

      // Level one: rotate with path.front() fixed.
      phase = {};
      RotationState level_one;
      level_one.path = PathRecord(n, path);
      BfsEnd end = rotation_bfs(g, path, opts.restrict_to_original_edges, budget, rotations, visitor, &level_one);
      // Level two: fix each level-one endpoint in turn and rotate the old start.
      for (std::size_t i = 0; end == BfsEnd::exhausted && i < level_one.endpoint_set.size(); ++i) {
        auto q = replay(g, level_one, i).order;
        std::reverse(q.begin(), q.end());
        end = rotation_bfs(g, q, opts.restrict_to_original_edges, budget, rotations, visitor, nullptr);
      }
      if (end != BfsEnd::stopped) {
        give_up = true;
        break;
      }

      if (phase.kind == PhaseResult::extended) {
        path = std::move(phase.path);
        on[path.back()] = 1;
        continue;
      }
      // Closed a cycle on the current vertex set.
      path = std::move(phase.path);
      if (static_cast<int>(path.size()) == n) break;
      Vertex w = -1, anchor = -1;
      for (Vertex v = 0; v < n && w == -1; ++v) {
        if (on[v]) continue;
        for (Vertex c : g.neighbors(v))
          if (on[c]) {
            w = v;
            anchor = c;  // neighbors are sorted, so this is the lowest-indexed one
            break;
          }
      }
      if (w == -1) {
        // The cycle's vertex set is closed under adjacency: g is disconnected.
        st.rotations += rotations;
        return std::nullopt;
      }
      ++st.closures;
      auto at = std::find(path.begin(), path.end(), anchor);
      std::rotate(path.begin(), at + 1, path.end());
      push(w);
    }
    st.rotations += rotations;
    if (give_up) continue;

    if (!verify_hamilton_cycle(g, path)) throw std::logic_error("posa_find_hamilton produced an invalid cycle");
    return path;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> exact_hamilton(const Graph& g) {
  const int n = g.order();
  if (n > kExactHamiltonCap)
    throw Error("exact_hamilton: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kExactHamiltonCap));
  if (n < 3) return std::nullopt;

  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;

  // ends[mask]: vertices v such that some path from 0 visits exactly mask and stops at v.
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    const std::uint32_t e = ends[mask];
    if (!e) continue;
    for (std::uint32_t rest = full & ~mask; rest; rest &= rest - 1) {
      int w = std::countr_zero(rest);
      if (adj[w] & e) ends[mask | (1u << w)] |= 1u << w;
    }
  }
  std::uint32_t closing = ends[full] & adj[0];
  if (!closing) return std::nullopt;

  std::vector<Vertex> seq;
  std::uint32_t mask = full;
  int v = std::countr_zero(closing);
  seq.push_back(v);
  while (mask != 1) {
    std::uint32_t prev = mask ^ (1u << v);
    int u = std::countr_zero(ends[prev] & adj[v]);
    seq.push_back(u);
    mask = prev;
    v = u;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace reslab
