#include "reslab/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "reslab/generators.hpp"

namespace reslab {

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : m.pairs) {
    if (!g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_), lca_mark_(n_) {}

  Matching run() {
    // Greedy start: lowest-degree vertices first tends to leave few exposed.
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g_.degree_unchecked(a) < g_.degree_unchecked(b); });
    for (Vertex v : order) {
      if (match_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v))
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    // An exposed vertex without an augmenting path stays exposed forever.
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        Vertex pv = parent_[v];
        Vertex next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    Matching m;
    for (Vertex v = 0; v < n_; ++v)
      if (match_[v] > v) m.pairs.emplace_back(v, match_[v]);
    return m;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
  std::vector<int> lca_mark_;
  int stamp_ = 0;
};

// Kuhn's augmenting paths on the crossing edges; side[v] is 0 (left) or 1.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const Graph& g, const std::vector<char>& side)
      : g_(g), side_(side), match_(g.order(), -1), seen_(g.order(), 0) {}

  void run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (side_[v] != 0 || match_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v))
        if (side_[w] == 1 && match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (side_[v] != 0 || match_[v] != -1) continue;
      ++stamp_;
      augment(v);
    }
  }

  Matching matching() const {
    Matching m;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (match_[v] > v) m.pairs.emplace_back(v, match_[v]);
    return m;
  }

  /// Vertices on the side of `root` reachable by alternating paths from it.
  VertexSet reachable_same_side(Vertex root) const {
    std::vector<char> seen(g_.order(), 0);
    std::vector<Vertex> queue{root}, out{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g_.neighbors(v)) {
        if (side_[w] == side_[v] || seen[w]) continue;
        seen[w] = 1;
        Vertex m = match_[w];
        if (m != -1 && !seen[m]) {
          seen[m] = 1;
          queue.push_back(m);
          out.push_back(m);
        }
      }
    }
    return VertexSet(std::move(out));
  }

  const std::vector<Vertex>& mates() const { return match_; }

 private:
  bool augment(Vertex root) {
    // Iterative DFS over (left vertex, next neighbor index).
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen_[root] = stamp_;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto nb = g_.neighbors(v);
      bool pushed = false;
      while (idx < nb.size()) {
        Vertex w = nb[idx++];
        if (side_[w] != 1 || seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        Vertex m = match_[w];
        if (m == -1) {
          // Flip the path held on the stack.
          Vertex cur = w;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            Vertex left = it->first;
            Vertex prev = match_[left];
            match_[left] = cur;
            match_[cur] = left;
            cur = prev;
          }
          return true;
        }
        if (seen_[m] != stamp_) {
          seen_[m] = stamp_;
          stack.emplace_back(m, 0);
          pushed = true;
          break;
        }
      }
      if (!pushed) stack.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const std::vector<char>& side_;
  std::vector<Vertex> match_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

std::vector<char> partition_sides(const Graph& g, const VertexSet& left, const VertexSet& right) {
  const int n = g.order();
  auto in_left = left.mask(n);
  auto in_right = right.mask(n);
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (in_left[v] && in_right[v])
      throw Error("left/right is not a partition: vertex " + std::to_string(v) + " is on both sides");
    if (!in_left[v] && !in_right[v])
      throw Error("left/right is not a partition: vertex " + std::to_string(v) + " is on neither side");
    side[v] = in_right[v] ? 1 : 0;
  }
  return side;
}

}  // namespace

Matching max_matching(const Graph& g) { return Blossom(g).run(); }

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  if (g.order() > 0 && min_degree(g) == 0) return false;
  return max_matching(g).is_perfect(g.order());
}

BipartiteOutcome bipartite_match(const Graph& g, const VertexSet& left, const VertexSet& right) {
  auto side = partition_sides(g, left, right);
  BipartiteMatcher matcher(g, side);
  matcher.run();
  BipartiteOutcome out;
  out.matching = matcher.matching();
  const auto& mates = matcher.mates();
  for (Vertex v : left)
    if (mates[v] == -1) {
      out.witness = matcher.reachable_same_side(v);
      return out;
    }
  for (Vertex v : right)
    if (mates[v] == -1) {
      out.witness = matcher.reachable_same_side(v);
      return out;
    }
  return out;
}

std::optional<VertexSet> hall_witness(const Graph& g, const VertexSet& left, const VertexSet& right) {
  return bipartite_match(g, left, right).witness;
}

SplitOutcome bipartite_matching_via_random_split(const Graph& g, Seed seed, int resample_splits) {
  if (g.order() % 2 != 0) throw Error("bipartite_matching_via_random_split: n must be even");
  SplitOutcome out;
  for (int attempt = 0; attempt <= std::max(resample_splits, 0); ++attempt) {
    auto [left, right] = random_equal_bipartition(g.order(), derive_seed(seed, stream::split, attempt));
    auto result = bipartite_match(g, left, right);
    out.left = std::move(left);
    out.right = std::move(right);
    out.splits_tried = attempt + 1;
    if (!result.witness) {
      out.matching = std::move(result.matching);
      out.witness.reset();
      return out;
    }
    out.witness = std::move(result.witness);
  }
  return out;
}

}  // namespace reslab
