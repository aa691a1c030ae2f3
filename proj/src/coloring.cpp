#include "reslab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace reslab {

namespace {

int count_distinct(const std::vector<int>& colors) {
  std::vector<int> sorted(colors);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

void assert_proper(const Graph& g, const Coloring& c, const char* who) {
  if (!is_proper(g, c)) throw std::logic_error(std::string(who) + " produced an improper coloring");
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.colors[v] < 0) return false;
    for (Vertex w : g.neighbors(v))
      if (c.colors[v] == c.colors[w]) return false;
  }
  return c.count == count_distinct(c.colors);
}

Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw Error("greedy_coloring: order is not a permutation of [n]");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) throw Error("greedy_coloring: order is not a permutation of [n]");
    seen[v] = 1;
  }
  Coloring c;
  c.colors.assign(n, -1);
  std::vector<int> mark(n + 1, -1);
  for (Vertex v : order) {
    for (Vertex w : g.neighbors(v))
      if (c.colors[w] >= 0) mark[c.colors[w]] = v;
    int color = 0;
    while (mark[color] == v) ++color;
    c.colors[v] = color;
    c.count = std::max(c.count, color + 1);
  }
  assert_proper(g, c, "greedy_coloring");
  return c;
}

Coloring dsatur(const Graph& g) {
  const int n = g.order();
  Coloring c;
  c.colors.assign(n, -1);
  if (n == 0) return c;
  std::vector<int> sat(n, 0);
  std::vector<std::vector<char>> nb_colors(n);
  // Ordered by (-saturation, -degree, id): begin() is the next vertex to color.
  using Key = std::tuple<int, int, Vertex>;
  std::set<Key> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(0, -g.degree_unchecked(v), v);
  std::vector<int> mark(n + 1, -1);

  while (!queue.empty()) {
    auto [neg_sat, neg_deg, v] = *queue.begin();
    queue.erase(queue.begin());
    for (Vertex w : g.neighbors(v))
      if (c.colors[w] >= 0) mark[c.colors[w]] = v;
    int color = 0;
    while (mark[color] == v) ++color;
    c.colors[v] = color;
    c.count = std::max(c.count, color + 1);
    for (Vertex w : g.neighbors(v)) {
      if (c.colors[w] >= 0) continue;
      auto& seen = nb_colors[w];
      if (static_cast<int>(seen.size()) <= color) seen.resize(color + 1, 0);
      if (seen[color]) continue;
      seen[color] = 1;
      queue.erase(Key{-sat[w], -g.degree_unchecked(w), w});
      ++sat[w];
      queue.emplace(-sat[w], -g.degree_unchecked(w), w);
    }
  }
  assert_proper(g, c, "dsatur");
  return c;
}

namespace {

// Small-graph branch and bound; adjacency as bitmasks.
class ExactColoring {
 public:
  explicit ExactColoring(const Graph& g) : n_(g.order()), adj_(n_, 0), color_(n_, -1) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= 1u << w;
  }

  int solve(int upper, int lower) {
    best_ = upper;
    lower_ = lower;
    search(0, 0);
    return best_;
  }

 private:
  void search(int colored, int used) {
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      return;
    }
    // Most saturated uncolored vertex, ties by degree.
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      std::uint32_t seen = 0;
      for (std::uint32_t a = adj_[v]; a; a &= a - 1) {
        int w = std::countr_zero(a);
        if (color_[w] >= 0) seen |= 1u << color_[w];
      }
      int s = std::popcount(seen);
      int d = std::popcount(adj_[v]);
      if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
        pick = v;
        pick_sat = s;
        pick_deg = d;
      }
    }
    std::uint32_t forbidden = 0;
    for (std::uint32_t a = adj_[pick]; a; a &= a - 1) {
      int w = std::countr_zero(a);
      if (color_[w] >= 0) forbidden |= 1u << color_[w];
    }
    for (int c = 0; c < used && best_ > lower_; ++c) {
      if (forbidden & (1u << c)) continue;
      color_[pick] = c;
      search(colored + 1, used);
      color_[pick] = -1;
    }
    if (used + 1 < best_ && best_ > lower_) {
      color_[pick] = used;
      search(colored + 1, used + 1);
      color_[pick] = -1;
    }
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> color_;
  int best_ = 0;
  int lower_ = 0;
};

int max_clique_small(const std::vector<std::uint32_t>& adj, std::uint32_t cand, int size, int best) {
  if (!cand) return std::max(size, best);
  if (size + std::popcount(cand) <= best) return best;
  int v = std::countr_zero(cand);
  best = max_clique_small(adj, cand & adj[v], size + 1, best);
  return max_clique_small(adj, cand & ~(1u << v), size, best);
}

}  // namespace

int exact_chromatic(const Graph& g) {
  const int n = g.order();
  if (n > kExactChromaticCap)
    throw Error("exact_chromatic: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kExactChromaticCap));
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  int clique = max_clique_small(adj, (n == 32 ? ~0u : (1u << n) - 1), 0, 0);
  int upper = dsatur(g).count;
  if (upper == clique) return upper;
  return ExactColoring(g).solve(upper, clique);
}

DegeneracyCertificate degeneracy(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const int n = g.order();
  DegeneracyCertificate cert;
  if (n == 0) return cert;
  std::vector<int> deg(n), pos(n), vert(n);
  int maxd = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree_unchecked(v);
    maxd = std::max(maxd, deg[v]);
  }
  std::vector<int> bin(maxd + 1, 0);
  for (int d : deg) ++bin[d];
  for (int d = 0, start = 0; d <= maxd; ++d) {
    int count = bin[d];
    bin[d] = start;
    start += count;
  }
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (int d = maxd; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (int i = 0; i < n; ++i) {
    Vertex v = vert[i];
    cert.d = std::max(cert.d, deg[v]);
    cert.elimination_order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      int du = deg[u], pu = pos[u];
      int pw = bin[du];
      Vertex w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --deg[u];
    }
  }
  return cert;
}

UnionColoring partition_color_union(const Graph& g, const Graph& h, int d, Seed seed, std::optional<double> p) {
  const int n = g.order();
  if (h.order() != n) throw Error("partition_color_union: G and H have different vertex counts");
  if (d < 0) throw Error("partition_color_union: negative degree bound");
  const int dh = max_degree(h);
  if (dh > d) throw Error("partition_color_union: Δ(H)=" + std::to_string(dh) + " exceeds d=" + std::to_string(d));

  UnionColoring out;
  out.np = p ? n * *p : (n > 0 ? 2.0 * static_cast<double>(g.size()) / n : 0.0);
  int s = 1;
  if (out.np > std::numbers::e) {
    const double l = std::log(out.np);
    s = static_cast<int>(std::lround(2.0 * d * l * l));
  }
  s = std::clamp(s, 1, std::max(n, 1));
  out.parts = s;

  Coloring& c = out.coloring;
  c.colors.assign(n, -1);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  int next_color = 0;
  for (int i = 0; i < s; ++i) {
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(static_cast<std::int64_t>(i) * n / s);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(static_cast<std::int64_t>(i + 1) * n / s);
    VertexSet part(std::vector<Vertex>(first, last));
    Coloring local = dsatur(induced_subgraph(g, part));
    for (std::size_t j = 0; j < part.size(); ++j) c.colors[part.members()[j]] = next_color + local.colors[j];
    out.part_colors.push_back(local.count);
    next_color += local.count;
  }

  std::vector<Vertex> patch;
  std::vector<char> in_patch(n, 0);
  for (auto [u, v] : h.edges()) {
    if (c.colors[u] != c.colors[v]) continue;
    ++out.monochromatic;
    for (Vertex x : {u, v})
      if (!in_patch[x]) {
        in_patch[x] = 1;
        patch.push_back(x);
      }
  }
  out.patch_set_size = static_cast<int>(patch.size());
  if (!patch.empty()) {
    VertexSet u(std::move(patch));
    Graph sub = induced_subgraph(edge_union(g, h), u);
    DegeneracyCertificate cert = degeneracy(sub);
    Coloring local = greedy_coloring(sub, cert.coloring_order());
    out.patch_degeneracy = cert.d;
    out.patch_colors = local.count;
    for (std::size_t j = 0; j < u.size(); ++j) c.colors[u.members()[j]] = next_color + local.colors[j];
  }
  c.count = count_distinct(c.colors);
  if (n > 0 && !is_proper(edge_union(g, h), c)) throw std::logic_error("partition_color_union produced an improper coloring");
  return out;
}

bool k0_inequality_holds(int n, double p, int k) {
  if (k < 0 || k > n) return false;
  const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  const double pairs = static_cast<double>(k) * (k - 1) / 2.0;
  return log_binom + pairs * std::log1p(-p) >= 4.0 * std::log(static_cast<double>(n));
}

int k0(int n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error("k0: p must lie strictly between 0 and 1");
  if (n < 1) throw Error("k0: n must be positive");
  int best = 0;
  for (int k = 0; k <= n; ++k)
    if (k0_inequality_holds(n, p, k)) best = k;
  return best;
}

std::vector<std::vector<Vertex>> independent_k_sets(const Graph& g, int k, std::size_t cap) {
  const int n = g.order();
  if (n > 64) throw Error("independent_k_sets: n must be at most 64");
  std::vector<std::uint64_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  auto rec = [&](auto&& self, std::uint64_t cand) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (out.size() >= cap) throw Error("independent_k_sets: more than " + std::to_string(cap) + " sets");
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size() + std::popcount(cand)) < k) return;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      int v = std::countr_zero(c);
      current.push_back(v);
      // Only later vertices, so each set is produced once.
      std::uint64_t later = (v == 63) ? 0 : (~std::uint64_t{0} << (v + 1));
      self(self, cand & ~adj[v] & later);
      current.pop_back();
    }
  };
  if (k >= 0 && k <= n) rec(rec, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return out;
}

namespace {

// Exact minimum hitting set where each target set lists the pair ids it contains.
class HittingSet {
 public:
  HittingSet(std::vector<std::vector<int>> sets, int universe)
      : sets_(std::move(sets)), by_pair_(universe), hits_(sets_.size(), 0) {
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (int p : sets_[s]) by_pair_[p].push_back(static_cast<int>(s));
  }

  std::vector<int> solve() {
    best_ = greedy();
    search();
    return best_;
  }

 private:
  std::vector<int> greedy() {
    std::vector<int> chosen;
    std::vector<char> hit(sets_.size(), 0);
    for (;;) {
      int pick = -1, gain = 0;
      for (int p = 0; p < static_cast<int>(by_pair_.size()); ++p) {
        int g = 0;
        for (int s : by_pair_[p]) g += !hit[s];
        if (g > gain) {
          gain = g;
          pick = p;
        }
      }
      if (pick < 0) return chosen;
      chosen.push_back(pick);
      for (int s : by_pair_[pick]) hit[s] = 1;
    }
  }

  // Lower bound: greedily pack unhit sets that share no pair.
  int packing_bound() {
    std::vector<char> used(by_pair_.size(), 0);
    int bound = 0;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      if (hits_[s]) continue;
      bool free = std::none_of(sets_[s].begin(), sets_[s].end(), [&](int p) { return used[p]; });
      if (!free) continue;
      ++bound;
      for (int p : sets_[s]) used[p] = 1;
    }
    return bound;
  }

  void search() {
    std::size_t first = 0;
    while (first < sets_.size() && hits_[first]) ++first;
    if (first == sets_.size()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + static_cast<std::size_t>(packing_bound()) >= best_.size()) return;
    for (int p : sets_[first]) {
      chosen_.push_back(p);
      for (int s : by_pair_[p]) ++hits_[s];
      search();
      for (int s : by_pair_[p]) --hits_[s];
      chosen_.pop_back();
    }
  }

  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> by_pair_;
  std::vector<int> hits_;
  std::vector<int> chosen_, best_;
};

}  // namespace

CoverResult cover_number_bruteforce(const Graph& g, int k) {
  const int n = g.order();
  if (n > kCoverVertexCap)
    throw Error("cover_number_bruteforce: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kCoverVertexCap));
  auto sets = independent_k_sets(g, k, kCoverSetCap);
  CoverResult out;
  if (sets.empty()) return out;
  if (k < 2) throw Error("cover_number_bruteforce: independent sets of size < 2 contain no pair; no cover exists");

  std::vector<std::vector<int>> as_pairs;
  as_pairs.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) ids.push_back(s[i] * n + s[j]);
    as_pairs.push_back(std::move(ids));
  }
  auto chosen = HittingSet(std::move(as_pairs), n * n).solve();
  std::sort(chosen.begin(), chosen.end());
  out.size = static_cast<int>(chosen.size());
  for (int id : chosen) out.pairs.emplace_back(id / n, id % n);
  return out;
}

int independence_number_exact(const Graph& g) {
  const int n = g.order();
  if (n > kIndependenceCap)
    throw Error("independence_number_exact: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kIndependenceCap));
  std::vector<std::uint64_t> closed(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
  }
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    for (;;) {
      if (!cand) {
        best = std::max(best, size);
        return;
      }
      if (size + std::popcount(cand) <= best) return;
      // A vertex with at most one candidate neighbor can always be taken.
      int pick = -1, pick_deg = -1;
      bool forced = false;
      for (std::uint64_t c = cand; c; c &= c - 1) {
        int v = std::countr_zero(c);
        int deg = std::popcount(closed[v] & cand) - 1;
        if (deg <= 1) {
          pick = v;
          forced = true;
          break;
        }
        if (deg > pick_deg) {
          pick = v;
          pick_deg = deg;
        }
      }
      if (!forced) {
        self(self, cand & ~closed[pick], size + 1);
        cand &= ~(std::uint64_t{1} << pick);
        continue;
      }
      cand &= ~closed[pick];
      ++size;
    }
  };
  rec(rec, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  return best;
}

}  // namespace reslab
