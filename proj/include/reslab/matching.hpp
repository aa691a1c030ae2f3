#pragma once

#include <optional>
#include <vector>

#include "reslab/graph.hpp"
#include "reslab/rng.hpp"

namespace reslab {

/// Set of disjoint edges of a host graph.
struct Matching {
  std::vector<Edge> pairs;

  std::size_t size() const { return pairs.size(); }
  bool is_perfect(int n) const { return 2 * static_cast<std::int64_t>(pairs.size()) == n; }
  /// At most one vertex left uncovered.
  bool is_near_perfect(int n) const { return 2 * static_cast<std::int64_t>(pairs.size()) >= n - 1; }
};

bool is_valid_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching of a general graph (Edmonds' blossom algorithm
/// seeded by a greedy matching).
Matching max_matching(const Graph& g);

/// False for odd n; use Matching::is_near_perfect for the odd case.
bool has_perfect_matching(const Graph& g);

/// Outcome of bipartite matching across a partition (left, right).
struct BipartiteOutcome {
  Matching matching;                 ///< maximum matching of the crossing edges
  std::optional<VertexSet> witness;  ///< Hall violator, if the matching is not perfect
};

/// Maximum matching of the crossing edges, plus a Hall-condition violator
/// S (inside left or inside right) with |N(S) ∩ other side| < |S| whenever the
/// crossing graph lacks a perfect matching. The violator is the alternating
/// reachability set of one unmatched vertex. Throws if (left, right) is not a
/// partition of the vertex set.
BipartiteOutcome bipartite_match(const Graph& g, const VertexSet& left, const VertexSet& right);

std::optional<VertexSet> hall_witness(const Graph& g, const VertexSet& left, const VertexSet& right);

struct SplitOutcome {
  VertexSet left;
  VertexSet right;
  std::optional<Matching> matching;  ///< perfect matching of g using crossing edges only
  std::optional<VertexSet> witness;  ///< Hall violator for this split otherwise
  int splits_tried = 1;
};

/// Draws a random equal bipartition, keeps the crossing edges and looks for a
/// perfect bipartite matching there. With resample_splits > 0, failed splits
/// are redrawn up to that many extra times. Requires even n.
SplitOutcome bipartite_matching_via_random_split(const Graph& g, Seed seed, int resample_splits = 0);

}  // namespace reslab
