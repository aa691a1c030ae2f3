#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reslab {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Base error for precondition violations across the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1 in compressed sparse row form.
///
/// Immutable after construction. Neighbor lists are sorted ascending, so two
/// graphs compare equal iff they have the same vertex count and edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds from an edge list. Throws on self-loops, duplicates (in either
  /// orientation) and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Like from_edges but silently drops duplicate edges.
  static Graph from_edges_dedup(int n, std::vector<Edge> edges);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::int64_t size() const { return static_cast<std::int64_t>(adj_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree_unchecked(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts the input; throws on duplicates or negative ids.
  explicit VertexSet(std::vector<Vertex> members);
  static VertexSet range(int n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Membership mask over [0, n); throws if some member is >= n.
  std::vector<char> mask(int n) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

int degree(const Graph& g, Vertex v);
int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_regular(const Graph& g);

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x);

/// Number of edges with one endpoint in a and the other in b. Requires
/// disjoint sets; the ordered-pair convention for overlapping sets lives in
/// spectral::ordered_pair_count.
std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);
std::int64_t edges_within(const Graph& g, const VertexSet& x);

/// Edges leaving x: e(x, V \ x).
std::int64_t cut_size(const Graph& g, const VertexSet& x);

/// E(g) \ E(h). Throws if some edge of h is missing from g.
Graph subtract(const Graph& g, const Graph& h);
Graph symmetric_difference(const Graph& g, const Graph& h);
Graph edge_union(const Graph& g, const Graph& h);

/// Subgraph induced by x, relabelled so that x.members()[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

/// Edges of g inside x, kept on the full vertex set of g.
Graph induced_on_full(const Graph& g, const VertexSet& x);

/// Edge-list text: header "n m" then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

// Small named graphs used by tests, the CLI and the acceptance suite.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace reslab
