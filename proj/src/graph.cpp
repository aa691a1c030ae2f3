#include "reslab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace reslab {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(g.order()) + ")");
}

void check_same_order(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw Error("vertex counts differ: " + std::to_string(g.order()) + " vs " + std::to_string(h.order()));
}

// Merge-walk over two sorted neighbor lists, keeping v < w only.
template <typename Keep>
Graph combine(const Graph& g, const Graph& h, Keep keep) {
  check_same_order(g, h);
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto a = g.neighbors(v);
    auto b = h.neighbors(v);
    auto ia = std::upper_bound(a.begin(), a.end(), v);
    auto ib = std::upper_bound(b.begin(), b.end(), v);
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
        if (keep(true, false)) out.emplace_back(v, *ia);
        ++ia;
      } else if (ia == a.end() || *ib < *ia) {
        if (keep(false, true)) out.emplace_back(v, *ib);
        ++ib;
      } else {
        if (keep(true, true)) out.emplace_back(v, *ia);
        ++ia;
        ++ib;
      }
    }
  }
  return Graph::from_edges(g.order(), out);
}

}  // namespace

Graph::Graph(int n) : offsets_(static_cast<std::size_t>(std::max(n, 0)) + 1, 0) {
  if (n < 0) throw Error("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge " + edge_str(u, v) + " has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    ++deg[u + 1];
    ++deg[v + 1];
  }
  for (int v = 0; v < n; ++v) deg[v + 1] += deg[v];
  g.offsets_ = deg;
  g.adj_.resize(static_cast<std::size_t>(deg[n]));
  std::vector<std::int64_t> fill(deg.begin(), deg.end() - 1);
  for (auto [u, v] : edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.adj_.begin() + g.offsets_[v];
    auto last = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) throw Error("duplicate edge " + edge_str(std::min(v, *dup), std::max(v, *dup)));
  }
  return g;
}

Graph Graph::from_edges_dedup(int n, std::vector<Edge> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return from_edges(n, edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  auto a = neighbors(u);
  auto b = neighbors(v);
  if (b.size() < a.size()) return std::binary_search(b.begin(), b.end(), u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v = 0; v < order(); ++v)
    for (Vertex w : neighbors(v))
      if (v < w) out.emplace_back(v, w);
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0) throw Error("negative vertex id in set");
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) throw Error("duplicate vertex " + std::to_string(*dup) + " in set");
}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(int n) const {
  if (!members_.empty() && members_.back() >= n)
    throw Error("vertex " + std::to_string(members_.back()) + " out of range [0," + std::to_string(n) + ")");
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

int degree(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.degree_unchecked(v);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree_unchecked(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.degree_unchecked(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree_unchecked(v));
  return best;
}

bool is_regular(const Graph& g) { return max_degree(g) == min_degree(g); }

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x) {
  auto in_x = x.mask(g.order());
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v)) hit[w] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  auto in_a = a.mask(g.order());
  auto in_b = b.mask(g.order());
  for (Vertex v : b)
    if (in_a[v]) throw Error("edges_between requires disjoint sets; vertex " + std::to_string(v) + " is in both");
  std::int64_t count = 0;
  const VertexSet& small = a.size() <= b.size() ? a : b;
  const auto& other = a.size() <= b.size() ? in_b : in_a;
  for (Vertex v : small)
    for (Vertex w : g.neighbors(v)) count += other[w];
  return count;
}

std::int64_t edges_within(const Graph& g, const VertexSet& x) {
  auto in_x = x.mask(g.order());
  std::int64_t twice = 0;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v)) twice += in_x[w];
  return twice / 2;
}

std::int64_t cut_size(const Graph& g, const VertexSet& x) {
  auto in_x = x.mask(g.order());
  std::int64_t count = 0;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v)) count += !in_x[w];
  return count;
}

Graph subtract(const Graph& g, const Graph& h) {
  check_same_order(g, h);
  for (auto [u, v] : h.edges())
    if (!g.has_edge(u, v)) throw Error("cannot subtract: edge " + edge_str(u, v) + " is not in the host graph");
  return combine(g, h, [](bool in_g, bool in_h) { return in_g && !in_h; });
}

Graph symmetric_difference(const Graph& g, const Graph& h) {
  return combine(g, h, [](bool in_g, bool in_h) { return in_g != in_h; });
}

Graph edge_union(const Graph& g, const Graph& h) {
  return combine(g, h, [](bool in_g, bool in_h) { return in_g || in_h; });
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), -1);
  x.mask(g.order());
  Vertex next = 0;
  for (Vertex v : x) relabel[v] = next++;
  std::vector<Edge> out;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (v < w && relabel[w] >= 0) out.emplace_back(relabel[v], relabel[w]);
  return Graph::from_edges(static_cast<int>(x.size()), out);
}

Graph induced_on_full(const Graph& g, const VertexSet& x) {
  auto in_x = x.mask(g.order());
  std::vector<Edge> out;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (v < w && in_x[w]) out.emplace_back(v, w);
  return Graph::from_edges(g.order(), out);
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  bool next(std::string_view& line) {
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }
};

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error("edge list line " + std::to_string(line_no) + ": " + what);
}

// Parses exactly two non-negative integers separated by blanks.
std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view line, int line_no) {
  std::int64_t vals[2];
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (auto& val : vals) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [next, ec] = std::from_chars(p, end, val);
    if (ec != std::errc() || next == p) parse_fail(line_no, "expected two integers, got '" + std::string(line) + "'");
    if (val < 0) parse_fail(line_no, "negative value");
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  if (p != end) parse_fail(line_no, "trailing characters in '" + std::string(line) + "'");
  return {vals[0], vals[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw Error("edge list is empty");
  auto [n64, m64] = parse_pair(line, reader.line_no);
  if (n64 > (1 << 30)) parse_fail(reader.line_no, "vertex count too large");
  const int n = static_cast<int>(n64);
  if (m64 > n64 * (n64 - 1) / 2) parse_fail(reader.line_no, "edge count exceeds n(n-1)/2");

  std::vector<Edge> edges;
  std::vector<int> line_of;
  edges.reserve(static_cast<std::size_t>(m64));
  while (reader.next(line)) {
    auto [u, v] = parse_pair(line, reader.line_no);
    if (u >= n64 || v >= n64) parse_fail(reader.line_no, "vertex id out of range [0," + std::to_string(n) + ")");
    if (u == v) parse_fail(reader.line_no, "self-loop at vertex " + std::to_string(u));
    if (static_cast<std::int64_t>(edges.size()) == m64) parse_fail(reader.line_no, "more edges than the header declares");
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
    line_of.push_back(reader.line_no);
  }
  if (static_cast<std::int64_t>(edges.size()) != m64)
    throw Error("edge list declares " + std::to_string(m64) + " edges but has " + std::to_string(edges.size()));

  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return edges[a] != edges[b] ? edges[a] < edges[b] : a < b; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (edges[idx[i]] == edges[idx[i - 1]])
      parse_fail(line_of[idx[i]], "duplicate edge " + edge_str(edges[idx[i]].first, edges[idx[i]].second));
  return Graph::from_edges(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_edge_list(g);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph::from_edges(a + b, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);      // outer cycle
    e.emplace_back(i, i + 5);            // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges_dedup(10, e);
}

}  // namespace reslab
