#include "tupledom/graph.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace tupledom {

namespace {
std::atomic<int> g_size_limit{32};

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

int size_limit() { return g_size_limit.load(); }

void set_size_limit(int n) { g_size_limit.store(std::clamp(n, 1, 64)); }

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int n) {
  if (n < 0) fail("negative vertex count");
  if (n > size_limit())
    fail("graph order " + std::to_string(n) + " exceeds the size limit " +
         std::to_string(size_limit()));
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) fail("edge " + std::to_string(i) + " is a self-loop at vertex " + std::to_string(u));
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("edge " + std::to_string(i) + " = (" + std::to_string(u) + "," + std::to_string(v) +
           ") has an endpoint out of range for n=" + std::to_string(n));
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

int Graph::size() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u)] >> v & 1u;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet(adj_[static_cast<std::size_t>(v)]);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : 64;
  for (int v = 0; v < n_; ++v) d = std::min(d, std::popcount(adj_[static_cast<std::size_t>(v)]));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[static_cast<std::size_t>(v)]));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t m = adj_[static_cast<std::size_t>(u)] >> u >> 1; m; m &= m - 1)
      out.emplace_back(u, u + 1 + std::countr_zero(m));
  return out;
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph cycle(int n) {
  if (n < 3) fail("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_multipartite(const PartitionSpec& spec) {
  if (spec.parts.empty()) fail("multipartite spec needs at least one part");
  int n = 0;
  for (int p : spec.parts) {
    if (p < 1) fail("every part must have size at least 1");
    n += p;
  }
  std::vector<int> part_of;
  part_of.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    for (int j = 0; j < spec.parts[i]; ++j) part_of.push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
        es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph complementary_prism(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> es = g.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u + n, v + n);
  for (int i = 0; i < n; ++i) es.emplace_back(i, i + n);
  return Graph::from_edges(2 * n, es);
}

Graph corona_k1(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> es = g.edges();
  for (int i = 0; i < n; ++i) es.emplace_back(i, i + n);
  return Graph::from_edges(2 * n, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.order();
  std::vector<std::pair<int, int>> es = g.edges();
  for (auto [u, v] : h.edges()) es.emplace_back(u + n, v + n);
  return Graph::from_edges(n + h.order(), es);
}

Graph k_join(const Graph& g, const Graph& h, int k, const JoinAssignment& assignment) {
  if (k < 1) fail("k must be positive");
  if (h.order() < k)
    fail("right graph has " + std::to_string(h.order()) + " vertices, fewer than k=" +
         std::to_string(k));
  if (static_cast<int>(assignment.targets.size()) != g.order())
    fail("assignment covers " + std::to_string(assignment.targets.size()) +
         " vertices, expected " + std::to_string(g.order()));
  std::vector<std::pair<int, int>> es = g.edges();
  int n = g.order();
  for (auto [u, v] : h.edges()) es.emplace_back(u + n, v + n);
  for (int i = 0; i < n; ++i) {
    const VertexSet& t = assignment.targets[static_cast<std::size_t>(i)];
    if (!t.subset_of(VertexSet(h.vertex_mask())))
      fail("vertex " + std::to_string(i) + ": target outside the right graph");
    int c = t.count();
    if (c < k)
      fail("vertex " + std::to_string(i) + ": target set has size " + std::to_string(c) +
           " < k=" + std::to_string(k));
    if (assignment.starred && c != k)
      fail("starred join: vertex " + std::to_string(i) + " has " + std::to_string(c) +
           " targets, expected exactly " + std::to_string(k));
    for (int w : t.to_vector()) es.emplace_back(i, w + n);
  }
  return Graph::from_edges(n + h.order(), es);
}

JoinAssignment cyclic_assignment(int g_order, int h_order, int k, bool starred) {
  if (k < 1 || h_order < k) fail("cyclic assignment needs 1 <= k <= right order");
  JoinAssignment a;
  a.starred = starred;
  a.targets.resize(static_cast<std::size_t>(g_order));
  for (int i = 0; i < g_order; ++i)
    for (int j = 0; j < k; ++j) a.targets[static_cast<std::size_t>(i)].insert((i + j) % h_order);
  return a;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(VertexSet(g.vertex_mask()))) fail("induced set is not a vertex subset");
  std::vector<int> verts = s.to_vector();
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(verts.size()), es);
}

Graph example48() {
  return Graph::from_edges(
      16, {{0, 1},  {0, 2},  {0, 3},  {1, 4},  {1, 5},   {1, 6},   {1, 7},
           {2, 8},  {2, 9},  {2, 10}, {2, 11}, {3, 12},  {3, 13},  {3, 14},
           {3, 15}, {4, 5},  {6, 7},  {8, 9},  {10, 11}, {12, 13}, {14, 15}});
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> es;
  auto parse_error = [&](const std::string& what) {
    fail("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) parse_error("expected a vertex count");
      std::string rest;
      if (fields >> rest) parse_error("trailing text after the vertex count");
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v)) parse_error("expected an edge 'u v'");
    std::string rest;
    if (fields >> rest) parse_error("trailing text after the edge");
    if (u == v) parse_error("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n || v < 0 || u >= n)
      parse_error("endpoint out of range for n=" + std::to_string(n));
    if (u > v) parse_error("edge endpoints must satisfy u < v");
    es.emplace_back(u, v);
  }
  if (n < 0) fail("missing vertex count line");
  return Graph::from_edges(n, es);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace tupledom
