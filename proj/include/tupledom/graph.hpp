#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace tupledom {

// Graphs larger than this are rejected at construction time. Defaults to 32,
// which covers complementary prisms of 16-vertex graphs.
int size_limit();
// Clamped to [1, 64]; 64 is the hard cap of the bitset representation.
void set_size_limit(int n);

// Subset of {0..63}, the currency of every predicate and solver.
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  explicit VertexSet(std::uint64_t b) : bits(b) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  bool contains(int v) const { return bits >> v & 1u; }
  void insert(int v) { bits |= std::uint64_t{1} << v; }
  void erase(int v) { bits &= ~(std::uint64_t{1} << v); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  std::vector<int> to_vector() const;

  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
};

std::string to_string(VertexSet s);

// Undirected simple graph on vertices 0..n-1, immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const;  // edge count
  bool adjacent(int u, int v) const;
  std::uint64_t neighbors_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::uint64_t closed_mask(int v) const {
    return adj_[static_cast<std::size_t>(v)] | std::uint64_t{1} << v;
  }
  VertexSet neighbors(int v) const;
  int degree(int v) const;
  int min_degree() const;  // 0 on the empty graph
  int max_degree() const;
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Part sizes of a complete multipartite graph.
struct PartitionSpec {
  std::vector<int> parts;
};

// For each vertex of the left graph, the joined vertices on the right graph.
// With starred set, every target list must have size exactly k.
struct JoinAssignment {
  std::vector<VertexSet> targets;
  bool starred = false;
};

Graph complete(int n);
Graph cycle(int n);  // edges {i, i+1 mod n}, requires n >= 3
Graph complete_multipartite(const PartitionSpec& spec);
Graph complement(const Graph& g);
// 2n vertices: 0..n-1 carry g, n..2n-1 carry its complement, plus the
// matching {i, i+n}.
Graph complementary_prism(const Graph& g);
// 2n vertices: a pendant vertex i+n attached to each vertex i.
Graph corona_k1(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
// Disjoint union of g and h plus, for each vertex i of g, edges to
// assignment.targets[i] on the h side (h vertices are shifted by g.order()).
Graph k_join(const Graph& g, const Graph& h, int k, const JoinAssignment& assignment);
// Deterministic assignment: vertex i of the left graph joins right vertices
// i..i+k-1 mod h_order.
JoinAssignment cyclic_assignment(int g_order, int h_order, int k, bool starred = false);
// Vertices induced by s, relabeled by rank.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Bundled 16-vertex instance used by the `example48` CLI family.
Graph example48();

// Edge-list text format: first line is the vertex count, every following
// non-empty line is "u v" with 0 <= u < v < n, '#' starts a comment line.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace tupledom
