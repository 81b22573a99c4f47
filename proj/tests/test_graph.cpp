#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>

#include "tupledom/graph.hpp"
#include "tupledom/verify.hpp"

using namespace tupledom;

namespace {

int girth(const Graph& g) {
  // shortest cycle via BFS from every vertex
  int best = 1 << 20;
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u).to_vector()) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          q.push(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          best = std::min(best,
                          dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("explicit edge construction") {
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);
  CHECK(k3 == complete(3));

  const Graph edgeless = Graph::from_edges(2, {});
  CHECK(edgeless.size() == 0);
  CHECK(edgeless.min_degree() == 0);

  // duplicates collapse
  CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("size limit is enforced and adjustable") {
  CHECK(size_limit() == 32);
  CHECK_THROWS_AS(Graph(33), std::invalid_argument);
  set_size_limit(40);
  CHECK_NOTHROW(Graph(40));
  set_size_limit(999);
  CHECK(size_limit() == 64);
  set_size_limit(32);
}

TEST_CASE("families") {
  CHECK(complete(4).size() == 6);
  CHECK(complete(4).min_degree() == 3);
  CHECK(cycle(5).size() == 5);
  CHECK(cycle(5).max_degree() == 2);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);

  const Graph k22 = complete_multipartite(PartitionSpec{{2, 2}});
  CHECK(k22.size() == 4);
  CHECK(k22.min_degree() == 2);
  CHECK(isomorphic(k22, cycle(4)));
  CHECK_THROWS_AS(complete_multipartite(PartitionSpec{{2, 0}}), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(complete(4)).size() == 0);
  CHECK(isomorphic(complement(cycle(5)), cycle(5)));
  const Graph c6c = complement(cycle(6));
  CHECK(c6c.min_degree() == 3);
  CHECK(c6c.max_degree() == 3);
  CHECK(complement(cycle(7)).max_degree() == 4);
}

TEST_CASE("complement is an involution") {
  for (int n = 0; n <= 14; n += 2) {
    const Graph g = random_graph(n, 0.4, 77 + static_cast<std::uint64_t>(n));
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("complementary prism") {
  const Graph prism5 = complementary_prism(cycle(5));
  CHECK(prism5.order() == 10);
  CHECK(prism5.size() == 15);
  CHECK(prism5.min_degree() == 3);
  CHECK(prism5.max_degree() == 3);
  CHECK(girth(prism5) == 5);
  // the standard drawing: outer cycle, inner pentagram, spokes
  const Graph petersen = Graph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  CHECK(isomorphic(prism5, petersen));

  const Graph p4 = complementary_prism(complete(2));
  CHECK(p4.order() == 4);
  CHECK(p4.size() == 3);
  CHECK(p4.min_degree() == 1);
  CHECK(p4.max_degree() == 2);

  CHECK(complementary_prism(complete(1)) == complete(2));
}

TEST_CASE("prism edge count and regular degrees") {
  for (int n = 1; n <= 8; ++n) {
    const Graph g = random_graph(n, 0.5, 13 * static_cast<std::uint64_t>(n) + 1);
    const Graph p = complementary_prism(g);
    const int m = g.size();
    CHECK(p.size() == m + (n * (n - 1) / 2 - m) + n);
    for (int v = 0; v < n; ++v) {
      CHECK(p.degree(v) == g.degree(v) + 1);
      CHECK(p.degree(v + n) == n - g.degree(v));
    }
  }
}

TEST_CASE("corona") {
  const Graph c = corona_k1(complete(3));
  CHECK(c.order() == 6);
  CHECK(c.size() == 6);
  int pendants = 0;
  for (int v = 0; v < 6; ++v) pendants += c.degree(v) == 1;
  CHECK(pendants == 3);
  CHECK(corona_k1(complete(1)) == complete(2));
  for (int n = 1; n <= 5; ++n) {
    CHECK(corona_k1(complete(n)) == complementary_prism(complete(n)));
    CHECK(isomorphic(corona_k1(complete(n)), complementary_prism(complete(n))));
  }
}

TEST_CASE("disjoint union") {
  const Graph two_k2 = disjoint_union(complete(2), complete(2));
  CHECK(two_k2.order() == 4);
  CHECK(isomorphic(two_k2, complement(cycle(4))));
}

TEST_CASE("k-join") {
  const Graph p3 = k_join(complete(1), complete(2), 1, JoinAssignment{{VertexSet{0}}, false});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.max_degree() == 2);

  const Graph g = cycle(4);
  const Graph h = complete(2);
  const Graph joined = k_join(
      g, h, 2,
      JoinAssignment{{VertexSet{0, 1}, VertexSet{0, 1}, VertexSet{0, 1}, VertexSet{0, 1}}, false});
  // restriction to each side reproduces the side
  CHECK(induced_subgraph(joined, VertexSet{0, 1, 2, 3}) == g);
  CHECK(induced_subgraph(joined, VertexSet{4, 5}) == h);

  // starred with k = |V(H)| forces the full assignment
  const JoinAssignment full = cyclic_assignment(3, 2, 2, true);
  for (const VertexSet& t : full.targets) CHECK(t == VertexSet{0, 1});
  CHECK_NOTHROW(k_join(cycle(3), complete(2), 2, full));

  CHECK_THROWS_AS(
      k_join(g, h, 2,
             JoinAssignment{{VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1}, VertexSet{0, 1}},
                            false}),
      std::invalid_argument);
  CHECK_THROWS_AS(k_join(cycle(3), complete(3), 1,
                         JoinAssignment{{VertexSet{0, 1}, VertexSet{0}, VertexSet{0}}, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(k_join(g, complete(1), 2, cyclic_assignment(4, 1, 1)), std::invalid_argument);
}

TEST_CASE("bundled 16-vertex instance") {
  const Graph g = example48();
  CHECK(g.order() == 16);
  CHECK(g.size() == 21);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 5);
  CHECK(g.min_degree() == 2);
}

TEST_CASE("parse and serialize") {
  const Graph k3 = parse_graph("3\n0 1\n1 2\n0 2\n");
  CHECK(k3 == complete(3));

  const Graph g = example48();
  CHECK(parse_graph(serialize_graph(g)) == g);

  CHECK(parse_graph("4\n# comment\n\n0 3\n").size() == 1);

  CHECK_THROWS_WITH_AS(parse_graph("2\n0 0\n"), doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph("2\n0 5\n"), doctest::Contains("out of range"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph("2\n1 0\n"), doctest::Contains("u < v"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph("2\n0 x\n"), doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
}

TEST_CASE("round trip over random graphs") {
  for (int i = 0; i < 30; ++i) {
    const Graph g =
        random_graph(3 + i % 9, 0.1 * (1 + i % 8), 1000 + static_cast<std::uint64_t>(i));
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("serializer emits sorted edges") {
  const Graph g = Graph::from_edges(4, {{2, 3}, {0, 3}, {0, 1}});
  CHECK(serialize_graph(g) == "4\n0 1\n0 3\n2 3\n");
}

TEST_CASE("vertex set basics") {
  VertexSet s{4, 1, 2};
  CHECK(to_string(s) == "{1,2,4}");
  CHECK(s.count() == 3);
  s.erase(2);
  CHECK(!s.contains(2));
  CHECK(s.subset_of(VertexSet{1, 2, 4}));
  CHECK(VertexSet{}.empty());
}
