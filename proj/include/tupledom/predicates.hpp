#pragma once

#include <string>
#include <vector>

#include "tupledom/graph.hpp"

namespace tupledom {

// Which domination flavour a predicate or solver works with.
struct Variant {
  int k = 1;
  bool total = false;
  bool restrained = false;
  friend bool operator==(const Variant&, const Variant&) = default;
};

std::string to_string(const Variant& v);

enum class Clause {
  coverage,        // closed (or open, for total variants) neighborhood meets the set k times
  outside_degree,  // a vertex outside the set has k neighbors outside it
};

struct Violation {
  int vertex = 0;
  Clause clause = Clause::coverage;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct PredicateVerdict {
  bool holds = false;
  std::vector<Violation> violations;  // every failing vertex, in vertex order
};

// Allocation-free decision used by the solvers; `set` must be within the
// vertex mask of g.
bool satisfies(const Graph& g, std::uint64_t set, const Variant& v);

PredicateVerdict check_set(const Graph& g, VertexSet s, const Variant& v);
PredicateVerdict is_kds(const Graph& g, VertexSet s, int k);
PredicateVerdict is_ktds(const Graph& g, VertexSet s, int k);
PredicateVerdict is_krds(const Graph& g, VertexSet s, int k);
PredicateVerdict is_ktrds(const Graph& g, VertexSet s, int k);

// Same decision as is_krds, phrased per vertex by membership side: members
// need k-1 open neighbors inside, non-members need k inside and k outside.
// is_krds evaluates both routes and insists they agree.
PredicateVerdict is_krds_by_membership(const Graph& g, VertexSet s, int k);

}  // namespace tupledom
