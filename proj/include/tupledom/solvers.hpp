#pragma once

#include <optional>
#include <vector>

#include "tupledom/predicates.hpp"

namespace tupledom {

enum class SolveStatus { optimal, infeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  int value = 0;      // minimum cardinality when optimal
  VertexSet witness;  // first optimum in colex order over the non-forced vertices
  std::uint64_t explored = 0;
};

struct DomaticResult {
  SolveStatus status = SolveStatus::infeasible;
  int value = 0;
  std::vector<VertexSet> classes;  // ordered by smallest member
  bool star = false;               // some class attains the domination number
  std::uint64_t explored = 0;
};

struct Decomposition {
  VertexSet core;   // induces min degree >= k-1; a minimum restrained set
  VertexSet outer;  // induces min degree >= k; each vertex has >= k core neighbors
  int core_size = 0;
};

// Vertices that belong to every set of a restrained variant: those of degree
// at most 2k-1 cannot sit outside (they would need k neighbors on each side).
VertexSet forced_vertices(const Graph& g, const Variant& v);
// The full vertex set qualifies iff any set does.
bool feasible(const Graph& g, const Variant& v);

// Exact minimum cardinality by candidate-size enumeration with forced-vertex
// fixing and an edge-count lower bound for restrained variants.
SolveResult gamma(const Graph& g, const Variant& v);
// Every minimum-cardinality witness, ascending by bitset value (colex).
std::vector<VertexSet> all_min_sets(const Graph& g, const Variant& v);
// Maximum number of classes of a partition whose every class passes the
// variant predicate.
DomaticResult domatic(const Graph& g, const Variant& v);
// Same, restricted to partitions with at least one minimum-cardinality class;
// a sole class of all vertices counts as value 1 regardless of its size.
DomaticResult star_domatic(const Graph& g, const Variant& v);
// Over the minimum restrained sets of the complete multipartite graph, the
// least number of parts the set does not fully contain. Empty when the only
// such set is the whole vertex set.
std::optional<int> t0(const PartitionSpec& spec, int k);
// Repackaged minimum restrained set: core plus its complement. Empty when no
// restrained set exists. Requires k >= 2.
std::optional<Decomposition> decompose(const Graph& g, int k);

}  // namespace tupledom
