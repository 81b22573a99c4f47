#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tupledom/formulas.hpp"
#include "tupledom/solvers.hpp"

namespace tupledom {

// Grid for one claim sweep. Zero-valued fields fall back to the claim's
// default grid; the seed fixes random instance generation.
struct SweepSpec {
  std::string claim;
  int n_min = 0, n_max = 0;
  int k_min = 0, k_max = 0;
  int m_min = 0, m_max = 0;  // second size parameter where one applies
  int max_n = 0;             // overall order ceiling
  int cap = 0;               // random-instance cap
  std::uint64_t seed = 1;
  std::string family;  // instance family for claims that take one
};

struct InstanceRow {
  std::string params;
  std::string formula;
  std::string solver;
  std::string status;  // match | mismatch | skipped
  std::string witness;
  bool witness_ok = true;  // mismatch witnesses are re-validated at report time
};

struct Report {
  std::string claim;
  ClaimKind kind = ClaimKind::exact;
  int instances = 0;
  int matches = 0;
  int skipped = 0;  // inapplicable or vacuous
  std::vector<InstanceRow> mismatches;
  // Full per-instance grid in generation order, kept by the case-table claims
  // (capped); property-style sweeps leave it empty.
  std::vector<InstanceRow> rows;
  int mismatch_count() const { return static_cast<int>(mismatches.size()); }
  bool all_witnesses_ok() const;
  bool consistent() const { return matches + mismatch_count() + skipped == instances; }
};

std::vector<std::string> sweepable_claims();
SweepSpec default_spec(const std::string& claim);
Report sweep(const SweepSpec& spec);

// The five clauses of the domatic/degree observation chain, each evaluated on
// g where applicable. Clause v enumerates all restrained sets and is skipped
// above 12 vertices.
Report check_observation_chain(const Graph& g, int k);

enum class GraphSource { exhaustive, random };
// Implication claims (thm4.5, cor4.6, thm4.7, prop1.10) over a graph stream:
// matches count satisfied hypotheses, skipped counts vacuous ones.
std::vector<Report> check_implications(GraphSource source, int n_max, int k_min, int k_max,
                                       std::uint64_t seed = 1, int cap = 200);

// Independent uniform edges: pair (u,v), u < v, in row order, kept when the
// next 53-bit draw of a mt19937_64 stream is below the probability.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);
// All labeled graphs on n vertices in edge-mask order; stops when fn returns
// false.
void for_each_graph(int n, const std::function<bool(const Graph&)>& fn);
bool isomorphic(const Graph& a, const Graph& b);

std::string to_text(const Report& r);
std::string csv_header();
std::string to_csv(const Report& r);

}  // namespace tupledom
