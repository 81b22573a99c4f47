#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tupledom/rational.hpp"

namespace tupledom {

// Closed forms and bounds, one function per registry claim. Every function
// rejects parameters outside its applicability range instead of guessing.

// Complete graph, restrained k-tuple domination: n when n <= 2k, else k.
int krds_complete(int n, int k);
// Cycle, k = 1: ceil(n/3), plus one when n = 2 mod 3.
int rds_cycle(int n);
// Cycle, k in {2,3}: the whole vertex set.
int krds_cycle(int n, int k);
// Cycle complement, k = 1: 4, 3, 2 for n = 4, 5, >= 6.
int rds_cycle_complement(int n);
// Cycle complement, n >= 5, 2 <= k <= n-3: n / k+2 / k+1 by the n-range.
int krds_cycle_complement(int n, int k);
// Bipartite order-n graphs with min degree >= k-1 >= 1: [2k-2, n].
std::pair<int, int> bipartite_bounds(int order, int k);
// Complete bipartite K_{n,m}, n >= m >= k-1 >= 1: 2k / k+m / n+m by case.
int krds_complete_bipartite(int n, int m, int k);
// Complete p-partite, p >= 3: ceil(p(k-1)/(p-1)).
int multipartite_lower(int p, int k);
// Complete p-partite with a proper restrained set: n - k - ceil(k/(t0-1)).
int multipartite_upper(int n, int k, int t0);
// (3kn - 2m) / (2k+1), valid for min degree >= k-1.
Rat edge_lower_bound(int n, int m, int k);
// Restrained k-tuple domatic number of the complete graph: floor(n/k).
int domatic_complete(int n, int k);
// Generic restrained domatic upper bound floor(n/k).
int domatic_upper(int n, int k);
// Bipartite domatic bound: n/(2k-2) for the balanced complete graph on 2k-2
// vertices, n/(2k) otherwise.
Rat domatic_bipartite_upper(int n, int k, bool balanced_complete);

struct PrismBound {
  bool exact = false;  // exact value vs lower bound
  int value = 0;
};
// Prism of an ell-regular graph with k-2 <= ell <= 2k-3: exactly 2n when
// n <= ell+2k-1, otherwise at least n+k.
PrismBound prism_regular_bound(int n, int ell, int k);
// Interval [a+b, c+d] from the four graph-side values.
std::pair<int, int> prism_sandwich(int lower_g, int lower_gbar, int upper_g, int upper_gbar);

enum class ClaimKind { exact, lower_bound, upper_bound, equivalence };
std::string to_string(ClaimKind k);

struct ClaimInfo {
  std::string id;
  ClaimKind kind;
  std::string params;        // parameter names, e.g. "n,k"
  std::string precondition;  // applicability description
  // When false, sweep mismatches are reported with re-validated witnesses
  // instead of failing the run.
  bool must_match = true;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(const std::string& id);

}  // namespace tupledom
