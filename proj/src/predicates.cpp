#include "tupledom/predicates.hpp"

#include <stdexcept>

namespace tupledom {

namespace {

void validate(const Graph& g, VertexSet s, const Variant& v) {
  if (v.k < 1) throw std::invalid_argument("k must be positive");
  if (!s.subset_of(VertexSet(g.vertex_mask())))
    throw std::invalid_argument("set " + to_string(s) + " is not a vertex subset");
}

}  // namespace

std::string to_string(const Variant& v) {
  std::string out = "k=" + std::to_string(v.k);
  if (v.total) out += " total";
  if (v.restrained) out += " restrained";
  return out;
}

bool satisfies(const Graph& g, std::uint64_t set, const Variant& v) {
  const std::uint64_t outside = g.vertex_mask() & ~set;
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    const std::uint64_t nb = g.neighbors_mask(x);
    const std::uint64_t cov = v.total ? nb : (nb | std::uint64_t{1} << x);
    if (std::popcount(cov & set) < v.k) return false;
    if (v.restrained && (outside >> x & 1u) && std::popcount(nb & outside) < v.k) return false;
  }
  return true;
}

PredicateVerdict check_set(const Graph& g, VertexSet s, const Variant& v) {
  validate(g, s, v);
  PredicateVerdict verdict;
  const std::uint64_t outside = g.vertex_mask() & ~s.bits;
  for (int x = 0; x < g.order(); ++x) {
    const std::uint64_t nb = g.neighbors_mask(x);
    const std::uint64_t cov = v.total ? nb : (nb | std::uint64_t{1} << x);
    if (std::popcount(cov & s.bits) < v.k) verdict.violations.push_back({x, Clause::coverage});
    if (v.restrained && (outside >> x & 1u) && std::popcount(nb & outside) < v.k)
      verdict.violations.push_back({x, Clause::outside_degree});
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

PredicateVerdict is_kds(const Graph& g, VertexSet s, int k) {
  return check_set(g, s, Variant{k, false, false});
}

PredicateVerdict is_ktds(const Graph& g, VertexSet s, int k) {
  return check_set(g, s, Variant{k, true, false});
}

PredicateVerdict is_krds(const Graph& g, VertexSet s, int k) {
  PredicateVerdict verdict = check_set(g, s, Variant{k, false, true});
  PredicateVerdict by_membership = is_krds_by_membership(g, s, k);
  if (verdict.holds != by_membership.holds || verdict.violations != by_membership.violations)
    throw std::logic_error("the two restrained-set readings disagree on " + to_string(s));
  return verdict;
}

PredicateVerdict is_ktrds(const Graph& g, VertexSet s, int k) {
  return check_set(g, s, Variant{k, true, true});
}

PredicateVerdict is_krds_by_membership(const Graph& g, VertexSet s, int k) {
  validate(g, s, Variant{k, false, true});
  PredicateVerdict verdict;
  const std::uint64_t outside = g.vertex_mask() & ~s.bits;
  for (int x = 0; x < g.order(); ++x) {
    const std::uint64_t nb = g.neighbors_mask(x);
    if (s.contains(x)) {
      if (std::popcount(nb & s.bits) < k - 1) verdict.violations.push_back({x, Clause::coverage});
    } else {
      if (std::popcount(nb & s.bits) < k) verdict.violations.push_back({x, Clause::coverage});
      if (std::popcount(nb & outside) < k)
        verdict.violations.push_back({x, Clause::outside_degree});
    }
  }
  verdict.holds = verdict.violations.empty();
  return verdict;
}

}  // namespace tupledom
