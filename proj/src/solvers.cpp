#include "tupledom/solvers.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tupledom/rational.hpp"

namespace tupledom {

namespace {

void validate(const Graph& g, const Variant& v) {
  if (v.k < 1) throw std::invalid_argument("k must be positive");
  if (g.order() > size_limit())
    throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                " exceeds the size limit " + std::to_string(size_limit()));
}

// Calls fn(bits) for every r-subset of the bits of pool, ascending in colex
// order over the pool's bit positions. Stops early when fn returns true.
template <typename F>
bool for_each_subset_of_size(std::uint64_t pool, int r, F&& fn) {
  const int f = std::popcount(pool);
  if (r < 0 || r > f) return false;
  if (r == 0) return fn(std::uint64_t{0});
  std::array<int, 64> pos{};
  int idx = 0;
  for (std::uint64_t m = pool; m; m &= m - 1) pos[static_cast<std::size_t>(idx++)] = std::countr_zero(m);
  const std::uint64_t limit = f == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1;
  std::uint64_t sub = (std::uint64_t{1} << r) - 1;
  while (true) {
    std::uint64_t expanded = 0;
    for (std::uint64_t m = sub; m; m &= m - 1)
      expanded |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(m))];
    if (fn(expanded)) return true;
    const std::uint64_t u = sub & (~sub + 1);
    const std::uint64_t next = sub + u;
    if (next == 0 || next > limit) return false;
    sub = next | ((sub ^ next) >> 2) / u;
  }
}

int thm33_lower_bound(const Graph& g, const Variant& v) {
  // Edge-count bound for restrained variants; vacuous for the others.
  if (!v.restrained) return 0;
  const long long n = g.order(), m = g.size(), k = v.k;
  return static_cast<int>(std::max<long long>(0, ceil_div(3 * k * n - 2 * m, 2 * k + 1)));
}

// Backtracking partition search with restricted-growth symmetry breaking:
// classes are opened in vertex order, so class minima increase. An optional
// immutable class (already a valid set) can be carried alongside.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const Variant& v, std::uint64_t assignable, int classes,
                  std::uint64_t fixed)
      : g_(g), v_(v), d_(classes), fixed_(fixed) {
    for (std::uint64_t m = assignable; m; m &= m - 1) verts_.push_back(std::countr_zero(m));
    const int n = g.order();
    cls_.assign(static_cast<std::size_t>(d_), 0);
    cover_.assign(static_cast<std::size_t>(d_ * n), 0);
    uncov_.assign(static_cast<std::size_t>(n), 0);
    class_of_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
      uncov_[static_cast<std::size_t>(x)] = std::popcount(coverage_mask(x) & assignable);
  }

  bool run(std::vector<std::uint64_t>& out) {
    if (!initial_feasible()) return false;
    if (!extend(0)) return false;
    out = cls_;
    return true;
  }

  std::uint64_t explored = 0;

 private:
  std::uint64_t coverage_mask(int x) const {
    return v_.total ? g_.neighbors_mask(x) : g_.closed_mask(x);
  }

  bool initial_feasible() const {
    for (int x = 0; x < g_.order(); ++x)
      if (uncov_[static_cast<std::size_t>(x)] < v_.k) return false;
    return true;
  }

  bool coverage_ok_after(std::uint64_t touched) const {
    const int n = g_.order();
    for (std::uint64_t m = touched; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      const int remaining = uncov_[static_cast<std::size_t>(x)];
      for (int c = 0; c < d_; ++c) {
        const int have = c < used_ ? cover_[static_cast<std::size_t>(c * n + x)] : 0;
        if (have + remaining < v_.k) return false;
      }
    }
    return true;
  }

  bool restrained_ok_after(int v, int c) const {
    const std::uint64_t nb = g_.neighbors_mask(v);
    const int deg = std::popcount(nb);
    // v is permanently outside every other opened class.
    for (int c2 = 0; c2 < used_; ++c2) {
      if (c2 == c) continue;
      if (std::popcount(nb & cls_[static_cast<std::size_t>(c2)]) > deg - v_.k) return false;
    }
    // Neighbors already placed elsewhere (or in the fixed class) now see one
    // more member of class c.
    for (std::uint64_t m = nb; m; m &= m - 1) {
      const int y = std::countr_zero(m);
      const bool outside_c =
          (fixed_ >> y & 1u) ||
          (class_of_[static_cast<std::size_t>(y)] >= 0 && class_of_[static_cast<std::size_t>(y)] != c);
      if (!outside_c) continue;
      const std::uint64_t ynb = g_.neighbors_mask(y);
      if (std::popcount(ynb & cls_[static_cast<std::size_t>(c)]) > std::popcount(ynb) - v_.k)
        return false;
    }
    return true;
  }

  bool extend(std::size_t idx) {
    if (idx == verts_.size()) {
      if (used_ != d_) return false;
      for (const std::uint64_t c : cls_)
        if (!satisfies(g_, c, v_)) throw std::logic_error("partition search produced a bad class");
      return true;
    }
    if (d_ - used_ > static_cast<int>(verts_.size() - idx)) return false;
    const int v = verts_[idx];
    const int n = g_.order();
    const std::uint64_t cov = coverage_mask(v);
    const int top = std::min(used_, d_ - 1);
    for (int c = 0; c <= top; ++c) {
      ++explored;
      const int prev_used = used_;
      if (c == used_) ++used_;
      cls_[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
      class_of_[static_cast<std::size_t>(v)] = c;
      for (std::uint64_t m = cov; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        ++cover_[static_cast<std::size_t>(c * n + x)];
        --uncov_[static_cast<std::size_t>(x)];
      }
      const bool ok = coverage_ok_after(cov) && (!v_.restrained || restrained_ok_after(v, c));
      if (ok && extend(idx + 1)) return true;
      for (std::uint64_t m = cov; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        --cover_[static_cast<std::size_t>(c * n + x)];
        ++uncov_[static_cast<std::size_t>(x)];
      }
      class_of_[static_cast<std::size_t>(v)] = -1;
      cls_[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << v);
      used_ = prev_used;
    }
    return false;
  }

  const Graph& g_;
  Variant v_;
  std::vector<int> verts_;
  int d_;
  std::uint64_t fixed_;
  std::vector<std::uint64_t> cls_;
  int used_ = 0;
  std::vector<int> cover_;
  std::vector<int> uncov_;
  std::vector<int> class_of_;
};

int domatic_upper_bound(const Graph& g, const Variant& v, int gamma_value) {
  const int n = g.order();
  int ub = gamma_value > 0 ? n / gamma_value : 1;
  const int budget = g.min_degree() + (v.total ? 0 : 1);
  ub = std::min(ub, budget / v.k);
  return std::max(ub, 1);
}

}  // namespace

VertexSet forced_vertices(const Graph& g, const Variant& v) {
  VertexSet forced;
  if (!v.restrained) return forced;
  for (int x = 0; x < g.order(); ++x)
    if (g.degree(x) <= 2 * v.k - 1) forced.insert(x);
  return forced;
}

bool feasible(const Graph& g, const Variant& v) {
  validate(g, v);
  return satisfies(g, g.vertex_mask(), v);
}

SolveResult gamma(const Graph& g, const Variant& v) {
  validate(g, v);
  SolveResult result;
  ++result.explored;
  if (!satisfies(g, g.vertex_mask(), v)) return result;
  const int n = g.order();
  const std::uint64_t forced = forced_vertices(g, v).bits;
  const int nforced = std::popcount(forced);
  int lb = std::max(nforced, thm33_lower_bound(g, v));
  if (n > 0) lb = std::max(lb, v.k);
  const std::uint64_t free = g.vertex_mask() & ~forced;
  for (int s = lb; s <= n; ++s) {
    const bool found = for_each_subset_of_size(free, s - nforced, [&](std::uint64_t extra) {
      ++result.explored;
      const std::uint64_t cand = forced | extra;
      if (!satisfies(g, cand, v)) return false;
      result.status = SolveStatus::optimal;
      result.value = s;
      result.witness = VertexSet(cand);
      return true;
    });
    if (found) return result;
  }
  // The full set passed the feasibility probe, so the loop cannot fall through.
  throw std::logic_error("size scan exhausted without finding the feasible full set");
}

std::vector<VertexSet> all_min_sets(const Graph& g, const Variant& v) {
  SolveResult r = gamma(g, v);
  if (r.status != SolveStatus::optimal)
    throw std::domain_error("no feasible set for " + to_string(v));
  const std::uint64_t forced = forced_vertices(g, v).bits;
  std::vector<VertexSet> out;
  for_each_subset_of_size(g.vertex_mask() & ~forced, r.value - std::popcount(forced),
                          [&](std::uint64_t extra) {
                            const std::uint64_t cand = forced | extra;
                            if (satisfies(g, cand, v)) out.emplace_back(cand);
                            return false;
                          });
  return out;
}

DomaticResult domatic(const Graph& g, const Variant& v) {
  validate(g, v);
  DomaticResult result;
  if (g.order() == 0) {
    result.status = SolveStatus::optimal;
    return result;
  }
  SolveResult gam = gamma(g, v);
  result.explored = gam.explored;
  if (gam.status != SolveStatus::optimal) return result;
  const int ub = domatic_upper_bound(g, v, gam.value);
  for (int d = ub; d >= 2; --d) {
    PartitionSearch search(g, v, g.vertex_mask(), d, 0);
    std::vector<std::uint64_t> classes;
    const bool found = search.run(classes);
    result.explored += search.explored;
    if (!found) continue;
    result.status = SolveStatus::optimal;
    result.value = d;
    for (std::uint64_t c : classes) result.classes.emplace_back(c);
    for (const VertexSet& c : result.classes) result.star |= c.count() == gam.value;
    return result;
  }
  result.status = SolveStatus::optimal;
  result.value = 1;
  result.classes = {VertexSet(g.vertex_mask())};
  result.star = gam.value == g.order();
  return result;
}

DomaticResult star_domatic(const Graph& g, const Variant& v) {
  validate(g, v);
  DomaticResult result;
  if (g.order() == 0) {
    result.status = SolveStatus::optimal;
    return result;
  }
  SolveResult gam = gamma(g, v);
  result.explored = gam.explored;
  if (gam.status != SolveStatus::optimal) return result;
  const std::vector<VertexSet> minima = all_min_sets(g, v);
  const int ub = domatic_upper_bound(g, v, gam.value);
  for (int d = ub; d >= 2; --d) {
    for (const VertexSet& m : minima) {
      PartitionSearch search(g, v, g.vertex_mask() & ~m.bits, d - 1, m.bits);
      std::vector<std::uint64_t> rest;
      const bool found = search.run(rest);
      result.explored += search.explored;
      if (!found) continue;
      result.status = SolveStatus::optimal;
      result.value = d;
      result.classes.emplace_back(m);
      for (std::uint64_t c : rest) result.classes.emplace_back(c);
      std::sort(result.classes.begin(), result.classes.end(),
                [](VertexSet a, VertexSet b) { return std::countr_zero(a.bits) < std::countr_zero(b.bits); });
      result.star = true;
      return result;
    }
  }
  result.status = SolveStatus::optimal;
  result.value = 1;
  result.classes = {VertexSet(g.vertex_mask())};
  result.star = gam.value == g.order();
  return result;
}

std::optional<int> t0(const PartitionSpec& spec, int k) {
  const Graph g = complete_multipartite(spec);
  const Variant v{k, false, true};
  SolveResult r = gamma(g, v);
  if (r.status != SolveStatus::optimal)
    throw std::domain_error("no restrained set exists for k=" + std::to_string(k));
  if (r.value == g.order()) return std::nullopt;
  std::vector<std::uint64_t> part_masks;
  int base = 0;
  for (int p : spec.parts) {
    std::uint64_t m = 0;
    for (int i = 0; i < p; ++i) m |= std::uint64_t{1} << (base + i);
    part_masks.push_back(m);
    base += p;
  }
  int best = static_cast<int>(spec.parts.size()) + 1;
  for (const VertexSet& s : all_min_sets(g, v)) {
    int t = 0;
    for (std::uint64_t pm : part_masks)
      if ((s.bits & pm) != pm) ++t;
    best = std::min(best, t);
  }
  return best;
}

std::optional<Decomposition> decompose(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("decomposition requires k >= 2");
  SolveResult r = gamma(g, Variant{k, false, true});
  if (r.status != SolveStatus::optimal) return std::nullopt;
  Decomposition d;
  d.core = r.witness;
  d.outer = VertexSet(g.vertex_mask() & ~r.witness.bits);
  d.core_size = r.value;
  return d;
}

}  // namespace tupledom
