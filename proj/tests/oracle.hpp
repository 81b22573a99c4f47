#pragma once

// Test-side reference implementations. These deliberately avoid the library's
// bitset predicates and search shortcuts: membership tests loop over
// Graph::adjacent, optima come from plain enumeration by increasing size, and
// partitions are enumerated without pruning.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "tupledom/graph.hpp"
#include "tupledom/predicates.hpp"

namespace oracle {

using tupledom::Graph;
using tupledom::Variant;

inline bool holds(const Graph& g, const std::vector<int>& set, const Variant& v) {
  const int n = g.order();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int s : set) in[static_cast<std::size_t>(s)] = true;
  for (int x = 0; x < n; ++x) {
    int inside = 0, outside = 0;
    for (int y = 0; y < n; ++y) {
      if (y != x && g.adjacent(x, y)) {
        if (in[static_cast<std::size_t>(y)]) ++inside;
        else ++outside;
      }
    }
    int coverage = inside;
    if (!v.total && in[static_cast<std::size_t>(x)]) ++coverage;
    if (coverage < v.k) return false;
    if (v.restrained && !in[static_cast<std::size_t>(x)] && outside < v.k) return false;
  }
  return true;
}

template <typename F>
inline void for_each_subset_of_size(int n, int size, F&& fn) {
  std::vector<int> acc;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(acc.size()) == size) {
      fn(acc);
      return;
    }
    for (int v = from; v + (size - static_cast<int>(acc.size())) <= n; ++v) {
      acc.push_back(v);
      go(v + 1);
      acc.pop_back();
    }
  };
  go(0);
}

inline std::optional<std::pair<int, std::vector<std::vector<int>>>> gamma_all(const Graph& g,
                                                                              const Variant& v) {
  const int n = g.order();
  for (int size = 0; size <= n; ++size) {
    std::vector<std::vector<int>> found;
    for_each_subset_of_size(n, size, [&](const std::vector<int>& set) {
      if (holds(g, set, v)) found.push_back(set);
    });
    if (!found.empty()) return std::make_pair(size, found);
  }
  return std::nullopt;
}

inline std::optional<int> gamma(const Graph& g, const Variant& v) {
  auto r = gamma_all(g, v);
  if (!r) return std::nullopt;
  return r->first;
}

// Every set partition of 0..n-1, restricted-growth order.
template <typename F>
inline void for_each_partition(int n, F&& fn) {
  std::vector<std::vector<int>> classes;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      fn(classes);
      return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      classes[c].push_back(v);
      go(v + 1);
      classes[c].pop_back();
    }
    classes.push_back({v});
    go(v + 1);
    classes.pop_back();
  };
  go(0);
}

inline std::optional<int> domatic(const Graph& g, const Variant& v) {
  const int n = g.order();
  if (n == 0) return 0;
  int best = 0;
  for_each_partition(n, [&](const std::vector<std::vector<int>>& classes) {
    if (static_cast<int>(classes.size()) <= best) return;
    for (const auto& c : classes)
      if (!holds(g, c, v)) return;
    best = static_cast<int>(classes.size());
  });
  if (best == 0) return std::nullopt;
  return best;
}

inline std::optional<int> star_domatic(const Graph& g, const Variant& v) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto gam = gamma(g, v);
  if (!gam) return std::nullopt;
  int best = 0;
  for_each_partition(n, [&](const std::vector<std::vector<int>>& classes) {
    if (static_cast<int>(classes.size()) <= best) return;
    bool has_min = false;
    for (const auto& c : classes) {
      if (!holds(g, c, v)) return;
      has_min = has_min || static_cast<int>(c.size()) == *gam;
    }
    if (has_min) best = static_cast<int>(classes.size());
  });
  return std::max(best, 1);
}

inline std::optional<int> t0(const std::vector<int>& parts, int k) {
  const Graph g = tupledom::complete_multipartite(tupledom::PartitionSpec{parts});
  const auto r = gamma_all(g, Variant{k, false, true});
  if (!r) return std::nullopt;  // infeasible; caller decides
  if (r->first == g.order()) return std::nullopt;
  std::vector<std::pair<int, int>> spans;  // [lo, hi) per part
  int base = 0;
  for (int p : parts) {
    spans.emplace_back(base, base + p);
    base += p;
  }
  int best = static_cast<int>(parts.size()) + 1;
  for (const auto& set : r->second) {
    int t = 0;
    for (auto [lo, hi] : spans) {
      int have = 0;
      for (int v : set)
        if (v >= lo && v < hi) ++have;
      if (have < hi - lo) ++t;
    }
    best = std::min(best, t);
  }
  return best;
}

}  // namespace oracle
