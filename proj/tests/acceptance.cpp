// Acceptance suite: one checkable criterion per function, one verdict line
// each. Mismatch rows are printed verbatim so that a failing line carries its
// counterexample.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tupledom/verify.hpp"

using namespace tupledom;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& line) {
    pass = false;
    details.push_back(line);
  }
  void note(const std::string& line) { details.push_back(line); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void absorb_mismatches(Outcome& o, const Report& rep, bool fail_on_mismatch) {
  for (const InstanceRow& m : rep.mismatches) {
    const std::string line = rep.claim + " " + m.params + ": formula=" + m.formula +
                             " solver=" + m.solver + " witness=" + m.witness +
                             (m.witness_ok ? "" : " WITNESS-INVALID");
    if (fail_on_mismatch || !m.witness_ok)
      o.fail(line);
    else
      o.note("discrepancy " + line);
  }
}

// 1. complete graphs, exact closed form, under ten seconds
Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  SweepSpec spec = default_spec("prop2.2");
  spec.n_min = 2;
  spec.n_max = 10;
  spec.k_min = 1;
  spec.k_max = 9;
  const Report rep = sweep(spec);
  absorb_mismatches(o, rep, true);
  const double t = seconds_since(start);
  if (t >= 10.0) o.fail("runtime " + std::to_string(t) + "s exceeds 10s");
  o.summary = "complete graphs: " + std::to_string(rep.matches) + " closed-form matches (" +
              std::to_string(t).substr(0, 4) + "s)";
  return o;
}

// 2. cycles for every tuple multiplicity the family supports
Outcome criterion2() {
  Outcome o;
  SweepSpec spec = default_spec("prop2.3");
  spec.n_min = 3;
  spec.n_max = 12;
  spec.k_min = 1;
  spec.k_max = 3;
  const Report rep = sweep(spec);
  absorb_mismatches(o, rep, true);
  o.summary = "cycles: " + std::to_string(rep.matches) + " closed-form matches";
  return o;
}

// 3. cycle complements; mismatches become discrepancy reports and only an
// invalid solver witness fails the criterion
Outcome criterion3() {
  Outcome o;
  SweepSpec p4 = default_spec("prop2.4");
  p4.n_min = 4;
  p4.n_max = 12;
  const Report rep4 = sweep(p4);
  SweepSpec p5 = default_spec("prop2.5");
  p5.n_min = 5;
  p5.n_max = 12;
  p5.k_min = 2;
  p5.k_max = 9;
  const Report rep5 = sweep(p5);
  absorb_mismatches(o, rep4, false);
  absorb_mismatches(o, rep5, false);
  o.summary = "cycle complements: " + std::to_string(rep4.matches + rep5.matches) + " matches, " +
              std::to_string(rep4.mismatch_count() + rep5.mismatch_count()) +
              " witness-validated discrepancies";
  return o;
}

// 4. complete bipartite case table, exact
Outcome criterion4() {
  Outcome o;
  SweepSpec spec = default_spec("cor2.8");
  spec.k_min = 2;
  spec.k_max = 3;
  spec.max_n = 12;
  const Report rep = sweep(spec);
  absorb_mismatches(o, rep, true);
  o.summary = "complete bipartite table: " + std::to_string(rep.matches) + "/" +
              std::to_string(rep.instances) + " exact matches";
  return o;
}

// 5. multipartite bounds bracket the solver
Outcome criterion5() {
  Outcome o;
  const Report lower = sweep(default_spec("prop2.9"));
  const Report upper = sweep(default_spec("prop2.10"));
  absorb_mismatches(o, lower, true);
  absorb_mismatches(o, upper, true);
  o.summary = "multipartite bounds: " + std::to_string(lower.matches) + " lower and " +
              std::to_string(upper.matches) + " upper brackets hold";
  return o;
}

// 6. edge-count lower bound on seeded random graphs, equality family included
Outcome criterion6() {
  Outcome o;
  SweepSpec spec = default_spec("thm3.3");
  spec.cap = 200;
  spec.seed = 1;
  const Report rep = sweep(spec);
  absorb_mismatches(o, rep, true);
  o.summary = "edge bound: " + std::to_string(rep.matches) +
              " instances bounded, tight family verified with regular split";
  return o;
}

// 7. domatic closed form and the two domatic bounds
Outcome criterion7() {
  Outcome o;
  const auto start = Clock::now();
  SweepSpec p41 = default_spec("prop4.1");
  p41.n_max = 9;
  p41.k_max = 3;
  const Report rep41 = sweep(p41);
  absorb_mismatches(o, rep41, true);
  const Report rep42 = sweep(default_spec("thm4.2"));
  const Report rep43 = sweep(default_spec("cor4.3"));
  absorb_mismatches(o, rep42, true);
  absorb_mismatches(o, rep43, true);
  const double t = seconds_since(start);
  if (t >= 300.0) o.fail("runtime " + std::to_string(t) + "s exceeds 5 minutes");
  std::ostringstream s;
  s << "domatic: complete-graph closed form " << rep41.matches << "/" << rep41.instances
    << " exact; product and n/k bounds hold on " << rep42.matches << " exhaustive instances ("
    << static_cast<int>(t) << "s)";
  o.summary = s.str();
  return o;
}

// 8. implication theorems, plus the two named complete-graph families
Outcome criterion8() {
  Outcome o;
  const auto reports = check_implications(GraphSource::exhaustive, 6, 1, 2);
  for (const Report& rep : reports) absorb_mismatches(o, rep, true);

  // necessity family: d = 2, total d = 1, restrained d = 1 on K(2k+1)
  for (int k = 2; k <= 3; ++k) {
    const Graph g = complete(2 * k + 1);
    const int d = domatic(g, Variant{k, false, false}).value;
    const int dt = domatic(g, Variant{k, true, false}).value;
    const int dr = domatic(g, Variant{k, false, true}).value;
    if (d != 2 || dt != 1 || dr != 1)
      o.fail("K" + std::to_string(2 * k + 1) + " k=" + std::to_string(k) + ": domatic triple (" +
             std::to_string(d) + "," + std::to_string(dt) + "," + std::to_string(dr) +
             ") != (2,1,1)");
  }
  // non-converse family: equal domination numbers with star domatic value 2
  const auto non_converse = [&](int n, int k) {
    const Graph g = complete(n);
    const int gr = gamma(g, Variant{k, false, true}).value;
    const int gp = gamma(g, Variant{k, false, false}).value;
    const int ds = star_domatic(g, Variant{k, false, false}).value;
    if (gr != k || gp != k || ds != 2)
      o.fail("K" + std::to_string(n) + " k=" + std::to_string(k) + ": (" + std::to_string(gp) +
             "," + std::to_string(gr) + ",star=" + std::to_string(ds) + ") != (k,k,2)");
  };
  non_converse(5, 2);
  non_converse(7, 3);
  non_converse(8, 3);
  o.summary = "implications: zero violations on the exhaustive sweep; both named families reproduce";
  return o;
}

// 9. the bundled 16-vertex instance
Outcome criterion9() {
  Outcome o;
  const Graph g = example48();
  const SolveResult plain = gamma(g, Variant{1, false, false});
  if (plain.value != 3) o.fail("gamma=" + std::to_string(plain.value) + " != 3");
  const auto plain_sets = all_min_sets(g, Variant{1, false, false});
  if (plain_sets.size() != 1 || plain_sets[0] != VertexSet{1, 2, 3})
    o.fail("minimum dominating set not uniquely {1,2,3}");

  const SolveResult restrained = gamma(g, Variant{1, false, true});
  if (restrained.value != 4)
    o.fail("restrained gamma=" + std::to_string(restrained.value) + " != 4");
  const auto restrained_sets = all_min_sets(g, Variant{1, false, true});
  bool has_expected = false;
  for (const VertexSet& s : restrained_sets) has_expected |= s == VertexSet{2, 3, 4, 5};
  if (!has_expected) {
    std::string first = restrained_sets.empty() ? "-" : to_string(restrained_sets.front());
    o.fail("{2,3,4,5} is not among the minimum restrained witnesses: it leaves vertices 6 and 7 "
           "uncovered (their closed neighborhoods are {1,6,7}); " +
           std::to_string(restrained_sets.size()) + " minima exist, first " + first);
  }

  const std::vector<VertexSet> classes = {VertexSet{0, 1, 8, 10, 12, 14},
                                          VertexSet{2, 4, 6, 13, 15}, VertexSet{3, 5, 7, 9, 11}};
  std::uint64_t seen = 0;
  for (const VertexSet& c : classes) {
    if ((c.bits & seen) != 0) o.fail("listed dominating sets overlap at " + to_string(c));
    seen |= c.bits;
    if (!satisfies(g, c.bits, Variant{1, false, false}))
      o.fail("listed set " + to_string(c) + " is not dominating");
  }
  o.summary = "bundled instance: gamma=3 unique, restrained gamma=4, three disjoint dominating sets";
  return o;
}

// 10. prisms of cycles: case tables, sandwich interval, sharpness remarks
Outcome criterion10() {
  Outcome o;
  double slowest = 0.0;
  const auto timed_gamma = [&](const Graph& g, const Variant& v) {
    const auto start = Clock::now();
    const SolveResult r = gamma(g, v);
    slowest = std::max(slowest, seconds_since(start));
    return r;
  };

  SweepSpec c53 = default_spec("cor5.3");
  c53.n_min = 4;
  c53.n_max = 10;
  const Report rep53 = sweep(c53);
  absorb_mismatches(o, rep53, true);
  SweepSpec c54 = default_spec("cor5.4");
  c54.n_min = 5;
  c54.n_max = 10;
  const Report rep54 = sweep(c54);
  absorb_mismatches(o, rep54, true);

  const Report rep55 = sweep(default_spec("thm5.5"));
  absorb_mismatches(o, rep55, true);

  // sharpness of the sandwich ends, recomputed from solver values
  for (int n = 5; n <= 10; ++n) {
    if (n == 7) continue;
    const Graph g = cycle(n);
    const int lower = timed_gamma(g, Variant{2, false, true}).value +
                      timed_gamma(complement(g), Variant{2, false, true}).value;
    const int mid = timed_gamma(complementary_prism(g), Variant{3, false, true}).value;
    if (lower != mid)
      o.fail("lower sharpness at k=3 n=" + std::to_string(n) + ": " + std::to_string(lower) +
             " != " + std::to_string(mid));
  }
  {
    const Graph g = cycle(5);
    const int upper = timed_gamma(g, Variant{2, false, true}).value +
                      timed_gamma(complement(g), Variant{2, false, true}).value;
    const int mid = timed_gamma(complementary_prism(g), Variant{2, false, true}).value;
    if (upper != mid) o.fail("upper sharpness at (k,n)=(2,5) fails");
  }
  for (int n = 5; n <= 7; ++n) {
    const Graph g = cycle(n);
    const int upper = timed_gamma(g, Variant{3, false, true}).value +
                      timed_gamma(complement(g), Variant{3, false, true}).value;
    const int mid = timed_gamma(complementary_prism(g), Variant{3, false, true}).value;
    if (upper != mid) o.fail("upper sharpness at k=3 n=" + std::to_string(n) + " fails");
  }
  if (slowest >= 60.0) o.fail("a prism solve took " + std::to_string(slowest) + "s");
  std::ostringstream s;
  s << "prisms: case tables " << rep53.matches + rep54.matches << "/"
    << rep53.instances + rep54.instances << " exact, sandwich " << rep55.matches
    << " intervals, slowest solve " << std::to_string(slowest).substr(0, 6) << "s";
  o.summary = s.str();
  return o;
}

// 11. property suite: predicate implications, low-degree forcing, observation
// chain, and reproducibility
Outcome criterion11() {
  Outcome o;

  // predicate monotonicity and the two restrained readings, exhaustive to 5
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      const std::uint64_t full = g.vertex_mask();
      for (std::uint64_t bits = 0; bits <= full; ++bits)
        for (int k = 1; k <= 3; ++k) {
          if (satisfies(g, bits, Variant{k, false, true}) &&
              !satisfies(g, bits, Variant{k, false, false}))
            o.fail("restrained-implies-plain broken");
          if (satisfies(g, bits, Variant{k, true, true}) &&
              !satisfies(g, bits, Variant{k, true, false}))
            o.fail("total-restrained-implies-total broken");
          const PredicateVerdict a = check_set(g, VertexSet(bits), Variant{k, false, true});
          const PredicateVerdict b = is_krds_by_membership(g, VertexSet(bits), k);
          if (a.holds != b.holds || a.violations != b.violations)
            o.fail("the two restrained readings disagree");
        }
      return true;
    });
    if (!o.pass) break;
  }

  // low-degree forcing, exhaustive over all graphs on up to 7 vertices
  long long checked_sets = 0;
  for (int n = 1; n <= 7 && o.pass; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (int k = 1; k <= 3; ++k) {
        const Variant v{k, false, true};
        std::uint64_t forced = 0;
        for (int x = 0; x < n; ++x)
          if (g.degree(x) <= 2 * k - 1) forced |= std::uint64_t{1} << x;
        if (!forced) continue;
        if (g.min_degree() < k - 1) continue;  // no sets at all
        const std::uint64_t full = g.vertex_mask();
        for (std::uint64_t bits = 0; bits <= full; ++bits) {
          if (!satisfies(g, bits, v)) continue;
          ++checked_sets;
          if ((forced & ~bits) != 0) {
            o.fail("a restrained set misses a low-degree vertex: n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " set=" + to_string(VertexSet(bits)));
            return false;
          }
          for (std::uint64_t m = forced; m; m &= m - 1) {
            const int x = std::countr_zero(m);
            if (std::popcount(g.neighbors_mask(x) & bits) < k - 1) {
              o.fail("a forced vertex lacks k-1 inside neighbors: n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " set=" + to_string(VertexSet(bits)));
              return false;
            }
          }
        }
      }
      return true;
    });
  }

  // observation chain, exhaustive over orders up to 6
  const Report obs = sweep(default_spec("obs2.1"));
  absorb_mismatches(o, obs, true);

  // reproducibility: identical seeds give byte-identical reports
  SweepSpec spec = default_spec("thm3.3");
  spec.seed = 5;
  spec.cap = 120;
  const Report first = sweep(spec);
  const Report second = sweep(spec);
  if (to_text(first) != to_text(second) || to_csv(first) != to_csv(second))
    o.fail("same seed produced different reports");
  if (random_graph(8, 0.5, 42) != random_graph(8, 0.5, 42))
    o.fail("seeded generation is not deterministic");
  const SolveResult wa = gamma(random_graph(9, 0.4, 3), Variant{2, false, true});
  const SolveResult wb = gamma(random_graph(9, 0.4, 3), Variant{2, false, true});
  if (!(wa.witness == wb.witness && wa.explored == wb.explored))
    o.fail("solver witness or node count is not deterministic");

  std::ostringstream s;
  s << "property suite: predicate invariants exhaustive, forcing checked on " << checked_sets
    << " restrained sets, chain clauses " << obs.matches << " matches, reports replayable";
  o.summary = s.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11};
  int failures = 0;
  for (int id = 1; id <= static_cast<int>(criteria.size()); ++id) {
    if (only != 0 && only != id) continue;
    const Outcome o = criteria[static_cast<std::size_t>(id - 1)]();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary
              << "\n";
    for (const std::string& d : o.details) std::cout << "    " << d << "\n";
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
