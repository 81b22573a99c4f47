#include "cli_app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tupledom/verify.hpp"

namespace tupledom::cli {

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + text + "'");
  }
  if (r.lo < 0 || r.hi < r.lo) throw CLI::ValidationError("range", "bad range '" + text + "'");
  return r;
}

Graph load_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string stats_line(const Graph& g) {
  return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) +
         " delta=" + std::to_string(g.min_degree()) + " Delta=" + std::to_string(g.max_degree());
}

Graph build_family(const std::string& family, const std::vector<int>& params) {
  if (family == "complete") {
    if (params.size() != 1) throw std::invalid_argument("complete takes one parameter");
    return complete(params[0]);
  }
  if (family == "cycle") {
    if (params.size() != 1) throw std::invalid_argument("cycle takes one parameter");
    return cycle(params[0]);
  }
  if (family == "multipartite") {
    if (params.empty()) throw std::invalid_argument("multipartite takes the part sizes");
    return complete_multipartite(PartitionSpec{params});
  }
  if (family == "example48") {
    if (!params.empty()) throw std::invalid_argument("example48 takes no parameters");
    return example48();
  }
  throw std::invalid_argument("unknown base family " + family);
}

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string of_family;
  std::vector<int> of_params;
  std::string with_family;
  std::vector<int> with_params;
  std::string in_path;
  std::string out_path;
  int k = 1;
  bool star = false;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  Graph g;
  const auto base = [&]() -> Graph {
    if (!a.in_path.empty()) return load_graph(a.in_path);
    if (a.of_family.empty())
      throw std::invalid_argument(a.family + " needs --of <family> <params> or --in <file>");
    return build_family(a.of_family, !a.of_params.empty() ? a.of_params : a.params);
  };
  if (a.family == "complement") {
    g = complement(base());
  } else if (a.family == "prism") {
    g = complementary_prism(base());
  } else if (a.family == "corona") {
    g = corona_k1(base());
  } else if (a.family == "kjoin") {
    if (a.with_family.empty()) throw std::invalid_argument("kjoin needs --with <family> <params>");
    const Graph left = base();
    const Graph right = build_family(a.with_family, a.with_params);
    g = k_join(left, right, a.k, cyclic_assignment(left.order(), right.order(), a.k, a.star));
  } else {
    g = build_family(a.family, a.params);
  }
  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path);
    if (!f) throw std::invalid_argument("cannot write " + a.out_path);
    f << serialize_graph(g);
  }
  out << stats_line(g) << "\n";
  return 0;
}

int run_compute(const Graph& g, const Variant& v, std::ostream& out) {
  const SolveResult r = gamma(g, v);
  if (r.status != SolveStatus::optimal) {
    out << "infeasible\n";
    return 2;
  }
  out << "gamma=" << r.value << " witness=" << to_string(r.witness) << "\n";
  return 0;
}

int run_domatic(const Graph& g, const Variant& v, bool star, std::ostream& out) {
  const DomaticResult r = star ? star_domatic(g, v) : domatic(g, v);
  if (r.status != SolveStatus::optimal) {
    out << "infeasible\n";
    return 2;
  }
  out << (star ? "star_domatic=" : "domatic=") << r.value << " classes=";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (i) out << "|";
    out << to_string(r.classes[i]);
  }
  out << "\n";
  return 0;
}

int run_decompose(const Graph& g, int k, std::ostream& out) {
  const auto d = decompose(g, k);
  if (!d) {
    out << "infeasible\n";
    return 2;
  }
  out << "gamma=" << d->core_size << " core=" << to_string(d->core)
      << " outer=" << to_string(d->outer) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string claim;
  bool all = false;
  bool list = false;
  std::string n_range, k_range, m_range;
  int max_n = 0;
  int cap = 0;
  std::uint64_t seed = 1;
  std::string family;
  std::string format = "text";
  std::string out_path;
};

SweepSpec make_spec(const VerifyArgs& a, const std::string& claim) {
  SweepSpec s;
  s.claim = claim;
  if (!a.n_range.empty()) {
    const Range r = parse_range(a.n_range);
    s.n_min = r.lo;
    s.n_max = r.hi;
  }
  if (!a.k_range.empty()) {
    const Range r = parse_range(a.k_range);
    s.k_min = r.lo;
    s.k_max = r.hi;
  }
  if (!a.m_range.empty()) {
    const Range r = parse_range(a.m_range);
    s.m_min = r.lo;
    s.m_max = r.hi;
  }
  s.max_n = a.max_n;
  s.cap = a.cap;
  s.seed = a.seed;
  s.family = a.family;
  return s;
}

int run_verify(const VerifyArgs& a, bool single_report, std::ostream& out) {
  if (a.list) {
    out << "id,kind,params,precondition,must_match\n";
    for (const ClaimInfo& c : claim_registry())
      out << c.id << "," << to_string(c.kind) << "," << c.params << ",\"" << c.precondition
          << "\"," << (c.must_match ? "yes" : "no") << "\n";
    return 0;
  }
  std::vector<std::string> claims;
  if (a.all) {
    claims = sweepable_claims();
  } else {
    if (a.claim.empty()) throw std::invalid_argument("give a claim id or --all");
    if (!find_claim(a.claim)) throw std::invalid_argument("unknown claim " + a.claim);
    claims = {a.claim};
  }
  std::ostringstream body;
  bool failed = false;
  if (a.format == "csv") body << csv_header();
  for (const std::string& id : claims) {
    const Report rep = sweep(make_spec(a, id));
    if (a.format == "csv")
      body << to_csv(rep);
    else
      body << to_text(rep);
    const bool must = find_claim(id)->must_match;
    if (must && rep.mismatch_count() > 0) failed = true;
    if (!must && !rep.all_witnesses_ok()) failed = true;
  }
  if (!single_report && a.format == "text")
    body << (failed ? "result: mismatches\n" : "result: ok\n");
  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path);
    if (!f) throw std::invalid_argument("cannot write " + a.out_path);
    f << body.str();
    out << (failed ? "result: mismatches\n" : "result: ok\n");
  } else {
    out << body.str();
  }
  return failed ? 2 : 0;
}

int run_example48(std::ostream& out) {
  const Graph g = example48();
  out << stats_line(g) << "\n";
  const SolveResult plain = gamma(g, Variant{1, false, false});
  const auto plain_sets = all_min_sets(g, Variant{1, false, false});
  out << "gamma=" << plain.value << " min_sets=";
  for (std::size_t i = 0; i < plain_sets.size(); ++i) {
    if (i) out << "|";
    out << to_string(plain_sets[i]);
  }
  out << (plain_sets.size() == 1 ? " unique=yes" : " unique=no") << "\n";
  const SolveResult restrained = gamma(g, Variant{1, false, true});
  out << "gamma_restrained=" << restrained.value << " witness=" << to_string(restrained.witness)
      << "\n";
  const std::vector<VertexSet> classes = {VertexSet{0, 1, 8, 10, 12, 14},
                                          VertexSet{2, 4, 6, 13, 15}, VertexSet{3, 5, 7, 9, 11}};
  std::uint64_t seen = 0;
  bool ok = true;
  for (const VertexSet& c : classes) {
    ok = ok && (c.bits & seen) == 0 && is_kds(g, c, 1).holds;
    seen |= c.bits;
  }
  out << "disjoint_dominating_sets=";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out << "|";
    out << to_string(classes[i]);
  }
  out << " all_valid=" << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for k-tuple restrained domination and domatic numbers"};
  app.require_subcommand(1);

  // gen
  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "build a graph family and write an edge list");
  gen->add_option("family", gen_args.family,
                  "complete|cycle|multipartite|complement|prism|corona|kjoin|example48")
      ->required();
  gen->add_option("params", gen_args.params, "family parameters");
  gen->add_option("--of", gen_args.of_family, "base family for derived constructions");
  gen->add_option("--of-params", gen_args.of_params, "base family parameters (defaults to params)");
  gen->add_option("--with", gen_args.with_family, "right-hand family for kjoin");
  gen->add_option("--with-params", gen_args.with_params, "right-hand family parameters");
  gen->add_option("--in", gen_args.in_path, "base graph file for derived constructions");
  gen->add_option("--k", gen_args.k, "join multiplicity for kjoin");
  gen->add_flag("--star", gen_args.star, "exactly-k join");
  gen->add_option("--out", gen_args.out_path, "write the edge list here");

  // compute / domatic / decompose
  struct SolveArgs {
    std::string path;
    int k = 1;
    bool total = false;
    bool restrained = false;
    bool domatic = false;
    bool star = false;
    int max_n = 0;
  };
  SolveArgs comp, doma, deco;
  CLI::App* compute = app.add_subcommand("compute", "minimum cardinality of a variant set");
  compute->add_option("graph", comp.path, "edge-list file, or - for stdin")->required();
  compute->add_option("--k", comp.k, "tuple multiplicity")->required();
  compute->add_flag("--total", comp.total);
  compute->add_flag("--restrained", comp.restrained);
  compute->add_flag("--domatic", comp.domatic, "maximize partition classes instead");
  compute->add_flag("--star", comp.star, "with --domatic, require a minimum-cardinality class");
  compute->add_option("--max-n", comp.max_n, "raise or lower the graph size limit");

  CLI::App* domatic_cmd = app.add_subcommand("domatic", "maximum variant partition size");
  domatic_cmd->add_option("graph", doma.path)->required();
  domatic_cmd->add_option("--k", doma.k)->required();
  domatic_cmd->add_flag("--total", doma.total);
  domatic_cmd->add_flag("--restrained", doma.restrained);
  domatic_cmd->add_flag("--star", doma.star, "require a minimum-cardinality class");
  domatic_cmd->add_option("--max-n", doma.max_n);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "core/outer split along a minimum restrained set");
  decompose_cmd->add_option("graph", deco.path)->required();
  decompose_cmd->add_option("--k", deco.k)->required();
  decompose_cmd->add_option("--max-n", deco.max_n);

  // verify / sweep
  VerifyArgs ver, swp;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run claim sweeps against the solver");
  verify_cmd->add_option("claim", ver.claim, "registry claim id");
  verify_cmd->add_flag("--all", ver.all, "run the whole registry");
  verify_cmd->add_flag("--list", ver.list, "print the claim registry");
  verify_cmd->add_option("--n", ver.n_range, "range A..B");
  verify_cmd->add_option("--k", ver.k_range, "range A..B");
  verify_cmd->add_option("--m", ver.m_range, "range A..B (second parameter)");
  verify_cmd->add_option("--max-n", ver.max_n);
  verify_cmd->add_option("--cap", ver.cap, "random instance cap");
  verify_cmd->add_option("--seed", ver.seed);
  verify_cmd->add_option("--family", ver.family);
  verify_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"text", "csv"}));
  verify_cmd->add_option("--out", ver.out_path);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a single claim sweep");
  sweep_cmd->add_option("claim", swp.claim)->required();
  sweep_cmd->add_option("--n", swp.n_range);
  sweep_cmd->add_option("--k", swp.k_range);
  sweep_cmd->add_option("--m", swp.m_range);
  sweep_cmd->add_option("--max-n", swp.max_n);
  sweep_cmd->add_option("--cap", swp.cap);
  sweep_cmd->add_option("--seed", swp.seed);
  sweep_cmd->add_option("--family", swp.family);
  sweep_cmd->add_option("--format", swp.format)->check(CLI::IsMember({"text", "csv"}));
  sweep_cmd->add_option("--out", swp.out_path);

  CLI::App* example_cmd = app.add_subcommand("example48", "facts about the bundled instance");
  (void)example_cmd;

  std::vector<const char*> argv;
  argv.push_back("tupledom");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args, out);
    if (compute->parsed()) {
      if (comp.max_n > 0) set_size_limit(comp.max_n);
      const Variant v{comp.k, comp.total, comp.restrained};
      if (comp.domatic || comp.star) return run_domatic(load_graph(comp.path), v, comp.star, out);
      return run_compute(load_graph(comp.path), v, out);
    }
    if (domatic_cmd->parsed()) {
      if (doma.max_n > 0) set_size_limit(doma.max_n);
      return run_domatic(load_graph(doma.path), Variant{doma.k, doma.total, doma.restrained},
                         doma.star, out);
    }
    if (decompose_cmd->parsed()) {
      if (deco.max_n > 0) set_size_limit(deco.max_n);
      return run_decompose(load_graph(deco.path), deco.k, out);
    }
    if (verify_cmd->parsed()) return run_verify(ver, false, out);
    if (sweep_cmd->parsed()) {
      if (swp.claim.empty()) throw std::invalid_argument("sweep needs a claim id");
      swp.all = false;
      return run_verify(swp, true, out);
    }
    if (example_cmd->parsed()) return run_example48(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace tupledom::cli
