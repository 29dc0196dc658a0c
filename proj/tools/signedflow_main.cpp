#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "signedflow/certificate.hpp"
#include "signedflow/construct.hpp"
#include "signedflow/flows.hpp"
#include "signedflow/generators.hpp"
#include "signedflow/graph.hpp"
#include "signedflow/search.hpp"
#include "signedflow/shrubbery.hpp"

namespace {

using namespace signedflow;

// Exit codes: 0 success, 1 negative result, 2 input error, 3 budget
// exhausted, 4 internal invariant failure.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

long long env_budget() {
  if (const char* s = std::getenv("SIGNEDFLOW_BUDGET")) {
    try {
      long long v = std::stoll(s);
      if (v > 0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring malformed SIGNEDFLOW_BUDGET\n";
  }
  return kDefaultSearchBudget;
}

GroupSpec parse_group(const std::string& s) {
  if (s == "z2z3") return GroupSpec::z2z3();
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string kind = s.substr(0, colon);
    int k = std::stoi(s.substr(colon + 1));
    if (kind == "int") return GroupSpec::integer(k);
    if (kind == "mod") return GroupSpec::modulo(k);
  }
  throw ParseError("bad group spec (want int:K, mod:K or z2z3): " + s);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string edge_set_str(const EdgeSet& s) {
  if (s.empty()) return "none";
  std::string out;
  for (EdgeId e : s) {
    if (!out.empty()) out += " ";
    out += std::to_string(e);
  }
  return out;
}

int cmd_check(const std::string& path) {
  SignedGraph g = parse_graph_file(path);
  bool connected = is_connected(g);
  std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
  std::cout << "balanced: " << (is_balanced(g) ? "yes" : "no") << "\n";
  std::cout << "negativeness: " << negativeness(g) << "\n";
  std::cout << "bridges: " << edge_set_str(bridges(g)) << "\n";

  // admissibility with the violated clause
  std::string reason;
  std::vector<int> comp = component_ids(g);
  int ncomp = component_count(g);
  for (int c = 0; c < ncomp && reason.empty(); ++c) {
    VertexSet keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c) keep.add(v);
    Subgraph sub = induced_by_vertices(g, keep);
    if (negativeness(sub.graph) == 1) {
      reason = "negativeness 1";
      if (ncomp > 1) reason += " in component " + std::to_string(c);
      break;
    }
    for (EdgeId b : bridges(sub.graph)) {
      EdgeSet rest;
      for (EdgeId e = 0; e < sub.graph.edge_count(); ++e)
        if (e != b) rest.add(e);
      Subgraph cut = spanning_by_edges(sub.graph, rest);
      std::vector<int> cc = component_ids(cut.graph);
      for (Vertex side : {sub.graph.edge(b).u, sub.graph.edge(b).v}) {
        VertexSet part;
        for (Vertex v = 0; v < cut.graph.vertex_count(); ++v)
          if (cc[v] == cc[side]) part.add(v);
        if (is_balanced(induced_by_vertices(cut.graph, part).graph)) {
          reason = "cut-edge " + std::to_string(sub.edge_to_parent[b]) +
                   " isolates a balanced component";
          break;
        }
      }
      if (!reason.empty()) break;
    }
  }
  if (reason.empty()) {
    std::cout << "admissible: yes\n";
    return kExitOk;
  }
  std::cout << "admissible: no (" << reason << ")\n";
  return kExitNegative;
}

int cmd_solve(const std::string& path, const std::string& group_str, bool balanced,
              const std::vector<std::string>& prescriptions,
              const std::vector<long long>& forbidden, long long max_nodes,
              const std::string& out_path) {
  SignedGraph g = parse_graph_file(path);
  GroupSpec group = parse_group(group_str);
  SearchConstraints cons;
  cons.balanced = balanced;
  for (const std::string& p : prescriptions) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("bad --prescribe (want EDGE=VALUE)");
    int e = std::stoi(p.substr(0, eq));
    std::string val = p.substr(eq + 1);
    GroupValue v;
    if (group.kind == GroupKind::z2z3) {
      auto comma = val.find(',');
      if (comma == std::string::npos) throw ParseError("z2z3 value needs a,b");
      v = {std::stoll(val.substr(0, comma)), std::stoll(val.substr(comma + 1))};
    } else {
      v = {std::stoll(val), 0};
    }
    cons.prescribed[e] = v;
  }
  if (!forbidden.empty()) {
    for (const EdgeRec& e : g.edges())
      for (long long t : forbidden) cons.forbidden_abs[e.id].insert(t);
  }
  SearchOptions opts;
  opts.max_nodes = max_nodes;
  auto witness = find_nzf(g, group, cons, opts);
  if (!witness) {
    std::cout << "no flow\n";
    return kExitNegative;
  }
  Claim claim = Claim::nzf;
  if (group.kind == GroupKind::integer) claim = Claim::knzf;
  if (group.kind == GroupKind::z2z3 && balanced) claim = Claim::balanced_nzf;
  Certificate cert = make_certificate(g, claim, *witness);
  std::string text = certificate_to_string(cert);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

int run_build11_one(const SignedGraph& g, long long max_nodes,
                    const std::string& prefix, bool quiet) {
  if (!is_connected(g) || !is_flow_admissible(g)) {
    if (!quiet) std::cout << "not flow-admissible\n";
    return kExitNegative;
  }
  PipelineTrace trace = build_11flow(g, max_nodes);
  if (!prefix.empty()) {
    write_file(prefix + ".z2z3.cert",
               certificate_to_string(
                   make_certificate(g, Claim::balanced_nzf, trace.g1g2)));
    write_file(prefix + ".f1.cert",
               certificate_to_string(make_certificate(g, Claim::kflow, trace.f1)));
    write_file(prefix + ".f2.cert",
               certificate_to_string(make_certificate(g, Claim::kflow, trace.f2)));
    write_file(prefix + ".f11.cert",
               certificate_to_string(make_certificate(g, Claim::knzf, trace.f)));
    std::string audit = "hash " + graph_hash(g) + "\n";
    for (const AuditItem& item : trace.audit)
      audit += "check " + item.name + " " + (item.pass ? "pass" : "FAIL") + "\n";
    audit += std::string("result ") + (trace.all_passed() ? "pass" : "FAIL") + "\n";
    write_file(prefix + ".audit.txt", audit);
  }
  if (!quiet) {
    for (const AuditItem& item : trace.audit)
      std::cout << item.name << ": " << (item.pass ? "pass" : "FAIL") << "\n";
  }
  return trace.all_passed() ? kExitOk : kExitInvariant;
}

int cmd_build11(const std::string& path, const std::string& out_prefix,
                const std::string& corpus, long long max_nodes) {
  if (!corpus.empty()) {
    auto comma = corpus.find(',');
    if (comma == std::string::npos) throw ParseError("--corpus wants N,M");
    int nmax = std::stoi(corpus.substr(0, comma));
    int mmax = std::stoi(corpus.substr(comma + 1));
    long long total = 0, admissible = 0, failed = 0;
    corpus_enumerate(nmax, mmax, [&](const SignedGraph& g) {
      ++total;
      if (!is_flow_admissible(g)) return true;
      ++admissible;
      if (run_build11_one(g, max_nodes, "", true) != kExitOk) ++failed;
      return true;
    });
    std::cout << "corpus " << nmax << "," << mmax << ": " << total << " graphs, "
              << admissible << " admissible, " << failed << " audit failures\n";
    return failed == 0 ? kExitOk : kExitInvariant;
  }
  SignedGraph g = parse_graph_file(path);
  std::string prefix = out_prefix.empty() ? path : out_prefix;
  return run_build11_one(g, max_nodes, prefix, false);
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  SignedGraph g = parse_graph_file(graph_path);
  Certificate cert = parse_certificate_file(cert_path);
  switch (verify_certificate(g, cert)) {
    case VerifyResult::ok:
      std::cout << "ok\n";
      return kExitOk;
    case VerifyResult::claim_failed:
      std::cout << "claim failed\n";
      return kExitNegative;
    case VerifyResult::hash_mismatch:
      std::cout << "hash mismatch\n";
      return kExitInput;
  }
  return kExitInput;
}

int cmd_flownum(const std::string& path, int max_k, long long max_nodes) {
  SignedGraph g = parse_graph_file(path);
  auto k = min_flow_number(g, max_k, max_nodes);
  if (!k) {
    std::cout << "none up to " << max_k << "\n";
    return kExitNegative;
  }
  std::cout << *k << "\n";
  return kExitOk;
}

int cmd_shrubbery(const std::string& path) {
  SignedGraph g = parse_graph_file(path);
  ShrubberyVerdict v = is_shrubbery(g);
  if (v.ok) {
    std::cout << "shrubbery: yes\n";
    return kExitOk;
  }
  std::cout << "shrubbery: no (" << v.violated << ")\n";
  if (!v.witness_vertices.empty()) {
    std::cout << "witness vertices:";
    for (Vertex x : v.witness_vertices) std::cout << " " << x;
    std::cout << "\n";
  }
  if (!v.witness_edges.empty()) std::cout << "witness edges: " << edge_set_str(v.witness_edges) << "\n";
  return kExitNegative;
}

int cmd_nzw(const std::string& path, const std::string& sign, long long max_nodes,
            const std::string& out_path) {
  SignedGraph g = parse_graph_file(path);
  NzwConstraints cons;
  if (sign == "+")
    cons.support_sign = 1;
  else if (sign == "-")
    cons.support_sign = -1;
  else if (!sign.empty())
    throw ParseError("--sign wants + or -");
  SearchOptions opts;
  opts.max_nodes = max_nodes;
  auto w = find_nzw(g, cons, opts);
  if (!w) {
    std::cout << "no watering\n";
    return kExitNegative;
  }
  Certificate cert = make_certificate(g, Claim::nzw, *w);
  std::string text = certificate_to_string(cert);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

int cmd_gen(const std::string& family, int internal, int n, int m, double pneg,
            std::optional<long long> seed, const std::string& out_path) {
  SignedGraph g;
  if (family == "fig1") {
    g = fig1_caterpillar(internal);
  } else if (family == "theta") {
    g = theta_unbalanced();
  } else if (family == "barbell") {
    g = barbell();
  } else if (family == "k4") {
    g = k4();
  } else if (family == "k33") {
    g = k33();
  } else if (family == "prism") {
    g = prism();
  } else if (family == "petersen") {
    g = petersen();
  } else if (family == "mobius-kantor") {
    g = moebius_kantor();
  } else if (family == "random") {
    if (!seed) throw ParseError("gen random requires an explicit --seed");
    g = random_signed(n, m, pneg, static_cast<std::uint64_t>(*seed));
  } else {
    throw ParseError("unknown family: " + family);
  }
  std::string text = graph_to_string(g);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nowhere-zero flows on signed graphs"};
  app.require_subcommand(1);
  long long budget = env_budget();

  std::string path, cert_path, out_path, group_str = "int:6", corpus, sign;
  std::vector<std::string> prescriptions;
  std::vector<long long> forbidden;
  bool balanced = false;
  int max_k = 11, internal = 1, rn = 4, rm = 6;
  double pneg = 0.5;
  std::optional<long long> seed;
  std::string family;

  auto* check = app.add_subcommand("check", "structure and flow-admissibility report");
  check->add_option("graph", path)->required();

  auto* solve = app.add_subcommand("solve", "exhaustive flow search, certificate out");
  solve->add_option("graph", path)->required();
  solve->add_option("--group", group_str, "int:K, mod:K or z2z3");
  solve->add_flag("--balanced", balanced, "even negative f1-support (z2z3)");
  solve->add_option("--prescribe", prescriptions, "EDGE=VALUE, repeatable");
  solve->add_option("--forbid-abs", forbidden, "forbid |f(e)|=T on every edge");
  solve->add_option("--max-nodes", budget);
  solve->add_option("-o,--out", out_path);

  auto* build11 = app.add_subcommand("build11", "run the 11-flow pipeline");
  build11->add_option("graph", path);
  build11->add_option("-o,--out", out_path, "certificate bundle prefix");
  build11->add_option("--corpus", corpus, "N,M: batch over the enumerated corpus");
  build11->add_option("--max-nodes", budget);

  auto* verify = app.add_subcommand("verify", "re-verify a certificate bit-exactly");
  verify->add_option("graph", path)->required();
  verify->add_option("certificate", cert_path)->required();

  auto* flownum = app.add_subcommand("flownum", "least k admitting a k-NZF");
  flownum->add_option("graph", path)->required();
  flownum->add_option("--max-k", max_k);
  flownum->add_option("--max-nodes", budget);

  auto* shrub = app.add_subcommand("shrubbery", "shrubbery verdict with witness");
  shrub->add_option("graph", path)->required();

  auto* nzw = app.add_subcommand("nzw", "search for a nowhere-zero watering");
  nzw->add_option("graph", path)->required();
  nzw->add_option("--sign", sign, "require sigma(supp(f1)): + or -");
  nzw->add_option("--max-nodes", budget);
  nzw->add_option("-o,--out", out_path);

  auto* gen = app.add_subcommand("gen", "emit a named family graph");
  gen->add_option("family", family,
                  "fig1|theta|barbell|k4|k33|prism|petersen|mobius-kantor|random")
      ->required();
  gen->add_option("--internal", internal, "fig1: internal 3-vertices");
  gen->add_option("--n", rn);
  gen->add_option("--m", rm);
  gen->add_option("--pneg", pneg);
  gen->add_option("--seed", seed, "required for random");
  gen->add_option("-o,--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path);
    if (solve->parsed())
      return cmd_solve(path, group_str, balanced, prescriptions, forbidden, budget,
                       out_path);
    if (build11->parsed()) {
      if (corpus.empty() && path.empty()) throw ParseError("build11 needs a graph or --corpus");
      return cmd_build11(path, out_path, corpus, budget);
    }
    if (verify->parsed()) return cmd_verify(path, cert_path);
    if (flownum->parsed()) return cmd_flownum(path, max_k, budget);
    if (shrub->parsed()) return cmd_shrubbery(path);
    if (nzw->parsed()) return cmd_nzw(path, sign, budget, out_path);
    if (gen->parsed()) return cmd_gen(family, internal, rn, rm, pneg, seed, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
