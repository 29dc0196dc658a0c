#include "signedflow/certificate.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "signedflow/shrubbery.hpp"

namespace signedflow {

std::string claim_str(Claim c) {
  switch (c) {
    case Claim::flow:
      return "flow";
    case Claim::kflow:
      return "kflow";
    case Claim::nzf:
      return "nzf";
    case Claim::knzf:
      return "knzf";
    case Claim::balanced_nzf:
      return "balanced-nzf";
    case Claim::nzw:
      return "nzw";
  }
  return "?";
}

Claim claim_from_str(const std::string& s) {
  if (s == "flow") return Claim::flow;
  if (s == "kflow") return Claim::kflow;
  if (s == "nzf") return Claim::nzf;
  if (s == "knzf") return Claim::knzf;
  if (s == "balanced-nzf") return Claim::balanced_nzf;
  if (s == "nzw") return Claim::nzw;
  throw ParseError("unknown claim: " + s);
}

Certificate make_certificate(const SignedGraph& g, Claim claim,
                             const FlowAssignment& flow) {
  Certificate c;
  c.hash = graph_hash(g);
  c.claim = claim;
  c.group = flow.group;
  c.flow = flow;
  return c;
}

void write_certificate(const Certificate& c, std::ostream& out) {
  out << "hash " << c.hash << "\n";
  out << "claim " << claim_str(c.claim) << "\n";
  out << "group " << c.group.str() << "\n";
  out << "orientation " << (c.explicit_orientation ? "explicit" : "default") << "\n";
  if (c.explicit_orientation) {
    const Orientation& t = *c.tau;
    for (int e = 0; e < static_cast<int>(c.flow.values.size()); ++e)
      out << "t " << e << " " << (t.at(2 * e) > 0 ? '+' : '-') << " "
          << (t.at(2 * e + 1) > 0 ? '+' : '-') << "\n";
  }
  for (int e = 0; e < static_cast<int>(c.flow.values.size()); ++e)
    out << "f " << e << " " << gv_str(c.group, c.flow.value(e)) << "\n";
}

std::string certificate_to_string(const Certificate& c) {
  std::ostringstream os;
  write_certificate(c, os);
  return os.str();
}

namespace {

GroupValue parse_value(const GroupSpec& group, const std::string& text) {
  if (group.kind == GroupKind::z2z3) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("z2z3 value needs 'a,b'");
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  }
  return {std::stoll(text), 0};
}

}  // namespace

Certificate parse_certificate_text(std::istream& in) {
  Certificate c;
  bool have_hash = false, have_claim = false, have_group = false, have_orient = false;
  std::map<int, std::pair<int, int>> taus;
  std::map<int, GroupValue> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hashpos = line.find('#');
    if (hashpos != std::string::npos) line = line.substr(0, hashpos);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "hash") {
      if (!(ls >> c.hash)) fail("bad hash line");
      have_hash = true;
    } else if (tag == "claim") {
      std::string s;
      if (!(ls >> s)) fail("bad claim line");
      c.claim = claim_from_str(s);
      have_claim = true;
    } else if (tag == "group") {
      std::string kind;
      if (!(ls >> kind)) fail("bad group line");
      if (kind == "int") {
        int k;
        if (!(ls >> k)) fail("bad group line");
        c.group = GroupSpec::integer(k);
      } else if (kind == "mod") {
        int k;
        if (!(ls >> k)) fail("bad group line");
        c.group = GroupSpec::modulo(k);
      } else if (kind == "z2z3") {
        c.group = GroupSpec::z2z3();
      } else {
        fail("unknown group kind");
      }
      have_group = true;
    } else if (tag == "orientation") {
      std::string s;
      if (!(ls >> s)) fail("bad orientation line");
      if (s == "default")
        c.explicit_orientation = false;
      else if (s == "explicit")
        c.explicit_orientation = true;
      else
        fail("unknown orientation kind");
      have_orient = true;
    } else if (tag == "t") {
      int e;
      std::string a, b;
      if (!(ls >> e >> a >> b) || (a != "+" && a != "-") || (b != "+" && b != "-"))
        fail("bad tau line");
      taus[e] = {a == "+" ? 1 : -1, b == "+" ? 1 : -1};
    } else if (tag == "f") {
      int e;
      std::string val;
      if (!(ls >> e >> val)) fail("bad flow line");
      if (!have_group) fail("flow line before group");
      values[e] = parse_value(c.group, val);
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (!have_hash || !have_claim || !have_group || !have_orient)
    throw ParseError("certificate missing a header line");
  int m = values.empty() ? 0 : values.rbegin()->first + 1;
  if (static_cast<int>(values.size()) != m)
    throw ParseError("certificate must assign every edge id 0..m-1");
  c.flow = FlowAssignment(c.group, m);
  for (auto& [e, v] : values) c.flow.set(e, v);
  if (c.explicit_orientation) {
    if (static_cast<int>(taus.size()) != m)
      throw ParseError("explicit orientation must cover every edge");
    Orientation t;
    t.tau.resize(2 * m);
    for (auto& [e, ab] : taus) {
      t.tau[2 * e] = static_cast<std::int8_t>(ab.first);
      t.tau[2 * e + 1] = static_cast<std::int8_t>(ab.second);
    }
    c.tau = std::move(t);
  } else if (!taus.empty()) {
    throw ParseError("tau lines need an explicit orientation header");
  }
  return c;
}

Certificate parse_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate file: " + path);
  return parse_certificate_text(in);
}

VerifyResult verify_certificate(const SignedGraph& g, const Certificate& c) {
  if (graph_hash(g) != c.hash) return VerifyResult::hash_mismatch;
  if (static_cast<int>(c.flow.values.size()) != g.edge_count())
    return VerifyResult::claim_failed;
  Orientation tau = c.explicit_orientation ? *c.tau : default_orientation(g);
  if (!orientation_valid(g, tau)) return VerifyResult::claim_failed;

  bool ok = false;
  switch (c.claim) {
    case Claim::flow:
      ok = is_flow(g, tau, c.flow);
      break;
    case Claim::kflow: {
      if (c.group.kind != GroupKind::integer) return VerifyResult::claim_failed;
      ok = is_flow(g, tau, c.flow);
      for (const GroupValue& v : c.flow.values)
        if (std::abs(v.a) > c.group.k - 1) ok = false;
      break;
    }
    case Claim::nzf:
      ok = is_nzf(g, tau, c.flow);
      break;
    case Claim::knzf:
      ok = c.group.kind == GroupKind::integer && is_k_nzf(g, tau, c.flow, c.group.k);
      break;
    case Claim::balanced_nzf:
      ok = c.group.kind == GroupKind::z2z3 && is_nzf(g, tau, c.flow) &&
           is_balanced_z2z3(g, c.flow);
      break;
    case Claim::nzw: {
      if (c.group.kind != GroupKind::z2z3) return VerifyResult::claim_failed;
      try {
        ok = verify_nzw(g, tau, c.flow);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      break;
    }
  }
  return ok ? VerifyResult::ok : VerifyResult::claim_failed;
}

}  // namespace signedflow
