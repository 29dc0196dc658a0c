#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "signedflow/flows.hpp"
#include "signedflow/graph.hpp"

namespace signedflow {

// Claims a certificate can make about its flow. `kflow`/`knzf` read k from
// the integer group; `balanced_nzf` is the Z2xZ3 notion; `nzw` the
// watering rule.
enum class Claim { flow, kflow, nzf, knzf, balanced_nzf, nzw };

std::string claim_str(Claim c);
Claim claim_from_str(const std::string& s);

// (graph-hash, orientation, flow, claimed property) bundle; the verifier
// re-checks the claim bit-exactly against a graph.
struct Certificate {
  std::string hash;
  Claim claim = Claim::flow;
  GroupSpec group;
  bool explicit_orientation = false;
  std::optional<Orientation> tau;  // present iff explicit
  FlowAssignment flow;
};

Certificate make_certificate(const SignedGraph& g, Claim claim,
                             const FlowAssignment& flow);

void write_certificate(const Certificate& c, std::ostream& out);
std::string certificate_to_string(const Certificate& c);
Certificate parse_certificate_text(std::istream& in);
Certificate parse_certificate_file(const std::string& path);

enum class VerifyResult { ok, claim_failed, hash_mismatch };

/// Bit-exact re-verification of the certificate against the graph: hash
/// match first, then the claimed property under the stated orientation.
VerifyResult verify_certificate(const SignedGraph& g, const Certificate& c);

}  // namespace signedflow
