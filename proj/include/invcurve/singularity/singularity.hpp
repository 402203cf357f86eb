#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/groups/groups.hpp"

namespace invcurve::singularity {

using groups::GroupId;

struct IndexSet {
  unsigned degree;
  // (i, j) with (d - a*i - b*j) / c a nonnegative integer; i ascending.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  bool contains(unsigned i, unsigned j) const;
};

IndexSet index_set(GroupId g, unsigned d);

enum class SingularityType { A1Node, A2Cusp, A3Tacnode, A5, D5Family, Nonsingular, Undefined };
const char* type_name(SingularityType t);
// Local intersection multiplicity of two branches: 1, 2, 2, 3 for A1, A3, D5, A5.
std::optional<unsigned> intersection_multiplicity(SingularityType t);

// Singularity type of a general member of degree d. Only degrees where every
// member is singular exactly on V(F) n V(Phi) (d >= c with conditions other than
// the congruence modulo c holding, or the Klein degree 12) are classified; others
// give Undefined.
SingularityType classify(GroupId g, unsigned d);

struct Refutation {
  unsigned d1;
  // Each line names one violated inequality or divisibility constraint.
  std::vector<std::string> log;
  bool refuted = false;
};

struct IrreducibilityCertificate {
  GroupId group;
  unsigned degree;
  SingularityType type;
  unsigned m = 0;
  // m * deg F * deg Phi: the weighted number of points of V(F) n V(Phi).
  unsigned bound = 0;
  std::vector<Refutation> candidates;
  // True when every split was refuted, or trivially for cusps.
  bool irreducible = false;
  std::string summary;

  // All log lines, candidate by candidate.
  std::vector<std::string> lines() const;
};

// Bezout argument against a splitting H = H1 * ... * Hn of a general member.
// For types other than A1, A2, A3, A5, D5 the certificate is returned with
// irreducible = false and an explanatory summary.
IrreducibilityCertificate certify_irreducible(GroupId g, unsigned d);

bool decide_integral(GroupId g, unsigned d);

}  // namespace invcurve::singularity
