#pragma once

#include <array>
#include <optional>
#include <vector>

#include "invcurve/groups/groups.hpp"

namespace invcurve::decisions {

using groups::GroupId;

// Exponents (i, j, k) of F^i Phi^j Psi^k.
using Exponents = std::array<unsigned, 3>;

struct LinearSystemBasis {
  GroupId group;
  unsigned degree;
  // All solutions of a*i + b*j + c*k = degree, i descending then j descending.
  std::vector<Exponents> solutions;
};

LinearSystemBasis basis(GroupId g, unsigned d);

// d = p*s + q*t for some s, t >= 0.
bool representable(unsigned d, unsigned p, unsigned q);

// Arithmetic conditions (1)-(6) for the existence of a nonsingular member:
//   (1)-(3): d is a nonnegative combination of two of a, b, c;
//   (4)-(6): d is congruent to 0 or one of the other two degrees modulo the third.
// Returns the numbers of the conditions that fail, ascending.
std::vector<int> failed_conditions(GroupId g, unsigned d);

// How a degree below c is settled by inspecting the basis.
enum class LowDegreeCase {
  Empty,                // no invariant of degree d
  FundamentalInvariant, // F or Phi itself is a member, and it is nonsingular
  Nonreduced,           // the only member is a perfect power
  DivisibleByF,         // every member has F as a factor
  DivisibleByPhi,
  Reducible,            // members are binary forms in F, Phi of degree > lcm(a, b): they factor
  SingularAtBaseLocus,  // members are binary forms of degree lcm(a, b), singular on V(F) n V(Phi)
};
const char* low_degree_case_name(LowDegreeCase c);

struct NonsingularDecision {
  bool exists = false;
  // Conditions (1)-(6) that fail; for d >= c, exists iff this is empty.
  std::vector<int> failed_conditions;
  // Set for d < c.
  std::optional<LowDegreeCase> low_degree_case;
};

NonsingularDecision decide_nonsingular(GroupId g, unsigned d);

// d = 0, 6, 12 mod 30 (V); 0, 2, 6 mod 10 (I); 0, 4, 6 mod 14 (K).
bool closed_form_nonsingular(GroupId g, unsigned d);

}  // namespace invcurve::decisions
