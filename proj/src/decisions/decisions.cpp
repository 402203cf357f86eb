#include "invcurve/decisions/decisions.hpp"

#include <algorithm>
#include <numeric>

#include "invcurve/error.hpp"

namespace invcurve::decisions {

LinearSystemBasis basis(GroupId g, unsigned d) {
  const auto& p = groups::degree_profile(g);
  LinearSystemBasis out{g, d, {}};
  for (unsigned i = d / p.a + 1; i-- > 0;) {
    const unsigned r = d - i * p.a;
    for (unsigned j = r / p.b + 1; j-- > 0;) {
      const unsigned s = r - j * p.b;
      if (s % p.c == 0) out.solutions.push_back({i, j, s / p.c});
    }
  }
  return out;
}

bool representable(unsigned d, unsigned p, unsigned q) {
  if (p == 0 || q == 0) throw Error("representable: generators must be positive");
  for (unsigned s = 0; s * p <= d; ++s)
    if ((d - s * p) % q == 0) return true;
  return false;
}

std::vector<int> failed_conditions(GroupId g, unsigned d) {
  const auto& p = groups::degree_profile(g);
  const std::array<unsigned, 3> deg{p.a, p.b, p.c};
  std::vector<int> failed;
  // Condition l+1 for (1)-(3) omits degree l; condition 4+n for (4)-(6) works modulo deg[2-n].
  for (int l = 0; l < 3; ++l)
    if (!representable(d, deg[(l + 1) % 3], deg[(l + 2) % 3])) failed.push_back(l + 1);
  for (int n = 0; n < 3; ++n) {
    const unsigned mod = deg[2 - n];
    const unsigned r = d % mod;
    bool ok = r == 0;
    for (int o = 0; o < 3; ++o)
      if (o != 2 - n && r == deg[o] % mod) ok = true;
    if (!ok) failed.push_back(4 + n);
  }
  return failed;
}

const char* low_degree_case_name(LowDegreeCase c) {
  switch (c) {
    case LowDegreeCase::Empty: return "empty";
    case LowDegreeCase::FundamentalInvariant: return "fundamental invariant";
    case LowDegreeCase::Nonreduced: return "nonreduced";
    case LowDegreeCase::DivisibleByF: return "divisible by F";
    case LowDegreeCase::DivisibleByPhi: return "divisible by Phi";
    case LowDegreeCase::Reducible: return "reducible";
    case LowDegreeCase::SingularAtBaseLocus: return "singular at base locus";
  }
  return "?";
}

namespace {

LowDegreeCase inspect_low_degree(GroupId g, const LinearSystemBasis& b) {
  const auto& p = groups::degree_profile(g);
  const auto& sol = b.solutions;
  if (sol.empty()) return LowDegreeCase::Empty;
  for (const auto& e : sol)
    if (e[0] + e[1] + e[2] == 1) return LowDegreeCase::FundamentalInvariant;
  if (sol.size() == 1 && std::gcd(std::gcd(sol[0][0], sol[0][1]), sol[0][2]) >= 2) return LowDegreeCase::Nonreduced;
  if (std::all_of(sol.begin(), sol.end(), [](const Exponents& e) { return e[0] >= 1; }))
    return LowDegreeCase::DivisibleByF;
  if (std::all_of(sol.begin(), sol.end(), [](const Exponents& e) { return e[1] >= 1; }))
    return LowDegreeCase::DivisibleByPhi;
  if (std::all_of(sol.begin(), sol.end(), [](const Exponents& e) { return e[2] == 0; }))
    return b.degree > std::lcm(p.a, p.b) ? LowDegreeCase::Reducible : LowDegreeCase::SingularAtBaseLocus;
  throw Error("no low-degree rule applies to degree " + std::to_string(b.degree));
}

}  // namespace

NonsingularDecision decide_nonsingular(GroupId g, unsigned d) {
  if (d == 0) throw Error("decide_nonsingular: degree must be positive");
  const auto& p = groups::degree_profile(g);
  NonsingularDecision out;
  out.failed_conditions = failed_conditions(g, d);
  if (d >= p.c) {
    out.exists = out.failed_conditions.empty();
    return out;
  }
  out.low_degree_case = inspect_low_degree(g, basis(g, d));
  out.exists = *out.low_degree_case == LowDegreeCase::FundamentalInvariant;
  return out;
}

bool closed_form_nonsingular(GroupId g, unsigned d) {
  switch (g) {
    case GroupId::V: return d % 30 == 0 || d % 30 == 6 || d % 30 == 12;
    case GroupId::I: return d % 10 == 0 || d % 10 == 2 || d % 10 == 6;
    case GroupId::K: return d % 14 == 0 || d % 14 == 4 || d % 14 == 6;
  }
  return false;
}

}  // namespace invcurve::decisions
