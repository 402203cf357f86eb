#include "invcurve/singularity/singularity.hpp"

#include <algorithm>
#include <functional>

#include "invcurve/decisions/decisions.hpp"
#include "invcurve/error.hpp"

namespace invcurve::singularity {

namespace {

std::string s(unsigned long v) { return std::to_string(v); }

bool all_pairs(const IndexSet& idx, const std::function<bool(unsigned, unsigned)>& pred) {
  return std::all_of(idx.pairs.begin(), idx.pairs.end(), [&](const auto& p) { return pred(p.first, p.second); });
}

}  // namespace

bool IndexSet::contains(unsigned i, unsigned j) const {
  return std::find(pairs.begin(), pairs.end(), std::pair{i, j}) != pairs.end();
}

IndexSet index_set(GroupId g, unsigned d) {
  const auto& p = groups::degree_profile(g);
  IndexSet out{d, {}};
  for (unsigned i = 0; i * p.a <= d; ++i)
    for (unsigned j = 0; i * p.a + j * p.b <= d; ++j)
      if ((d - i * p.a - j * p.b) % p.c == 0) out.pairs.emplace_back(i, j);
  return out;
}

const char* type_name(SingularityType t) {
  switch (t) {
    case SingularityType::A1Node: return "A1";
    case SingularityType::A2Cusp: return "A2";
    case SingularityType::A3Tacnode: return "A3";
    case SingularityType::A5: return "A5";
    case SingularityType::D5Family: return "D5";
    case SingularityType::Nonsingular: return "nonsingular";
    case SingularityType::Undefined: return "undefined";
  }
  return "?";
}

std::optional<unsigned> intersection_multiplicity(SingularityType t) {
  switch (t) {
    case SingularityType::A1Node: return 1;
    case SingularityType::A3Tacnode:
    case SingularityType::D5Family: return 2;
    case SingularityType::A5: return 3;
    default: return std::nullopt;
  }
}

SingularityType classify(GroupId g, unsigned d) {
  using decisions::LowDegreeCase;
  if (d == 0) throw Error("classify: degree must be positive");
  if (decisions::closed_form_nonsingular(g, d)) return SingularityType::Nonsingular;
  if (d % 2 != 0) return SingularityType::Undefined;
  const auto& p = groups::degree_profile(g);
  const auto dec = decisions::decide_nonsingular(g, d);
  if (d < p.c) {
    if (dec.low_degree_case != LowDegreeCase::SingularAtBaseLocus) return SingularityType::Undefined;
  } else if (dec.failed_conditions != std::vector<int>{4}) {
    return SingularityType::Undefined;
  }
  const IndexSet idx = index_set(g, d);
  // h(s, t) = sum over I_d of general c_ij s^i t^j, up to units. The normal form is
  // fixed by two extremal members and a weighted lower bound on every exponent.
  auto pattern = [&](std::pair<unsigned, unsigned> u, std::pair<unsigned, unsigned> v, unsigned wi, unsigned wj,
                     unsigned bound) {
    return idx.contains(u.first, u.second) && idx.contains(v.first, v.second) &&
           all_pairs(idx, [&](unsigned i, unsigned j) { return wi * i + wj * j >= bound; });
  };
  if (idx.contains(1, 1)) return SingularityType::A1Node;
  if (pattern({3, 0}, {0, 2}, 2, 3, 6) || pattern({0, 3}, {2, 0}, 3, 2, 6)) return SingularityType::A2Cusp;
  if (pattern({4, 0}, {0, 2}, 1, 2, 4) || pattern({0, 4}, {2, 0}, 2, 1, 4)) return SingularityType::A3Tacnode;
  if (pattern({2, 0}, {0, 6}, 3, 1, 6) || pattern({0, 2}, {6, 0}, 1, 3, 6)) return SingularityType::A5;
  if (pattern({4, 0}, {1, 2}, 2, 3, 8) || pattern({0, 4}, {2, 1}, 3, 2, 8)) return SingularityType::D5Family;
  return SingularityType::Undefined;
}

std::vector<std::string> IrreducibilityCertificate::lines() const {
  std::vector<std::string> out;
  for (const auto& c : candidates) out.insert(out.end(), c.log.begin(), c.log.end());
  return out;
}

IrreducibilityCertificate certify_irreducible(GroupId g, unsigned d) {
  const auto& p = groups::degree_profile(g);
  IrreducibilityCertificate cert;
  cert.group = g;
  cert.degree = d;
  cert.type = classify(g, d);
  if (cert.type == SingularityType::A2Cusp) {
    cert.irreducible = true;
    cert.summary = "cusps have one branch, curve irreducible";
    return cert;
  }
  const auto m = intersection_multiplicity(cert.type);
  if (!m) {
    cert.summary = std::string("no certificate for type ") + type_name(cert.type);
    return cert;
  }
  cert.m = *m;
  const unsigned n = cert.m * p.a * p.b;
  cert.bound = n;
  const std::string ns = "(" + s(cert.m) + "·" + s(p.a * p.b) + ")";

  // d1 is the smallest component degree, so 1 <= d1 <= d/2. Each pair of
  // components meets only in points of V(F) n V(Phi), with multiplicity m.
  bool all_refuted = true;
  for (unsigned d1 = 1; d1 <= d / 2; ++d1) {
    Refutation r{d1, {}};
    const unsigned rest = d - d1;
    const unsigned long lhs = static_cast<unsigned long>(d1) * rest;
    const std::string head = "d1 = " + s(d1) + ": ";
    if (lhs > n) {
      r.log.push_back(head + "(*) fails: " + s(d1) + "·" + s(rest) + " = " + s(lhs) + " > " + s(n));
      r.refuted = true;
      cert.candidates.push_back(std::move(r));
      continue;
    }
    // n = 2 forces equality in (*).
    bool two_refuted = lhs != n;
    r.log.push_back(head + "n = 2: " + (two_refuted ? s(d1) + "·" + s(rest) + " ≠ " + s(n)
                                                    : s(d1) + "·" + s(rest) + " = " + s(n) + ", not refuted"));
    // n > 2: (**) with d_l >= 1, whose left side is at least rest - 1.
    const unsigned long room = n - lhs;
    const unsigned long low = rest - 1;
    bool many_refuted = low > room;
    if (many_refuted) {
      r.log.push_back(head + "n > 2: " + s(low) + " ≤ d2(" + s(rest) + " - d2) ≤ " + ns + " - (" + s(d1) + "·" +
                      s(rest) + ") = " + s(room) + ", contradiction " + s(low) + " ≤ " + s(room));
    } else {
      // Second component: d1 <= d2 <= rest/2 and d2(rest - d2) <= room; the two
      // meet with multiplicity m everywhere, so m | d1*d2.
      bool all_d2 = true;
      std::string refuted_range;
      for (unsigned d2 = d1; d2 <= rest / 2; ++d2) {
        const unsigned long v = static_cast<unsigned long>(d2) * (rest - d2);
        if (v > room) {
          r.log.push_back(head + "n > 2: d2(" + s(rest) + " - d2) ≤ " + s(room) + " fails for " + s(d2) +
                          " ≤ d2 ≤ " + s(rest / 2));
          break;
        }
        if ((static_cast<unsigned long>(d1) * d2) % cert.m != 0) {
          r.log.push_back(head + "n > 2, d2 = " + s(d2) + ": d1·d2 = " + s(d1 * d2) +
                          " is not a multiple of m = " + s(cert.m));
        } else {
          r.log.push_back(head + "n > 2, d2 = " + s(d2) + ": not refuted");
          all_d2 = false;
        }
      }
      many_refuted = all_d2;
    }
    // H1 meets the rest in d1*(d - d1) = m * #points.
    bool parity = false;
    if (lhs % cert.m != 0) {
      parity = true;
      r.log.push_back(head + "d1·(d - d1) = " + s(lhs) + " is not a multiple of m = " + s(cert.m));
    }
    r.refuted = parity || (two_refuted && many_refuted);
    all_refuted = all_refuted && r.refuted;
    cert.candidates.push_back(std::move(r));
  }
  cert.irreducible = all_refuted;
  cert.summary = all_refuted ? "every splitting refuted" : "reducible-possible";
  return cert;
}

bool decide_integral(GroupId g, unsigned d) {
  if (d == 0) throw Error("decide_integral: degree must be positive");
  if (d % 2 != 0) return false;
  if (decisions::decide_nonsingular(g, d).exists) return true;
  const SingularityType t = classify(g, d);
  if (t == SingularityType::Undefined) return false;
  return certify_irreducible(g, d).irreducible;
}

}  // namespace invcurve::singularity
