#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invcurve/mpoly/mpoly.hpp"

namespace invcurve::ideals {

using poly::MPoly;
using poly::Monomial;

inline constexpr std::uint64_t kDefaultBudget = 1000000;

struct GroebnerBasis {
  // False when the budget ran out; basis is then only a partial result.
  bool complete = false;
  // Reduced, monic, sorted by descending leading monomial (grevlex).
  std::vector<MPoly> basis;
  std::uint64_t reductions = 0;
};

// Buchberger's algorithm in grevlex with the normal selection strategy and the
// product and Gebauer-Moeller chain criteria. The budget bounds the number of
// S-polynomial reductions.
GroebnerBasis buchberger(std::vector<MPoly> generators, std::uint64_t budget = kDefaultBudget);

// Full reduction of f modulo the given polynomials.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& divisors);

enum class Verdict { True, False, Inconclusive };
const char* verdict_name(Verdict v);

struct Options {
  std::uint64_t budget = kDefaultBudget;
  // Try the modular Macaulay-matrix certificate before Groebner bases.
  bool modular = true;
  // Allow the exact Groebner computation; when false, anything the modular
  // certificate cannot settle is reported inconclusive.
  bool exact = true;
};

struct CheckResult {
  Verdict verdict = Verdict::Inconclusive;
  // How the verdict was reached, e.g. "groebner" or "macaulay mod p".
  std::string method;
  std::string detail;
  std::uint64_t reductions = 0;
};

// Whether homogeneous polynomials in x, y, z have no common zero in P^2.
//
// A True verdict comes either from a Groebner basis whose leading monomials
// contain a pure power of each variable, or from a Macaulay matrix of full
// column rank modulo a prime (full rank mod p implies full rank over the field,
// so every monomial of that degree lies in the ideal). False verdicts always come
// from a complete Groebner basis.
CheckResult only_trivial_zero(const std::vector<MPoly>& generators, const Options& options = {});
// No singular points: only_trivial_zero of the three partial derivatives.
CheckResult nonsingular_check(const MPoly& f, const Options& options = {});
// f and g share no point where their gradients are dependent: only_trivial_zero
// of f, g and the 2x2 minors of their Jacobian.
CheckResult transversal_check(const MPoly& f, const MPoly& g, const Options& options = {});

// Generators used by the two checks above.
std::vector<MPoly> gradient_ideal(const MPoly& f);
std::vector<MPoly> transversality_ideal(const MPoly& f, const MPoly& g);

}  // namespace invcurve::ideals
