#include "invcurve/ideals/ideals.hpp"

#include <algorithm>

#include "invcurve/error.hpp"
#include "invcurve/ideals/modular.hpp"

namespace invcurve::ideals {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Full rank of the Macaulay matrix at the regularity bound, tried modulo a couple
// of primes. Only ever proves the empty locus.
bool modular_certificate(const std::vector<MPoly>& gens, const std::vector<unsigned>& degrees,
                         CheckResult& out) {
  if (gens.size() < 3) return false;
  std::vector<unsigned> sorted = degrees;
  std::sort(sorted.rbegin(), sorted.rend());
  const unsigned degree =
      gens.size() == 3 ? sorted[0] + sorted[1] + sorted[2] - 2 : 3 * (sorted[0] - 1) + 1;
  const auto& field = gens.front().field();
  for (unsigned attempt = 0; attempt < 2; ++attempt) {
    const Reduction red = Reduction::for_field(field, attempt);
    std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> images;
    bool ok = true;
    for (const auto& g : gens) {
      auto img = red.map(g);
      if (!img) {
        ok = false;
        break;
      }
      images.push_back(std::move(*img));
    }
    if (!ok) continue;
    const MacaulayRank r = macaulay_rank(images, degrees, degree, red.prime());
    if (r.rank == r.cols) {
      out.verdict = Verdict::True;
      out.method = "macaulay";
      out.detail = "full rank " + std::to_string(r.cols) + " at degree " + std::to_string(degree) + " mod " +
                   std::to_string(red.prime()) + " (" + std::to_string(r.rows) + " rows)";
      return true;
    }
  }
  return false;
}

}  // namespace

CheckResult only_trivial_zero(const std::vector<MPoly>& generators, const Options& options) {
  CheckResult out;
  std::vector<MPoly> gens;
  std::vector<unsigned> degrees;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!gens.empty() && &g.field() != &gens.front().field()) throw FieldMismatch("ideal generators");
    const auto d = g.homogeneous_degree();
    if (!d) throw Error("only_trivial_zero: generator is not homogeneous");
    if (*d == 0) {
      out.verdict = Verdict::True;
      out.method = "unit";
      out.detail = "nonzero constant generator";
      return out;
    }
    gens.push_back(g);
    degrees.push_back(*d);
  }
  if (gens.empty()) {
    out.verdict = Verdict::False;
    out.method = "zero ideal";
    return out;
  }
  if (options.modular && modular_certificate(gens, degrees, out)) return out;
  if (!options.exact) {
    out.method = "macaulay";
    out.detail = "no modular certificate; exact computation disabled";
    return out;
  }
  const GroebnerBasis gb = buchberger(gens, options.budget);
  out.method = "groebner";
  out.reductions = gb.reductions;
  if (!gb.complete) {
    out.detail = "budget of " + std::to_string(options.budget) + " reductions exhausted";
    return out;
  }
  std::array<bool, 3> pure{};
  for (const auto& g : gb.basis) {
    const Monomial& lm = g.leading_monomial();
    if (lm.degree() == 0) pure = {true, true, true};
    for (int v = 0; v < 3; ++v)
      if (lm.e[v] == lm.degree()) pure[v] = true;
  }
  const bool empty = pure[0] && pure[1] && pure[2];
  out.verdict = empty ? Verdict::True : Verdict::False;
  out.detail = "basis of " + std::to_string(gb.basis.size()) + " elements";
  return out;
}

std::vector<MPoly> gradient_ideal(const MPoly& f) { return {f.partial(0), f.partial(1), f.partial(2)}; }

std::vector<MPoly> transversality_ideal(const MPoly& f, const MPoly& g) {
  if (&f.field() != &g.field()) throw FieldMismatch("transversality_ideal");
  const auto df = gradient_ideal(f);
  const auto dg = gradient_ideal(g);
  std::vector<MPoly> out{f, g};
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) out.push_back(df[i] * dg[j] - df[j] * dg[i]);
  return out;
}

CheckResult nonsingular_check(const MPoly& f, const Options& options) {
  return only_trivial_zero(gradient_ideal(f), options);
}

CheckResult transversal_check(const MPoly& f, const MPoly& g, const Options& options) {
  return only_trivial_zero(transversality_ideal(f, g), options);
}

}  // namespace invcurve::ideals
