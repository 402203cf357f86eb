#include "invcurve/ideals/modular.hpp"

#include <gmp.h>

#include "invcurve/error.hpp"
#include "invcurve/kernels/modular.hpp"

namespace invcurve::ideals {

using arith::NumberField;
using kernels::add_mod;
using kernels::mul_mod;
using kernels::sub_mod;

namespace {

std::uint32_t residue(const arith::Integer& n, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p));
}

// Root of the integer minimal polynomial mod p, or nullopt if p is unsuitable.
std::optional<std::uint32_t> field_root(const NumberField& field, std::uint32_t p) {
  const auto& m = field.integer_minimal_polynomial();
  if (residue(field.leading_coefficient(), p) == 0) return std::nullopt;
  switch (field.kind()) {
    case NumberField::Kind::Rationals:
      return 0u;
    case NumberField::Kind::Cyclotomic: {
      const unsigned n = field.cyclotomic_order();
      if ((p - 1) % n != 0) return std::nullopt;
      return kernels::root_of_unity(n, p);
    }
    case NumberField::Kind::Quadratic: {
      if (m.size() != 3) return std::nullopt;
      const std::uint32_t a = residue(m[2], p), b = residue(m[1], p), c = residue(m[0], p);
      const std::uint32_t disc = sub_mod(mul_mod(b, b, p), mul_mod(4, mul_mod(a, c, p), p), p);
      std::uint32_t s = 0;
      if (disc == 0 || !kernels::sqrt_mod(disc, p, s)) return std::nullopt;
      return mul_mod(sub_mod(s, b, p), kernels::inv_mod(mul_mod(2, a, p), p), p);
    }
  }
  return std::nullopt;
}

}  // namespace

Reduction Reduction::for_field(const NumberField& field, unsigned n) {
  for (std::uint32_t p = kernels::kMaxModulus - 1; p > 1000; p -= 2) {
    if (!kernels::is_prime(p)) continue;
    auto r = field_root(field, p);
    if (!r) continue;
    if (n-- == 0) return Reduction(field, p, *r);
  }
  throw Error("no admissible prime for " + field.id());
}

Reduction::Reduction(const NumberField& field, std::uint32_t p, std::uint32_t root)
    : field_(&field), p_(p), root_(root) {
  root_powers_.resize(field.degree());
  std::uint32_t w = 1;
  for (auto& rp : root_powers_) {
    rp = w;
    w = mul_mod(w, root, p);
  }
  // Sanity: the root must annihilate the minimal polynomial.
  const auto& m = field.integer_minimal_polynomial();
  std::uint32_t acc = 0;
  for (std::size_t k = m.size(); k-- > 0;) acc = add_mod(mul_mod(acc, root, p), residue(m[k], p), p);
  if (acc != 0) throw Error("reduction root is not a root of the minimal polynomial");
}

std::optional<std::uint32_t> Reduction::map(const arith::Integer* numerators, const arith::Integer& den) const {
  const std::uint32_t d = residue(den, p_);
  if (d == 0) return std::nullopt;
  std::uint32_t acc = 0;
  for (std::size_t k = 0; k < root_powers_.size(); ++k)
    acc = add_mod(acc, mul_mod(residue(numerators[k], p_), root_powers_[k], p_), p_);
  return mul_mod(acc, kernels::inv_mod(d, p_), p_);
}

std::optional<std::uint32_t> Reduction::map(const arith::FieldElement& e) const {
  if (&e.field() != field_) throw FieldMismatch("reduction of " + e.field().id() + " element");
  return map(e.numerators().data(), e.denominator());
}

std::optional<std::vector<std::pair<poly::Monomial, std::uint32_t>>> Reduction::map(const poly::MPoly& f) const {
  if (&f.field() != field_) throw FieldMismatch("reduction of " + f.field().id() + " polynomial");
  std::vector<std::pair<poly::Monomial, std::uint32_t>> out;
  out.reserve(f.num_terms());
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    auto c = map(f.numerator(i), f.denominator());
    if (!c) return std::nullopt;
    if (*c != 0) out.emplace_back(f.monomial(i), *c);
  }
  return out;
}

MacaulayRank macaulay_rank(const std::vector<std::vector<std::pair<poly::Monomial, std::uint32_t>>>& gens,
                           const std::vector<unsigned>& degrees, unsigned degree, std::uint32_t p) {
  if (gens.size() != degrees.size()) throw Error("macaulay_rank: degree list mismatch");
  MacaulayRank out;
  out.cols = poly::monomial_count(degree);
  for (unsigned d : degrees)
    if (d <= degree) out.rows += poly::monomial_count(degree - d);
  kernels::ModMatrix m(out.rows, out.cols);
  std::size_t r = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (degrees[g] > degree) continue;
    for (const auto& shift : poly::monomials_of_degree(degree - degrees[g])) {
      std::uint32_t* row = m.row(r++);
      for (const auto& [mono, c] : gens[g]) row[poly::grevlex_index(mono * shift)] = c;
    }
  }
  out.rank = kernels::rank_mod(m, p);
  return out;
}

std::uint32_t evaluate_mod(const std::vector<std::pair<poly::Monomial, std::uint32_t>>& f,
                           const std::array<std::uint32_t, 3>& point, std::uint32_t p) {
  std::uint32_t acc = 0;
  for (const auto& [m, c] : f) {
    std::uint32_t t = c;
    for (int v = 0; v < 3; ++v) t = mul_mod(t, kernels::pow_mod(point[v], m.e[v], p), p);
    acc = add_mod(acc, t, p);
  }
  return acc;
}

std::vector<std::array<std::uint32_t, 3>> projective_zeros_mod_p(
    const std::vector<std::vector<std::pair<poly::Monomial, std::uint32_t>>>& gens, std::uint32_t p,
    std::size_t limit) {
  std::vector<std::array<std::uint32_t, 3>> zeros;
  auto test = [&](std::array<std::uint32_t, 3> pt) {
    for (const auto& g : gens)
      if (evaluate_mod(g, pt, p) != 0) return false;
    zeros.push_back(pt);
    return zeros.size() >= limit;
  };
  if (test({0, 0, 1})) return zeros;
  for (std::uint32_t b = 0; b < p; ++b)
    if (test({0, 1, b})) return zeros;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      if (test({1, a, b})) return zeros;
  return zeros;
}

}  // namespace invcurve::ideals
