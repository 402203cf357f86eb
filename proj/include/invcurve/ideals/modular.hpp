#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "invcurve/mpoly/mpoly.hpp"

namespace invcurve::ideals {

// Ring homomorphism from the p-integral elements of a NumberField onto F_p,
// sending the field generator to a root of its minimal polynomial mod p.
class Reduction {
 public:
  // The n-th admissible prime below 2^30 for the field (n = 0, 1, ...).
  static Reduction for_field(const arith::NumberField& field, unsigned n = 0);
  Reduction(const arith::NumberField& field, std::uint32_t p, std::uint32_t root);

  std::uint32_t prime() const { return p_; }
  std::uint32_t root() const { return root_; }
  const arith::NumberField& field() const { return *field_; }

  // nullopt when a denominator vanishes mod p.
  std::optional<std::uint32_t> map(const arith::FieldElement& e) const;
  std::optional<std::uint32_t> map(const arith::Integer* numerators, const arith::Integer& den) const;
  // Terms of f mod p, zero images dropped; nullopt on a bad prime.
  std::optional<std::vector<std::pair<poly::Monomial, std::uint32_t>>> map(const poly::MPoly& f) const;

 private:
  const arith::NumberField* field_;
  std::uint32_t p_;
  std::uint32_t root_;
  std::vector<std::uint32_t> root_powers_;
};

// Rank of the degree-D Macaulay matrix: the rows are m * f for every generator
// f and monomial m of degree D - deg f; the columns are all degree-D monomials.
struct MacaulayRank {
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};
MacaulayRank macaulay_rank(const std::vector<std::vector<std::pair<poly::Monomial, std::uint32_t>>>& gens,
                           const std::vector<unsigned>& degrees, unsigned degree, std::uint32_t p);

// Evaluation of a reduced polynomial at a point of F_p^3.
std::uint32_t evaluate_mod(const std::vector<std::pair<poly::Monomial, std::uint32_t>>& f,
                           const std::array<std::uint32_t, 3>& point, std::uint32_t p);

// Common zeros in P^2(F_p) by exhaustive search; for small p only.
std::vector<std::array<std::uint32_t, 3>> projective_zeros_mod_p(
    const std::vector<std::vector<std::pair<poly::Monomial, std::uint32_t>>>& gens, std::uint32_t p,
    std::size_t limit = 1);

}  // namespace invcurve::ideals
