#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invcurve/arith/rational.hpp"

namespace invcurve::arith {

// A fixed algebraic extension Q[w]/(m(w)). Elements are residues of degree < degree().
//
// The minimal polynomial is kept in two forms: monic over Q (the public view) and as
// a primitive integer polynomial with leading coefficient L, which drives the
// integral pseudo-remainder used by all multiplication kernels.
//
// Instances are process-wide singletons and are compared by address.
class NumberField {
 public:
  enum class Kind { Rationals, Cyclotomic, Quadratic };

  static const NumberField& rationals();
  // Q(zeta_15): houses rho = zeta^5 and sqrt(5) via zeta_5 = zeta^3.
  static const NumberField& cyclotomic15();
  // Q(zeta_7): houses zeta and sqrt(-7).
  static const NumberField& cyclotomic7();
  // Q[e]/(4e^2 + 3e + 9).
  static const NumberField& wiman_eta();

  // Looks up one of the fields above by id(); throws Error for unknown ids.
  static const NumberField& by_id(std::string_view id);

  const std::string& id() const { return id_; }
  std::size_t degree() const { return int_minpoly_.size() - 1; }
  Kind kind() const { return kind_; }
  // Order n for Q(zeta_n), 0 otherwise.
  unsigned cyclotomic_order() const { return cyclotomic_order_; }
  // Symbol used for the generator in text output.
  const std::string& generator_name() const { return generator_name_; }

  // Monic minimal polynomial, coefficients low to high.
  std::vector<Rational> minimal_polynomial() const;
  // Primitive integer minimal polynomial, coefficients low to high.
  const std::vector<Integer>& integer_minimal_polynomial() const { return int_minpoly_; }
  const Integer& leading_coefficient() const { return int_minpoly_.back(); }

  // Reduces a product vector of length 2*degree()-1 in place so that its first
  // degree() entries hold L^(degree()-1) * c mod m. Entries past degree() are
  // left zero.
  void reduce_product(Integer* c) const;
  // The uniform factor applied by reduce_product: L^(degree()-1).
  const Integer& product_scale() const { return product_scale_; }

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

 private:
  NumberField(std::string id, Kind kind, unsigned order, std::string generator,
              std::vector<Integer> int_minpoly);

  std::string id_;
  Kind kind_;
  unsigned cyclotomic_order_;
  std::string generator_name_;
  std::vector<Integer> int_minpoly_;
  Integer product_scale_;
};

}  // namespace invcurve::arith
