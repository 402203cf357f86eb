#include "invcurve/arith/number_field.hpp"

#include <utility>

#include "invcurve/error.hpp"

namespace invcurve::arith {

NumberField::NumberField(std::string id, Kind kind, unsigned order, std::string generator,
                         std::vector<Integer> int_minpoly)
    : id_(std::move(id)),
      kind_(kind),
      cyclotomic_order_(order),
      generator_name_(std::move(generator)),
      int_minpoly_(std::move(int_minpoly)),
      product_scale_(1) {
  for (std::size_t i = 1; i < degree(); ++i) product_scale_ *= leading_coefficient();
}

const NumberField& NumberField::rationals() {
  // m(w) = w: every element is its constant coordinate.
  static const NumberField field("Q", Kind::Rationals, 0, "w", {Integer(0), Integer(1)});
  return field;
}

const NumberField& NumberField::cyclotomic15() {
  // Phi_15(w) = w^8 - w^7 + w^5 - w^4 + w^3 - w + 1
  static const NumberField field("Q(zeta15)", Kind::Cyclotomic, 15, "zeta15",
                                 {1, -1, 0, 1, -1, 1, 0, -1, 1});
  return field;
}

const NumberField& NumberField::cyclotomic7() {
  static const NumberField field("Q(zeta7)", Kind::Cyclotomic, 7, "zeta7",
                                 {1, 1, 1, 1, 1, 1, 1});
  return field;
}

const NumberField& NumberField::wiman_eta() {
  static const NumberField field("Q(eta)", Kind::Quadratic, 0, "e", {9, 3, 4});
  return field;
}

const NumberField& NumberField::by_id(std::string_view id) {
  for (const NumberField* f : {&rationals(), &cyclotomic15(), &cyclotomic7(), &wiman_eta()}) {
    if (f->id() == id) return *f;
  }
  throw Error("unknown number field id '" + std::string(id) + "'");
}

std::vector<Rational> NumberField::minimal_polynomial() const {
  std::vector<Rational> out;
  out.reserve(int_minpoly_.size());
  for (const Integer& c : int_minpoly_) out.emplace_back(c, leading_coefficient());
  for (Rational& c : out) c.canonicalize();
  return out;
}

void NumberField::reduce_product(Integer* c) const {
  const std::size_t n = degree();
  if (n == 1) return;
  const Integer& lead = leading_coefficient();
  const bool monic = lead == 1;
  Integer t;
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    t = c[k];
    c[k] = 0;
    if (!monic) {
      for (std::size_t i = 0; i < k; ++i) c[i] *= lead;
    }
    if (t == 0) continue;
    const std::size_t shift = k - n;
    for (std::size_t i = 0; i < n; ++i) {
      if (int_minpoly_[i] != 0) mpz_submul(c[shift + i].get_mpz_t(), t.get_mpz_t(), int_minpoly_[i].get_mpz_t());
    }
  }
}

}  // namespace invcurve::arith
