#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/arith/field_element.hpp"
#include "invcurve/arith/matrix3.hpp"

namespace invcurve::poly {

using arith::FieldElement;
using arith::Integer;
using arith::Matrix3;
using arith::NumberField;
using arith::Rational;

struct Monomial {
  std::array<std::uint16_t, 3> e{};

  Monomial() = default;
  Monomial(unsigned a, unsigned b, unsigned c)
      : e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)} {}

  unsigned degree() const { return unsigned(e[0]) + e[1] + e[2]; }
  bool divides(const Monomial& m) const { return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2]; }
  Monomial operator*(const Monomial& m) const { return Monomial(e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]); }
  // Requires divides(m).
  Monomial quotient_of(const Monomial& m) const { return Monomial(m.e[0] - e[0], m.e[1] - e[1], m.e[2] - e[2]); }
  Monomial lcm(const Monomial& m) const;
  bool operator==(const Monomial&) const = default;
  std::string to_string() const;
};

// Graded reverse lexicographic order with x > y > z.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

// Position of m among the degree-m.degree() monomials listed in descending grevlex order.
inline std::size_t grevlex_index(const Monomial& m) {
  const std::size_t d = m.degree(), c = m.e[2];
  return c * (d + 1) - c * (c - 1) / 2 + m.e[1];
}
inline std::size_t monomial_count(unsigned degree) { return (degree + 1u) * (degree + 2u) / 2u; }
// All monomials of the given degree, descending.
std::vector<Monomial> monomials_of_degree(unsigned degree);

// Polynomial in x, y, z over a NumberField.
//
// Terms are kept in descending grevlex order with no zero coefficients. The
// coefficients share one positive denominator: term i has the integer numerator
// block numerator(i) of length field().degree(), and the whole content
// gcd(numerators, denominator) is 1, so equal polynomials are stored identically.
class MPoly {
 public:
  explicit MPoly(const NumberField& field);
  MPoly(const FieldElement& constant);

  static MPoly variable(const NumberField& field, unsigned index);
  static MPoly term(const Monomial& m, const FieldElement& c);
  // Sums repeated monomials.
  static MPoly from_terms(const NumberField& field, const std::vector<std::pair<Monomial, FieldElement>>& terms);
  // Integer coefficients as (monomial, coefficient) pairs.
  static MPoly from_integers(const NumberField& field, const std::vector<std::pair<Monomial, long>>& terms);

  const NumberField& field() const { return *field_; }
  std::size_t num_terms() const { return monos_.size(); }
  bool is_zero() const { return monos_.empty(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const Monomial& monomial(std::size_t i) const { return monos_[i]; }
  const Monomial& leading_monomial() const { return monos_.front(); }
  FieldElement coefficient(std::size_t i) const;
  FieldElement coefficient(const Monomial& m) const;
  FieldElement leading_coefficient() const { return coefficient(0); }
  const Integer* numerator(std::size_t i) const { return coef_.data() + i * field_->degree(); }
  const Integer& denominator() const { return den_; }
  std::vector<std::pair<Monomial, FieldElement>> terms() const;

  // Maximal total degree; -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  // Common degree of all terms; nullopt for zero or inhomogeneous polynomials.
  std::optional<unsigned> homogeneous_degree() const;
  // Like homogeneous_degree but throws Error when there is none.
  unsigned degree_or_throw() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
  MPoly scaled(const FieldElement& c) const;
  MPoly times_monomial(const Monomial& m) const;
  MPoly pow(unsigned n) const;

  MPoly partial(unsigned var) const;
  FieldElement evaluate(const std::array<FieldElement, 3>& point) const;
  // f^A(x) = f(A x): an action from the right, (f^A)^B = f^(AB).
  MPoly substitute(const Matrix3& a) const;

  // Same polynomial over another field: Q embeds everywhere; elsewhere the
  // coefficients must be rational. Throws Error otherwise.
  MPoly to_field(const NumberField& target) const;
  bool has_rational_coefficients() const;
  // Scales by the positive rational making the content 1 and the leading
  // coordinate positive; for rational polynomials this is the primitive part.
  MPoly primitive() const;
  // Divides by the leading coefficient.
  MPoly monic() const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  std::size_t hash() const;
  // Sum of coeff*x^a*y^b*z^c terms, descending.
  std::string to_string() const;

 private:
  friend class PolyBuilder;
  void normalize();
  void check_field(const MPoly& other, const char* op) const;

  const NumberField* field_;
  std::vector<Monomial> monos_;
  std::vector<Integer> coef_;
  Integer den_;
};

// Collects terms with integer numerator blocks over a shared denominator and
// builds a canonical MPoly.
class PolyBuilder {
 public:
  explicit PolyBuilder(const NumberField& field) : field_(&field) {}
  // Appends without merging; call in any order.
  void add(const Monomial& m, const Integer* numerators);
  MPoly build(Integer denominator);

 private:
  const NumberField* field_;
  std::vector<std::pair<Monomial, std::size_t>> index_;
  std::vector<Integer> coef_;
};

MPoly x(const NumberField& field);
MPoly y(const NumberField& field);
MPoly z(const NumberField& field);

}  // namespace invcurve::poly

template <>
struct std::hash<invcurve::poly::MPoly> {
  std::size_t operator()(const invcurve::poly::MPoly& p) const noexcept { return p.hash(); }
};
