#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "invcurve/arith/number_field.hpp"
#include "invcurve/arith/rational.hpp"

namespace invcurve::arith {

// Exact element of a NumberField, stored as integer numerators over one positive
// common denominator. The representation is canonical: gcd(numerators, den) = 1,
// so structural equality is field equality.
class FieldElement {
 public:
  explicit FieldElement(const NumberField& field);
  FieldElement(const NumberField& field, const Rational& value);
  FieldElement(const NumberField& field, long value);

  static FieldElement from_coords(const NumberField& field, std::span<const Rational> coords);
  // Takes ownership of an integer numerator vector (length degree()) and a nonzero
  // denominator; normalizes.
  static FieldElement from_integers(const NumberField& field, std::vector<Integer> numerators,
                                    Integer denominator);
  static FieldElement generator(const NumberField& field);

  const NumberField& field() const { return *field_; }
  std::size_t degree() const { return num_.size(); }
  Rational coord(std::size_t i) const;
  std::vector<Rational> coords() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws Error when the element is not rational.
  Rational to_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  // Throws DivisionByZero for zero.
  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::size_t hash() const;
  // Rational if possible, otherwise "(c0 + c1*w + ...)" in the field generator.
  std::string to_string() const;

 private:
  void normalize();
  void check_same_field(const FieldElement& other, const char* op) const;

  const NumberField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

FieldElement inv(const FieldElement& a);

}  // namespace invcurve::arith

template <>
struct std::hash<invcurve::arith::FieldElement> {
  std::size_t operator()(const invcurve::arith::FieldElement& e) const noexcept { return e.hash(); }
};
