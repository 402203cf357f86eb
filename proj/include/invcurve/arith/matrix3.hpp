#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "invcurve/arith/field_element.hpp"

namespace invcurve::arith {

// 3x3 matrix over a NumberField.
class Matrix3 {
 public:
  explicit Matrix3(const NumberField& field);
  // Row-major entries.
  Matrix3(const NumberField& field, std::vector<FieldElement> entries);

  static Matrix3 identity(const NumberField& field);
  static Matrix3 scalar(const FieldElement& lambda);

  const NumberField& field() const { return *field_; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  Matrix3 scaled(const FieldElement& lambda) const;
  Matrix3 transpose() const;
  FieldElement det() const;
  // Throws DivisionByZero for singular matrices.
  Matrix3 inverse() const;
  bool is_identity() const;
  FieldElement trace() const;

  // Representative of the scalar class: divided by its first nonzero entry.
  Matrix3 projective_normal_form() const;

  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.field_ == b.field_ && a.e_ == b.e_; }
  std::size_t hash() const;
  std::string to_string() const;

 private:
  const NumberField* field_;
  std::vector<FieldElement> e_;
};

}  // namespace invcurve::arith

template <>
struct std::hash<invcurve::arith::Matrix3> {
  std::size_t operator()(const invcurve::arith::Matrix3& m) const noexcept { return m.hash(); }
};
