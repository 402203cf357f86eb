#include "invcurve/arith/matrix3.hpp"

#include "invcurve/error.hpp"

namespace invcurve::arith {

Matrix3::Matrix3(const NumberField& field) : field_(&field), e_(9, FieldElement(field)) {}

Matrix3::Matrix3(const NumberField& field, std::vector<FieldElement> entries)
    : field_(&field), e_(std::move(entries)) {
  if (e_.size() != 9) throw Error("a 3x3 matrix needs 9 entries");
  for (const FieldElement& v : e_) {
    if (&v.field() != field_) throw FieldMismatch("matrix entry in " + v.field().id());
  }
}

Matrix3 Matrix3::identity(const NumberField& field) { return scalar(FieldElement(field, 1L)); }

Matrix3 Matrix3::scalar(const FieldElement& lambda) {
  Matrix3 m(lambda.field());
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = lambda;
  return m;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product");
  Matrix3 out(*a.field_);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      FieldElement s(*a.field_);
      for (std::size_t k = 0; k < 3; ++k) {
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) s += a(r, k) * b(k, c);
      }
      out(r, c) = std::move(s);
    }
  }
  return out;
}

Matrix3 Matrix3::scaled(const FieldElement& lambda) const {
  Matrix3 out(*this);
  for (FieldElement& v : out.e_) v *= lambda;
  return out;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 out(*field_);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

FieldElement Matrix3::det() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 Matrix3::inverse() const {
  const Matrix3& m = *this;
  const FieldElement d = det();
  if (d.is_zero()) throw DivisionByZero();
  Matrix3 adj(*field_);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const std::size_t c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj(r, c) = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    }
  }
  return adj.scaled(d.inverse());
}

bool Matrix3::is_identity() const { return *this == identity(*field_); }

FieldElement Matrix3::trace() const { return e_[0] + e_[4] + e_[8]; }

Matrix3 Matrix3::projective_normal_form() const {
  for (const FieldElement& v : e_) {
    if (!v.is_zero()) return scaled(v.inverse());
  }
  throw Error("zero matrix has no projective class");
}

std::size_t Matrix3::hash() const {
  std::size_t h = 0;
  for (const FieldElement& v : e_) h = h * 1000003u ^ v.hash();
  return h;
}

std::string Matrix3::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < 3; ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < 3; ++c) out += (c ? ", " : "") + (*this)(r, c).to_string();
  }
  return out + "]";
}

}  // namespace invcurve::arith
