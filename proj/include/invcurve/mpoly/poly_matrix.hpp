#pragma once

#include <cstddef>
#include <vector>

#include "invcurve/mpoly/mpoly.hpp"

namespace invcurve::poly {

class PolyMatrix {
 public:
  PolyMatrix(const NumberField& field, std::size_t rows, std::size_t cols);

  const NumberField& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const MPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  MPoly& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  bool is_symmetric() const;

 private:
  const NumberField* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MPoly> e_;
};

// Cofactor expansion along rows, sharing minors between branches.
MPoly det(const PolyMatrix& m);
// Fraction-free Bareiss elimination with exact polynomial division.
MPoly det_bareiss(const PolyMatrix& m);

// Exact quotient a / b; throws Error when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);
// Multivariate division of a by b in grevlex order: a = q*b + r.
void divide(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r);

std::array<MPoly, 3> gradient(const MPoly& f);
PolyMatrix hessian(const MPoly& f);
// H(f) bordered by the gradient of g, with a zero corner.
PolyMatrix bordered_hessian(const MPoly& f, const MPoly& g);
// Rows are the gradients of f, g, h.
PolyMatrix jacobian(const MPoly& f, const MPoly& g, const MPoly& h);
MPoly jacobian_det(const MPoly& f, const MPoly& g, const MPoly& h);

}  // namespace invcurve::poly
