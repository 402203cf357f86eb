#include "invcurve/mpoly/poly_matrix.hpp"

#include <unordered_map>

#include "invcurve/error.hpp"

namespace invcurve::poly {

PolyMatrix::PolyMatrix(const NumberField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), e_(rows * cols, MPoly(field)) {}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

namespace {

// Determinant of the minor built from rows [row, n) and the columns whose bit is
// clear in used.
const MPoly& minor_det(const PolyMatrix& m, std::size_t row, unsigned used,
                       std::unordered_map<unsigned, MPoly>& memo) {
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  const std::size_t n = m.rows();
  MPoly sum(m.field());
  if (row == n) {
    sum = MPoly(FieldElement(m.field(), 1L));
  } else {
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m(row, c).is_zero()) {
        const MPoly& sub = minor_det(m, row + 1, used | (1u << c), memo);
        if (!sub.is_zero()) {
          MPoly t = m(row, c) * sub;
          sum = sign > 0 ? sum + t : sum - t;
        }
      }
      sign = -sign;
    }
  }
  return memo.emplace(used, std::move(sum)).first->second;
}

}  // namespace

MPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.rows() > 16) throw Error("cofactor determinant limited to 16x16");
  std::unordered_map<unsigned, MPoly> memo;
  return minor_det(m, 0, 0, memo);
}

void divide(const MPoly& a, const MPoly& b, MPoly& q, MPoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  const NumberField& field = a.field();
  q = MPoly(field);
  r = MPoly(field);
  MPoly rest = a;
  const Monomial lb = b.leading_monomial();
  const FieldElement inv_lc = b.leading_coefficient().inverse();
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    if (lb.divides(lm)) {
      MPoly t = MPoly::term(lb.quotient_of(lm), rest.leading_coefficient() * inv_lc);
      q += t;
      rest -= t * b;
    } else {
      MPoly lt = MPoly::term(lm, rest.leading_coefficient());
      r += lt;
      rest -= lt;
    }
  }
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  MPoly q(a.field()), r(a.field());
  divide(a, b, q, r);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

MPoly det_bareiss(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const NumberField& field = input.field();
  if (n == 0) return MPoly(FieldElement(field, 1L));
  PolyMatrix m = input;
  MPoly prev(FieldElement(field, 1L));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return MPoly(field);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::array<MPoly, 3> gradient(const MPoly& f) { return {f.partial(0), f.partial(1), f.partial(2)}; }

PolyMatrix hessian(const MPoly& f) {
  PolyMatrix h(f.field(), 3, 3);
  const auto g = gradient(f);
  for (unsigned r = 0; r < 3; ++r) {
    for (unsigned c = r; c < 3; ++c) {
      h(r, c) = g[r].partial(c);
      h(c, r) = h(r, c);
    }
  }
  return h;
}

PolyMatrix bordered_hessian(const MPoly& f, const MPoly& g) {
  if (&f.field() != &g.field()) throw FieldMismatch("bordered Hessian");
  PolyMatrix b(f.field(), 4, 4);
  const PolyMatrix h = hessian(f);
  const auto dg = gradient(g);
  for (unsigned r = 0; r < 3; ++r) {
    for (unsigned c = 0; c < 3; ++c) b(r, c) = h(r, c);
    b(r, 3) = dg[r];
    b(3, r) = dg[r];
  }
  return b;
}

PolyMatrix jacobian(const MPoly& f, const MPoly& g, const MPoly& h) {
  if (&f.field() != &g.field() || &f.field() != &h.field()) throw FieldMismatch("Jacobian");
  PolyMatrix j(f.field(), 3, 3);
  const std::array<const MPoly*, 3> rows{&f, &g, &h};
  for (unsigned r = 0; r < 3; ++r) {
    for (unsigned c = 0; c < 3; ++c) j(r, c) = rows[r]->partial(c);
  }
  return j;
}

MPoly jacobian_det(const MPoly& f, const MPoly& g, const MPoly& h) { return det(jacobian(f, g, h)); }

}  // namespace invcurve::poly
