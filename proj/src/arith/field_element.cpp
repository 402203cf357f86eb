#include "invcurve/arith/field_element.hpp"

#include <utility>

#include "invcurve/error.hpp"

namespace invcurve::arith {

FieldElement::FieldElement(const NumberField& field)
    : field_(&field), num_(field.degree()), den_(1) {}

FieldElement::FieldElement(const NumberField& field, const Rational& value)
    : field_(&field), num_(field.degree()), den_(value.get_den()) {
  num_[0] = value.get_num();
}

FieldElement::FieldElement(const NumberField& field, long value)
    : field_(&field), num_(field.degree()), den_(1) {
  num_[0] = value;
}

FieldElement FieldElement::from_coords(const NumberField& field, std::span<const Rational> coords) {
  if (coords.size() != field.degree()) {
    throw Error("expected " + std::to_string(field.degree()) + " coordinates for " + field.id() +
                ", got " + std::to_string(coords.size()));
  }
  Integer den = 1;
  for (const Rational& c : coords) den = lcm(den, c.get_den());
  std::vector<Integer> num(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    num[i] = coords[i].get_num() * (den / coords[i].get_den());
  }
  return from_integers(field, std::move(num), std::move(den));
}

FieldElement FieldElement::from_integers(const NumberField& field, std::vector<Integer> numerators,
                                         Integer denominator) {
  if (numerators.size() != field.degree()) {
    throw Error("numerator vector has wrong length for " + field.id());
  }
  if (denominator == 0) throw DivisionByZero();
  FieldElement out(field);
  out.num_ = std::move(numerators);
  out.den_ = std::move(denominator);
  out.normalize();
  return out;
}

FieldElement FieldElement::generator(const NumberField& field) {
  if (field.degree() == 1) {
    // Q is presented as Q[w]/(w), so the generator is 0.
    return FieldElement(field);
  }
  FieldElement out(field);
  out.num_[1] = 1;
  return out;
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (Integer& c : num_) c = -c;
  }
  Integer g = den_;
  for (const Integer& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (g != 1) {
    for (Integer& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (is_zero()) den_ = 1;
}

void FieldElement::check_same_field(const FieldElement& other, const char* op) const {
  if (field_ != other.field_) {
    throw FieldMismatch(std::string(op) + " of " + field_->id() + " and " + other.field_->id());
  }
}

Rational FieldElement::coord(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> FieldElement::coords() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coord(i));
  return out;
}

bool FieldElement::is_zero() const {
  for (const Integer& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const { return is_rational() && num_[0] == 1 && den_ == 1; }

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  return true;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw Error("element " + to_string() + " is not rational");
  return coord(0);
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (Integer& c : out.num_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs, "sum");
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b, "product");
  const NumberField& field = *a.field_;
  const std::size_t n = field.degree();
  FieldElement out(field);
  if (a.is_zero() || b.is_zero()) return out;
  if (n == 1) {
    out.num_[0] = a.num_[0] * b.num_[0];
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
  }
  std::vector<Integer> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.num_[j] != 0) {
        mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
  }
  field.reduce_product(prod.data());
  for (std::size_t i = 0; i < n; ++i) out.num_[i] = std::move(prod[i]);
  out.den_ = a.den_ * b.den_ * field.product_scale();
  out.normalize();
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  *this = *this * rhs;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs, "quotient");
  *this = *this * rhs.inverse();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const NumberField& field = *field_;
  const std::size_t n = field.degree();
  if (is_rational()) {
    Rational r = coord(0);
    return FieldElement(field, Rational(1) / r);
  }
  // Column j of the multiplication matrix is this * w^j; solve M v = e_0.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  FieldElement col = *this;
  const FieldElement w = generator(field);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coord(i);
    if (j + 1 < n) col = col * w;
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error("singular multiplication matrix in " + field.id());
    std::swap(m[p], m[c]);
    const Rational pivot = m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = m[i][n];
  return from_coords(field, v);
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(*field_, 1L);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::size_t FieldElement::hash() const {
  std::size_t h = std::hash<const void*>{}(field_);
  auto mix = [&h](const Integer& v) {
    std::size_t x = mpz_get_ui(v.get_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(v.get_mpz_t())) << 63);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const Integer& c : num_) mix(c);
  mix(den_);
  return h;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return arith::to_string(coord(0));
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c = coord(i);
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0 && i > 0) {
      out += "-";
      c = -c;
    }
    first = false;
    if (i == 0) {
      out += arith::to_string(c);
      continue;
    }
    if (c != 1) out += arith::to_string(c) + "*";
    out += field_->generator_name();
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out + ")";
}

FieldElement inv(const FieldElement& a) { return a.inverse(); }

}  // namespace invcurve::arith
