#include "invcurve/mpoly/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invcurve/error.hpp"

namespace invcurve::poly {

Monomial Monomial::lcm(const Monomial& m) const {
  return {std::max(e[0], m.e[0]), std::max(e[1], m.e[1]), std::max(e[2], m.e[2])};
}

std::string Monomial::to_string() const {
  static const char* names[3] = {"x", "y", "z"};
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.e[2] != b.e[2]) return b.e[2] <=> a.e[2];
  return b.e[1] <=> a.e[1];
}

std::vector<Monomial> monomials_of_degree(unsigned degree) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(degree));
  for (unsigned c = 0; c <= degree; ++c) {
    for (unsigned b = 0; b + c <= degree; ++b) out.emplace_back(degree - b - c, b, c);
  }
  return out;
}

namespace {

bool block_is_zero(const Integer* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != 0) return false;
  }
  return true;
}

bool descending(const Monomial& a, const Monomial& b) { return grevlex(a, b) > 0; }

// Contiguous runs of equal total degree in a descending term list.
struct Segment {
  unsigned degree;
  std::size_t begin;
  std::size_t end;
};

std::vector<Segment> degree_segments(const std::vector<Monomial>& monos) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    unsigned d = monos[i].degree();
    if (out.empty() || out.back().degree != d) out.push_back({d, i, i});
    out.back().end = i + 1;
  }
  return out;
}

}  // namespace

MPoly::MPoly(const NumberField& field) : field_(&field), den_(1) {}

MPoly::MPoly(const FieldElement& constant) : field_(&constant.field()), den_(1) {
  if (constant.is_zero()) return;
  monos_.emplace_back(0, 0, 0);
  coef_ = constant.numerators();
  den_ = constant.denominator();
}

MPoly MPoly::variable(const NumberField& field, unsigned index) {
  if (index > 2) throw Error("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return term(m, FieldElement(field, 1L));
}

MPoly MPoly::term(const Monomial& m, const FieldElement& c) {
  MPoly out(c.field());
  if (c.is_zero()) return out;
  out.monos_.push_back(m);
  out.coef_ = c.numerators();
  out.den_ = c.denominator();
  return out;
}

MPoly MPoly::from_terms(const NumberField& field, const std::vector<std::pair<Monomial, FieldElement>>& terms) {
  Integer den = 1;
  for (const auto& [m, c] : terms) {
    if (&c.field() != &field) throw FieldMismatch("term coefficient in " + c.field().id());
    den = arith::lcm(den, c.denominator());
  }
  PolyBuilder builder(field);
  std::vector<Integer> block(field.degree());
  for (const auto& [m, c] : terms) {
    const Integer scale = den / c.denominator();
    for (std::size_t k = 0; k < block.size(); ++k) block[k] = c.numerators()[k] * scale;
    builder.add(m, block.data());
  }
  return builder.build(den);
}

MPoly MPoly::from_integers(const NumberField& field, const std::vector<std::pair<Monomial, long>>& terms) {
  PolyBuilder builder(field);
  std::vector<Integer> block(field.degree());
  for (const auto& [m, c] : terms) {
    block[0] = c;
    builder.add(m, block.data());
  }
  return builder.build(1);
}

void PolyBuilder::add(const Monomial& m, const Integer* numerators) {
  const std::size_t n = field_->degree();
  index_.emplace_back(m, coef_.size());
  coef_.insert(coef_.end(), numerators, numerators + n);
}

MPoly PolyBuilder::build(Integer denominator) {
  const std::size_t n = field_->degree();
  std::stable_sort(index_.begin(), index_.end(),
                   [](const auto& a, const auto& b) { return descending(a.first, b.first); });
  MPoly out(*field_);
  for (std::size_t i = 0; i < index_.size();) {
    std::size_t j = i;
    const Monomial m = index_[i].first;
    std::vector<Integer> sum(coef_.begin() + index_[i].second, coef_.begin() + index_[i].second + n);
    for (++j; j < index_.size() && index_[j].first == m; ++j) {
      for (std::size_t k = 0; k < n; ++k) sum[k] += coef_[index_[j].second + k];
    }
    if (!block_is_zero(sum.data(), n)) {
      out.monos_.push_back(m);
      for (Integer& v : sum) out.coef_.push_back(std::move(v));
    }
    i = j;
  }
  out.den_ = std::move(denominator);
  out.normalize();
  index_.clear();
  coef_.clear();
  return out;
}

void MPoly::normalize() {
  const std::size_t n = field_->degree();
  if (den_ == 0) throw DivisionByZero();
  // Drop zero blocks.
  std::size_t w = 0;
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    if (block_is_zero(coef_.data() + i * n, n)) continue;
    if (w != i) {
      monos_[w] = monos_[i];
      for (std::size_t k = 0; k < n; ++k) coef_[w * n + k].swap(coef_[i * n + k]);
    }
    ++w;
  }
  monos_.resize(w);
  coef_.resize(w * n);
  if (den_ < 0) {
    den_ = -den_;
    for (Integer& c : coef_) c = -c;
  }
  if (monos_.empty()) {
    den_ = 1;
    return;
  }
  Integer g = den_;
  for (const Integer& c : coef_) {
    if (g == 1) return;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g == 1) return;
  for (Integer& c : coef_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void MPoly::check_field(const MPoly& other, const char* op) const {
  if (field_ != other.field_) {
    throw FieldMismatch(std::string(op) + " of polynomials over " + field_->id() + " and " + other.field_->id());
  }
}

FieldElement MPoly::coefficient(std::size_t i) const {
  const std::size_t n = field_->degree();
  return FieldElement::from_integers(*field_, std::vector<Integer>(coef_.begin() + i * n, coef_.begin() + (i + 1) * n),
                                     den_);
}

FieldElement MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(monos_.begin(), monos_.end(), m, descending);
  if (it == monos_.end() || !(*it == m)) return FieldElement(*field_);
  return coefficient(static_cast<std::size_t>(it - monos_.begin()));
}

std::vector<std::pair<Monomial, FieldElement>> MPoly::terms() const {
  std::vector<std::pair<Monomial, FieldElement>> out;
  out.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) out.emplace_back(monos_[i], coefficient(i));
  return out;
}

int MPoly::total_degree() const { return monos_.empty() ? -1 : static_cast<int>(monos_.front().degree()); }

bool MPoly::is_homogeneous() const {
  return monos_.empty() || monos_.front().degree() == monos_.back().degree();
}

std::optional<unsigned> MPoly::homogeneous_degree() const {
  if (monos_.empty() || !is_homogeneous()) return std::nullopt;
  return monos_.front().degree();
}

unsigned MPoly::degree_or_throw() const {
  auto d = homogeneous_degree();
  if (!d) throw Error(is_zero() ? "zero polynomial has no degree" : "polynomial is not homogeneous");
  return *d;
}

MPoly MPoly::operator-() const {
  MPoly out(*this);
  for (Integer& c : out.coef_) c = -c;
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  a.check_field(b, "sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t n = a.field_->degree();
  const Integer den = arith::lcm(a.den_, b.den_);
  const Integer sa = den / a.den_, sb = den / b.den_;
  MPoly out(*a.field_);
  out.monos_.reserve(a.monos_.size() + b.monos_.size());
  out.coef_.reserve((a.monos_.size() + b.monos_.size()) * n);
  std::size_t i = 0, j = 0;
  auto push = [&](const MPoly& p, std::size_t t, const Integer& s) {
    out.monos_.push_back(p.monos_[t]);
    for (std::size_t k = 0; k < n; ++k) out.coef_.push_back(p.coef_[t * n + k] * s);
  };
  while (i < a.monos_.size() || j < b.monos_.size()) {
    if (j == b.monos_.size() || (i < a.monos_.size() && descending(a.monos_[i], b.monos_[j]))) {
      push(a, i++, sa);
    } else if (i == a.monos_.size() || descending(b.monos_[j], a.monos_[i])) {
      push(b, j++, sb);
    } else {
      out.monos_.push_back(a.monos_[i]);
      for (std::size_t k = 0; k < n; ++k) {
        Integer v = a.coef_[i * n + k] * sa;
        mpz_addmul(v.get_mpz_t(), b.coef_[j * n + k].get_mpz_t(), sb.get_mpz_t());
        out.coef_.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  out.den_ = den;
  out.normalize();
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_field(b, "product");
  const NumberField& field = *a.field_;
  if (a.is_zero() || b.is_zero()) return MPoly(field);
  const std::size_t n = field.degree();
  const std::size_t w = 2 * n - 1;

  // Nonzero coordinate positions of each term, to skip empty convolution slots.
  auto support = [n](const MPoly& p) {
    std::vector<std::vector<unsigned>> s(p.monos_.size());
    for (std::size_t t = 0; t < p.monos_.size(); ++t) {
      for (std::size_t k = 0; k < n; ++k) {
        if (p.coef_[t * n + k] != 0) s[t].push_back(static_cast<unsigned>(k));
      }
    }
    return s;
  };
  const auto sa = support(a);
  const auto sb = support(b);

  // One unreduced convolution slot per output monomial, per output degree; each
  // slot is reduced modulo the minimal polynomial exactly once at the end.
  std::map<unsigned, std::vector<Integer>, std::greater<>> acc;
  for (const Segment& ga : degree_segments(a.monos_)) {
    for (const Segment& gb : degree_segments(b.monos_)) {
      const unsigned d = ga.degree + gb.degree;
      std::vector<Integer>& slots = acc[d];
      if (slots.empty()) slots.resize(monomial_count(d) * w);
      for (std::size_t i = ga.begin; i < ga.end; ++i) {
        const Integer* ca = a.coef_.data() + i * n;
        for (std::size_t j = gb.begin; j < gb.end; ++j) {
          const Integer* cb = b.coef_.data() + j * n;
          Integer* t = slots.data() + grevlex_index(a.monos_[i] * b.monos_[j]) * w;
          for (unsigned p : sa[i]) {
            for (unsigned q : sb[j]) mpz_addmul(t[p + q].get_mpz_t(), ca[p].get_mpz_t(), cb[q].get_mpz_t());
          }
        }
      }
    }
  }

  MPoly out(field);
  for (auto& [d, slots] : acc) {
    const std::vector<Monomial> monos = monomials_of_degree(d);
    for (std::size_t idx = 0; idx < monos.size(); ++idx) {
      Integer* t = slots.data() + idx * w;
      if (block_is_zero(t, w)) continue;
      field.reduce_product(t);
      if (block_is_zero(t, n)) continue;
      out.monos_.push_back(monos[idx]);
      for (std::size_t k = 0; k < n; ++k) out.coef_.push_back(std::move(t[k]));
    }
  }
  out.den_ = a.den_ * b.den_ * field.product_scale();
  out.normalize();
  return out;
}

MPoly MPoly::scaled(const FieldElement& c) const {
  if (&c.field() != field_) throw FieldMismatch("scalar in " + c.field().id());
  if (c.is_rational()) {
    MPoly out(*this);
    const Rational r = c.to_rational();
    for (Integer& v : out.coef_) v *= r.get_num();
    out.den_ *= r.get_den();
    out.normalize();
    return out;
  }
  return *this * MPoly(c);
}

MPoly MPoly::times_monomial(const Monomial& m) const {
  MPoly out(*this);
  for (Monomial& t : out.monos_) t = t * m;
  return out;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(FieldElement(*field_, 1L));
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::partial(unsigned var) const {
  if (var > 2) throw Error("variable index out of range");
  const std::size_t n = field_->degree();
  MPoly out(*field_);
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    const unsigned e = monos_[i].e[var];
    if (e == 0) continue;
    Monomial m = monos_[i];
    --m.e[var];
    out.monos_.push_back(m);
    for (std::size_t k = 0; k < n; ++k) out.coef_.push_back(coef_[i * n + k] * e);
  }
  // Differentiation keeps the grevlex order of the surviving terms.
  out.den_ = den_;
  out.normalize();
  return out;
}

FieldElement MPoly::evaluate(const std::array<FieldElement, 3>& point) const {
  for (const FieldElement& v : point) {
    if (&v.field() != field_) throw FieldMismatch("evaluation point in " + v.field().id());
  }
  FieldElement result(*field_);
  if (is_zero()) return result;
  const unsigned top = monos_.front().degree();
  std::array<std::vector<FieldElement>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(FieldElement(*field_, 1L));
    unsigned needed = 0;
    for (const Monomial& m : monos_) needed = std::max<unsigned>(needed, m.e[v]);
    for (unsigned k = 1; k <= std::min(needed, top); ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    const Monomial& m = monos_[i];
    FieldElement t = powers[0][m.e[0]] * powers[1][m.e[1]] * powers[2][m.e[2]];
    const std::size_t n = field_->degree();
    FieldElement c = FieldElement::from_integers(*field_, std::vector<Integer>(coef_.begin() + i * n, coef_.begin() + (i + 1) * n), 1);
    result += c * t;
  }
  return result * FieldElement(*field_, Rational(1) / Rational(den_));
}

namespace {

// Row r has a single nonzero entry for every r.
bool is_monomial_matrix(const Matrix3& a, std::array<unsigned, 3>& column) {
  for (unsigned r = 0; r < 3; ++r) {
    int found = -1;
    for (unsigned c = 0; c < 3; ++c) {
      if (a(r, c).is_zero()) continue;
      if (found >= 0) return false;
      found = static_cast<int>(c);
    }
    if (found < 0) return false;
    column[r] = static_cast<unsigned>(found);
  }
  return true;
}

}  // namespace

MPoly MPoly::substitute(const Matrix3& a) const {
  if (&a.field() != field_) throw FieldMismatch("substitution matrix over " + a.field().id());
  if (is_zero()) return *this;
  const std::size_t n = field_->degree();

  std::array<unsigned, 3> column{};
  if (is_monomial_matrix(a, column)) {
    // x_r -> a(r, column[r]) * x_column[r]
    std::array<std::vector<FieldElement>, 3> scale;
    const unsigned top = monos_.front().degree();
    for (unsigned r = 0; r < 3; ++r) {
      scale[r].push_back(FieldElement(*field_, 1L));
      for (unsigned k = 1; k <= top; ++k) scale[r].push_back(scale[r].back() * a(r, column[r]));
    }
    std::vector<std::pair<Monomial, FieldElement>> terms;
    terms.reserve(monos_.size());
    for (std::size_t i = 0; i < monos_.size(); ++i) {
      const Monomial& m = monos_[i];
      Monomial image;
      for (unsigned r = 0; r < 3; ++r) image.e[column[r]] = static_cast<std::uint16_t>(image.e[column[r]] + m.e[r]);
      FieldElement c = FieldElement::from_integers(*field_, std::vector<Integer>(coef_.begin() + i * n, coef_.begin() + (i + 1) * n), den_);
      terms.emplace_back(image, c * scale[0][m.e[0]] * scale[1][m.e[1]] * scale[2][m.e[2]]);
    }
    return from_terms(*field_, terms);
  }

  // Nested homogeneous Horner scheme: f = sum_a x^a p_a(y, z) with
  // p_a(L1, L2) = (((c_m L1 + c_{m-1} L2) L1 + c_{m-2} L2^2) ...).
  std::array<MPoly, 3> lin{MPoly(*field_), MPoly(*field_), MPoly(*field_)};
  for (unsigned r = 0; r < 3; ++r) {
    for (unsigned c = 0; c < 3; ++c) lin[r] += term(Monomial(c == 0, c == 1, c == 2), a(r, c));
  }
  std::vector<MPoly> l2_powers{MPoly(FieldElement(*field_, 1L))};

  MPoly result(*field_);
  for (const Segment& seg : degree_segments(monos_)) {
    const unsigned d = seg.degree;
    while (l2_powers.size() <= d) l2_powers.push_back(l2_powers.back() * lin[2]);
    // coefficient lookup by (a, b) within this degree
    std::vector<std::vector<const Integer*>> by_ab(d + 1, std::vector<const Integer*>(d + 1, nullptr));
    for (std::size_t i = seg.begin; i < seg.end; ++i) by_ab[monos_[i].e[0]][monos_[i].e[1]] = coef_.data() + i * n;
    auto coeff_of = [&](unsigned xa, unsigned yb) {
      const Integer* c = by_ab[xa][yb];
      if (!c) return FieldElement(*field_);
      return FieldElement::from_integers(*field_, std::vector<Integer>(c, c + n), 1);
    };
    MPoly outer(*field_);
    for (int xa = static_cast<int>(d); xa >= 0; --xa) {
      const unsigned m = d - static_cast<unsigned>(xa);
      MPoly inner(*field_);
      bool any = false;
      for (unsigned yb = 0; yb <= m; ++yb) any = any || by_ab[xa][yb] != nullptr;
      if (any) {
        for (int yb = static_cast<int>(m); yb >= 0; --yb) {
          inner = inner * lin[1];
          FieldElement c = coeff_of(static_cast<unsigned>(xa), static_cast<unsigned>(yb));
          if (!c.is_zero()) inner += l2_powers[m - static_cast<unsigned>(yb)].scaled(c);
        }
      }
      outer = outer * lin[0] + inner;
    }
    result += outer;
  }
  return result.scaled(FieldElement(*field_, Rational(1) / Rational(den_)));
}

MPoly MPoly::to_field(const NumberField& target) const {
  if (&target == field_) return *this;
  const std::size_t n = field_->degree();
  const std::size_t m = target.degree();
  if (field_->degree() != 1 && !has_rational_coefficients()) {
    throw Error("cannot move a polynomial with irrational coefficients from " + field_->id() + " to " + target.id());
  }
  MPoly out(target);
  out.monos_ = monos_;
  out.coef_.resize(monos_.size() * m);
  for (std::size_t i = 0; i < monos_.size(); ++i) out.coef_[i * m] = coef_[i * n];
  out.den_ = den_;
  out.normalize();
  return out;
}

bool MPoly::has_rational_coefficients() const {
  const std::size_t n = field_->degree();
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    for (std::size_t k = 1; k < n; ++k) {
      if (coef_[i * n + k] != 0) return false;
    }
  }
  return true;
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  MPoly out(*this);
  out.den_ = 1;
  Integer g = 0;
  for (const Integer& c : out.coef_) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  std::size_t k = 0;
  while (out.coef_[k] == 0) ++k;
  if (out.coef_[k] < 0) g = -g;
  for (Integer& c : out.coef_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

MPoly MPoly::monic() const {
  if (is_zero()) throw DivisionByZero();
  return scaled(leading_coefficient().inverse());
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.field_ == b.field_ && a.monos_ == b.monos_ && a.den_ == b.den_ && a.coef_ == b.coef_;
}

std::size_t MPoly::hash() const {
  std::size_t h = monos_.size();
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    const Monomial& m = monos_[i];
    h = h * 31 + (std::size_t(m.e[0]) << 32 | std::size_t(m.e[1]) << 16 | m.e[2]);
  }
  for (const Integer& c : coef_) h = h * 1000003u ^ mpz_get_ui(c.get_mpz_t());
  return h;
}

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    const FieldElement c = coefficient(i);
    const bool constant = monos_[i].degree() == 0;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.to_rational();
      negative = r < 0;
      if (negative) r = -r;
      if (r != 1 || constant) body = arith::to_string(r);
    } else {
      body = c.to_string();
    }
    if (!constant) body += (body.empty() ? "" : "*") + monos_[i].to_string();
    if (i == 0) {
      out += (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

MPoly x(const NumberField& field) { return MPoly::variable(field, 0); }
MPoly y(const NumberField& field) { return MPoly::variable(field, 1); }
MPoly z(const NumberField& field) { return MPoly::variable(field, 2); }

}  // namespace invcurve::poly
