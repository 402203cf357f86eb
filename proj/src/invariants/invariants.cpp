#include "invcurve/invariants/invariants.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "invcurve/error.hpp"
#include "invcurve/mpoly/poly_matrix.hpp"

namespace invcurve::inv {

using arith::FieldElement;
using arith::Frame;
using arith::Matrix3;
using arith::NumberField;
using arith::Rational;
using poly::Monomial;

Coords parse_coords(std::string_view name) {
  if (name == "standard") return Coords::Standard;
  if (name == "wiman") return Coords::Wiman;
  throw Error("unknown coordinates '" + std::string(name) + "' (expected standard or wiman)");
}

const char* coords_name(Coords c) { return c == Coords::Standard ? "standard" : "wiman"; }

Frame frame_of(GroupId g, Coords c) {
  switch (g) {
    case GroupId::V:
      return c == Coords::Standard ? Frame::V : Frame::VWiman;
    case GroupId::I:
      return c == Coords::Standard ? Frame::I : Frame::IWiman;
    case GroupId::K:
      if (c == Coords::Wiman) throw Error("the Klein group has no Wiman frame");
      return Frame::K;
  }
  return Frame::V;
}

std::array<MPoly, 6> valentiner_conics() {
  const groups::GeneratorSet gens = groups::generators(GroupId::V);
  const NumberField& f = gens.field();
  const MPoly x = poly::x(f), y = poly::y(f), z = poly::z(f);

  std::array<MPoly, 6> out{MPoly(f), MPoly(f), MPoly(f), MPoly(f), MPoly(f), MPoly(f)};
  out[0] = x * x + y * y + z * z;
  out[1] = out[0].substitute(gens.by_name("Q").inverse());
  const Matrix3 p_inv = gens.by_name("P").inverse();
  Matrix3 power = Matrix3::identity(f);
  for (int k = 1; k <= 4; ++k) {
    power = power * p_inv;
    out[6 - k] = out[1].substitute(power);
  }
  return out;
}

std::array<MPoly, 6> printed_conics() {
  const NumberField& f = NumberField::cyclotomic15();
  const auto c = arith::embed_constants(Frame::V);
  const FieldElement& r = c.at("rho");
  const FieldElement& t = c.at("tau");
  auto lin = [&](long a, long b, long d, long e) {
    // a + b*rho + d*tau + e*rho*tau
    return FieldElement(f, a) + FieldElement(f, b) * r + FieldElement(f, d) * t + FieldElement(f, e) * r * t;
  };
  auto conic = [&](std::array<FieldElement, 6> cs) {
    // x^2, y^2, z^2, xy, yz, zx, all over 4
    const FieldElement quarter(f, Rational(1, 4));
    return MPoly::from_terms(f, {{Monomial(2, 0, 0), cs[0] * quarter}, {Monomial(0, 2, 0), cs[1] * quarter},
                                 {Monomial(0, 0, 2), cs[2] * quarter}, {Monomial(1, 1, 0), cs[3] * quarter},
                                 {Monomial(0, 1, 1), cs[4] * quarter}, {Monomial(1, 0, 1), cs[5] * quarter}});
  };
  const FieldElement a = lin(-1, -1, 1, 2), b = lin(1, 0, -2, -1), d = lin(0, 1, 1, -1);
  const MPoly x = poly::x(f), y = poly::y(f), z = poly::z(f);
  return {x * x + y * y + z * z,
          x * x + (y * y).scaled(r * r) + (z * z).scaled(r),
          conic({a, b, d, lin(-4, -2, 2, -1), lin(-2, 2, -2, -4), lin(2, 4, -4, -2)}),
          conic({b, d, a, lin(-2, 2, -2, -4), lin(2, 4, -4, -2), lin(-4, -2, 2, -2)}),
          conic({b, d, a, lin(-2, 2, -2, -4), lin(-2, -4, 4, 2), lin(4, 2, -2, 2)}),
          conic({a, b, d, lin(-4, -2, 2, -1), lin(2, -2, 2, 4), lin(-2, -4, 4, 2)})};
}

MPoly wiman_sextic(const NumberField& field) {
  return MPoly::from_integers(field, {{{3, 3, 0}, 10}, {{5, 0, 1}, 9}, {{0, 5, 1}, 9},
                                      {{2, 2, 2}, -45}, {{1, 1, 4}, -135}, {{0, 0, 6}, 27}});
}

namespace {

InvariantTriple complete(GroupId g, Coords coords, MPoly f, MPoly phi) {
  MPoly psi = poly::det(poly::bordered_hessian(f, phi));
  MPoly x = poly::jacobian_det(f, phi, psi);
  return InvariantTriple{g, coords, std::move(f), std::move(phi), std::move(psi), std::move(x)};
}

MPoly valentiner_sextic() {
  MPoly sum(NumberField::cyclotomic15());
  for (const MPoly& c : valentiner_conics()) sum += c * c * c;
  return sum;
}

}  // namespace

InvariantTriple build_valentiner() {
  MPoly f = valentiner_sextic();
  MPoly phi = poly::det(poly::hessian(f));
  return complete(GroupId::V, Coords::Standard, std::move(f), std::move(phi));
}

InvariantTriple build_wiman_valentiner() {
  MPoly w = wiman_sextic(NumberField::rationals());
  MPoly phi = poly::det(poly::hessian(w));
  return complete(GroupId::V, Coords::Wiman, std::move(w), std::move(phi));
}

InvariantTriple build_icosahedral(Coords coords) {
  if (coords == Coords::Standard) {
    const NumberField& f = NumberField::cyclotomic15();
    MPoly quadric = poly::x(f) * poly::x(f) + poly::y(f) * poly::y(f) + poly::z(f) * poly::z(f);
    return complete(GroupId::I, coords, std::move(quadric), valentiner_sextic());
  }
  const NumberField& f = NumberField::wiman_eta();
  const FieldElement eta = arith::embed_constants(Frame::IWiman).at("eta");
  MPoly quadric = poly::x(f) * poly::y(f) + (poly::z(f) * poly::z(f)).scaled(eta);
  return complete(GroupId::I, coords, std::move(quadric), wiman_sextic(f));
}

InvariantTriple build_klein() {
  const NumberField& f = NumberField::cyclotomic7();
  const MPoly x = poly::x(f), y = poly::y(f), z = poly::z(f);
  MPoly quartic = x.pow(3) * y + y.pow(3) * z + z.pow(3) * x;
  MPoly phi = poly::det(poly::hessian(quartic)).scaled(FieldElement(f, Rational(-1, 54)));
  MPoly psi = poly::det(poly::bordered_hessian(quartic, phi)).scaled(FieldElement(f, Rational(-1, 9)));
  MPoly chi = poly::jacobian_det(quartic, phi, psi);
  return InvariantTriple{GroupId::K, Coords::Standard, std::move(quartic), std::move(phi), std::move(psi), std::move(chi)};
}

InvariantTriple build(GroupId g, Coords coords) {
  switch (g) {
    case GroupId::V:
      return coords == Coords::Standard ? build_valentiner() : build_wiman_valentiner();
    case GroupId::I:
      return build_icosahedral(coords);
    case GroupId::K:
      if (coords == Coords::Wiman) throw Error("the Klein group has no Wiman frame");
      return build_klein();
  }
  throw Error("unknown group");
}

const InvariantTriple& cached(GroupId g, Coords coords) {
  static std::mutex mutex;
  static std::map<std::pair<GroupId, Coords>, std::unique_ptr<InvariantTriple>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{g, coords}];
  if (!slot) slot = std::make_unique<InvariantTriple>(build(g, coords));
  return *slot;
}

bool is_invariant(const MPoly& f, const std::vector<Matrix3>& matrices) {
  for (const Matrix3& a : matrices) {
    if (&a.field() != &f.field()) {
      if (!f.has_rational_coefficients() && f.field().degree() != 1) {
        throw FieldMismatch("polynomial over " + f.field().id() + ", matrix over " + a.field().id());
      }
      if (!(f.to_field(a.field()).substitute(a) == f.to_field(a.field()))) return false;
      continue;
    }
    if (!(f.substitute(a) == f)) return false;
  }
  return true;
}

std::optional<ConicImage> conic_image(const MPoly& conic, const Matrix3& a, const std::array<MPoly, 6>& conics) {
  const MPoly image = conic.substitute(a);
  const FieldElement rho = arith::embed_constants(Frame::V).at("rho");
  for (int j = 0; j < 6; ++j) {
    FieldElement scale(rho.field(), 1L);
    for (int k = 0; k < 3; ++k) {
      if (image == conics[j].scaled(scale)) return ConicImage{j, k};
      scale *= rho;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::array<unsigned, 3>> basis_triples(const groups::DegreeProfile& p, unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned k = 0; k * p.c <= d; ++k) {
    for (unsigned j = 0; k * p.c + j * p.b <= d; ++j) {
      const unsigned rest = d - k * p.c - j * p.b;
      if (rest % p.a == 0) out.push_back({rest / p.a, j, k});
    }
  }
  return out;
}

class PowerCache {
 public:
  explicit PowerCache(const MPoly& base) : powers_{MPoly(FieldElement(base.field(), 1L)), base} {}
  const MPoly& operator[](unsigned n) {
    while (powers_.size() <= n) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[n];
  }

 private:
  std::vector<MPoly> powers_;
};

std::vector<MPoly> basis_polys(const InvariantTriple& t, const std::vector<std::array<unsigned, 3>>& triples) {
  PowerCache f(t.F), phi(t.Phi), psi(t.Psi);
  std::vector<MPoly> out;
  for (const auto& [i, j, k] : triples) out.push_back(f[i] * phi[j] * psi[k]);
  return out;
}

}  // namespace

BasicExpression express_in_basic(const MPoly& f, const InvariantTriple& t) {
  BasicExpression out;
  const NumberField& field = t.field();
  if (&f.field() != &field) throw FieldMismatch("expression target over " + f.field().id());
  if (f.is_zero()) {
    out.status = BasicExpression::Status::Ok;
    return out;
  }
  auto d = f.homogeneous_degree();
  if (!d) {
    out.message = "polynomial is not homogeneous";
    return out;
  }
  out.degree = *d;
  out.basis = basis_triples(t.degrees(), *d);
  if (out.basis.empty()) {
    out.status = BasicExpression::Status::EmptyBasis;
    out.message = "degree " + std::to_string(*d) + " not representable";
    return out;
  }

  const std::vector<MPoly> polys = basis_polys(t, out.basis);
  const std::size_t n = polys.size();
  // Incremental row echelon form over the field, one monomial row at a time; stop
  // as soon as every unknown has a pivot, then verify the candidate exactly.
  std::vector<std::vector<FieldElement>> pivots;
  std::vector<std::size_t> pivot_col;
  std::vector<char> has_pivot(n, 0);
  for (const Monomial& m : poly::monomials_of_degree(*d)) {
    if (pivots.size() == n) break;
    std::vector<FieldElement> row;
    row.reserve(n + 1);
    bool nonzero = false;
    for (const MPoly& p : polys) {
      row.push_back(p.coefficient(m));
      nonzero = nonzero || !row.back().is_zero();
    }
    row.push_back(f.coefficient(m));
    if (!nonzero) {
      if (!row.back().is_zero()) break;  // inconsistent: caught by verification
      continue;
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::size_t c = pivot_col[r];
      if (row[c].is_zero()) continue;
      const FieldElement factor = row[c];
      for (std::size_t k = 0; k <= n; ++k) {
        if (!pivots[r][k].is_zero()) row[k] -= factor * pivots[r][k];
      }
    }
    std::size_t c = 0;
    while (c < n && row[c].is_zero()) ++c;
    if (c == n) continue;
    const FieldElement inv = row[c].inverse();
    for (FieldElement& v : row) v *= inv;
    // keep the echelon reduced so back substitution is a read-off
    for (auto& p : pivots) {
      if (p[c].is_zero()) continue;
      const FieldElement factor = p[c];
      for (std::size_t k = 0; k <= n; ++k) {
        if (!row[k].is_zero()) p[k] -= factor * row[k];
      }
    }
    pivots.push_back(std::move(row));
    pivot_col.push_back(c);
    has_pivot[c] = 1;
  }

  out.coefficients.assign(n, FieldElement(field));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.coefficients[pivot_col[r]] = pivots[r][n];

  MPoly combined(field);
  for (std::size_t l = 0; l < n; ++l) {
    if (!out.coefficients[l].is_zero()) combined += polys[l].scaled(out.coefficients[l]);
  }
  if (combined == f) {
    out.status = BasicExpression::Status::Ok;
  } else {
    out.status = BasicExpression::Status::NotExpressible;
    out.message = "not in the span of the degree-" + std::to_string(*d) + " basis";
    out.coefficients.clear();
  }
  return out;
}

MPoly recombine(const BasicExpression& e, const InvariantTriple& t) {
  const std::vector<MPoly> polys = basis_polys(t, e.basis);
  MPoly sum(t.field());
  for (std::size_t l = 0; l < polys.size() && l < e.coefficients.size(); ++l) {
    sum += polys[l].scaled(e.coefficients[l]);
  }
  return sum;
}

}  // namespace invcurve::inv
