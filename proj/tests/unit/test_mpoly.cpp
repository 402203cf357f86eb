#include <gtest/gtest.h>

#include <random>

#include "invcurve/arith/constants.hpp"
#include "invcurve/error.hpp"
#include "invcurve/io/json.hpp"
#include "invcurve/mpoly/poly_matrix.hpp"

using namespace invcurve;
using namespace invcurve::arith;
using namespace invcurve::poly;

namespace {

const NumberField& Q = NumberField::rationals();

MPoly klein_quartic(const NumberField& f) {
  return x(f).pow(3) * y(f) + y(f).pow(3) * z(f) + z(f).pow(3) * x(f);
}

MPoly wiman_sextic() {
  return MPoly::from_integers(Q, {{{3, 3, 0}, 10}, {{5, 0, 1}, 9}, {{0, 5, 1}, 9},
                                  {{2, 2, 2}, -45}, {{1, 1, 4}, -135}, {{0, 0, 6}, 27}});
}

FieldElement random_element(const NumberField& field, std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<long> num(-range, range);
  std::vector<Rational> c(field.degree());
  for (auto& v : c) v = Rational(num(rng));
  c[0] = Rational(num(rng), 1 + rng() % 3);
  c[0].canonicalize();
  return FieldElement::from_coords(field, c);
}

MPoly random_form(const NumberField& field, unsigned degree, std::mt19937& rng) {
  std::vector<std::pair<Monomial, FieldElement>> terms;
  for (const Monomial& m : monomials_of_degree(degree)) {
    if (rng() % 3 == 0) terms.emplace_back(m, random_element(field, rng));
  }
  terms.emplace_back(Monomial(degree, 0, 0), FieldElement(field, 1L));
  return MPoly::from_terms(field, terms);
}

Matrix3 random_matrix(const NumberField& field, std::mt19937& rng) {
  std::vector<FieldElement> e;
  for (int i = 0; i < 9; ++i) e.push_back(random_element(field, rng, 2));
  return Matrix3(field, e);
}

Matrix3 cyclic_t(const NumberField& f) {
  std::vector<FieldElement> e(9, FieldElement(f));
  e[2] = e[3] = e[7] = FieldElement(f, 1L);
  return Matrix3(f, e);
}

}  // namespace

TEST(Monomial, GrevlexOrder) {
  EXPECT_TRUE(grevlex(Monomial(1, 0, 0), Monomial(0, 1, 0)) > 0);
  EXPECT_TRUE(grevlex(Monomial(0, 1, 0), Monomial(0, 0, 1)) > 0);
  EXPECT_TRUE(grevlex(Monomial(0, 2, 0), Monomial(1, 0, 1)) > 0);  // xz < y^2 in grevlex
  EXPECT_TRUE(grevlex(Monomial(0, 0, 2), Monomial(1, 0, 0)) > 0);
  auto ms = monomials_of_degree(4);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    EXPECT_EQ(grevlex_index(ms[i]), i);
    if (i) EXPECT_TRUE(grevlex(ms[i - 1], ms[i]) > 0);
  }
}

TEST(MPoly, PartialDerivative) {
  MPoly f = x(Q).pow(3) * y(Q);
  EXPECT_EQ(f.partial(0), MPoly::from_integers(Q, {{{2, 1, 0}, 3}}));
  EXPECT_TRUE(f.partial(2).is_zero());
}

TEST(MPoly, EulerIdentity) {
  for (const NumberField* field : {&Q, &NumberField::cyclotomic7()}) {
    MPoly f = klein_quartic(*field);
    MPoly euler = x(*field) * f.partial(0) + y(*field) * f.partial(1) + z(*field) * f.partial(2);
    EXPECT_EQ(euler, f.scaled(FieldElement(*field, 4L)));
  }
}

TEST(MPoly, WimanSexticDerivative) {
  MPoly w = wiman_sextic();
  EXPECT_EQ(w.coefficient(Monomial(0, 0, 6)).to_rational(), 27);
  FieldElement v = w.partial(2).evaluate({FieldElement(Q, 0L), FieldElement(Q, 0L), FieldElement(Q, 1L)});
  EXPECT_EQ(v.to_rational(), 162);
}

TEST(MPoly, HessianOfQuadric) {
  MPoly f = x(Q).pow(2) + y(Q).pow(2) + z(Q).pow(2);
  PolyMatrix h = hessian(f);
  EXPECT_TRUE(h.is_symmetric());
  EXPECT_EQ(det(h), MPoly(FieldElement(Q, 8L)));
}

TEST(MPoly, KleinHessian) {
  MPoly phi = det(hessian(klein_quartic(Q))).scaled(FieldElement(Q, Rational(-1, 54)));
  MPoly expected = MPoly::from_integers(Q, {{{1, 5, 0}, 1}, {{0, 1, 5}, 1}, {{5, 0, 1}, 1}, {{2, 2, 2}, -5}});
  EXPECT_EQ(phi, expected);
  EXPECT_EQ(phi.homogeneous_degree(), 6u);
}

TEST(MPoly, TextForm) {
  MPoly f = MPoly::from_integers(Q, {{{2, 1, 0}, 3}, {{0, 0, 3}, -1}, {{0, 0, 0}, 5}});
  EXPECT_EQ(f.to_string(), "3*x^2*y - z^3 + 5");
  EXPECT_EQ(MPoly(Q).to_string(), "0");
  const NumberField& k = NumberField::cyclotomic7();
  EXPECT_EQ(MPoly::term(Monomial(1, 0, 0), FieldElement::generator(k)).to_string(), "(zeta7)*x");
}

TEST(MPoly, JsonRoundTrip) {
  std::mt19937 rng(5);
  for (const NumberField* field : {&Q, &NumberField::cyclotomic15(), &NumberField::wiman_eta()}) {
    MPoly f = random_form(*field, 5, rng) + random_form(*field, 3, rng);
    io::Json j = io::to_json(f);
    EXPECT_EQ(j["field"], field->id());
    MPoly g = io::poly_from_json(io::Json::parse(j.dump()));
    EXPECT_EQ(f, g);
    FieldElement e = random_element(*field, rng);
    EXPECT_EQ(io::field_element_from_json(io::to_json(e)), e);
  }
  EXPECT_THROW(io::poly_from_json(io::Json::parse(R"({"field":"Q","terms":{"1,2":[["1","1"]]}})")), Error);
  EXPECT_THROW(io::poly_from_json(io::Json::parse(R"j({"field":"Q(i)","terms":{}})j")), Error);
}

TEST(MPoly, Homogeneity) {
  MPoly f = x(Q) * y(Q) + z(Q);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_FALSE(f.homogeneous_degree().has_value());
  EXPECT_THROW(f.degree_or_throw(), Error);
  EXPECT_EQ(f.total_degree(), 2);
}

TEST(MPoly, FieldMismatch) {
  EXPECT_THROW(x(Q) + x(NumberField::cyclotomic7()), FieldMismatch);
  MPoly g = klein_quartic(Q).to_field(NumberField::cyclotomic7());
  EXPECT_EQ(g.to_field(Q), klein_quartic(Q));
  MPoly h = MPoly::term(Monomial(1, 0, 0), FieldElement::generator(NumberField::cyclotomic7()));
  EXPECT_THROW(h.to_field(Q), Error);
}

TEST(Substitution, IdentityAndCyclicPermutation) {
  MPoly f = klein_quartic(Q);
  EXPECT_EQ(f.substitute(Matrix3::identity(Q)), f);
  // f^A(x) = f(A x); the first coordinate of T (x, y, z) is z.
  EXPECT_EQ(x(Q).substitute(cyclic_t(Q)), z(Q));
  EXPECT_EQ(f.substitute(cyclic_t(Q)), f);
}

TEST(Substitution, RightActionAndRingHomomorphism) {
  std::mt19937 rng(99);
  const NumberField& k = NumberField::cyclotomic7();
  for (int trial = 0; trial < 4; ++trial) {
    MPoly f = random_form(k, 3, rng);
    MPoly g = random_form(k, 2, rng);
    Matrix3 a = random_matrix(k, rng);
    Matrix3 b = random_matrix(k, rng);
    EXPECT_EQ(f.substitute(a).substitute(b), f.substitute(a * b));
    EXPECT_EQ((f + g).substitute(a), f.substitute(a) + g.substitute(a));
    EXPECT_EQ((f * g).substitute(a), f.substitute(a) * g.substitute(b * b.inverse() * a));
    // monomial fast path composed with the general path
    Matrix3 t = cyclic_t(k);
    EXPECT_EQ(f.substitute(t).substitute(a), f.substitute(t * a));
    EXPECT_EQ(f.substitute(a).substitute(t), f.substitute(a * t));
  }
}

TEST(Determinant, CofactorMatchesBareiss) {
  std::mt19937 rng(2024);
  for (const NumberField* field : {&Q, &NumberField::wiman_eta()}) {
    for (std::size_t n : {2u, 3u, 4u}) {
      PolyMatrix m(*field, n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_form(*field, 1 + (r + c) % 2, rng);
      }
      EXPECT_EQ(det(m), det_bareiss(m)) << field->id() << " n=" << n;
    }
  }
}

TEST(Determinant, BareissPivotsPastZeroEntry) {
  PolyMatrix m(Q, 2, 2);
  m(0, 1) = x(Q);
  m(1, 0) = y(Q);
  EXPECT_EQ(det_bareiss(m), -(x(Q) * y(Q)));
  EXPECT_EQ(det(m), det_bareiss(m));
}

TEST(Division, ExactAndInexact) {
  MPoly a = (x(Q) + y(Q)) * (x(Q) - y(Q) + z(Q));
  EXPECT_EQ(divide_exact(a, x(Q) + y(Q)), x(Q) - y(Q) + z(Q));
  EXPECT_THROW(divide_exact(a, x(Q) + z(Q)), Error);
}

TEST(Jacobian, BorderedAndJacobianShapes) {
  MPoly f = klein_quartic(Q);
  MPoly g = det(hessian(f));
  PolyMatrix b = bordered_hessian(f, g);
  EXPECT_TRUE(b.is_symmetric());
  EXPECT_TRUE(b(3, 3).is_zero());
  EXPECT_EQ(det(b).homogeneous_degree(), 14u);
  EXPECT_EQ(jacobian_det(x(Q), y(Q), z(Q)), MPoly(FieldElement(Q, 1L)));
}
