#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "invcurve/error.hpp"
#include "invcurve/ideals/ideals.hpp"
#include "invcurve/ideals/modular.hpp"
#include "invcurve/invariants/invariants.hpp"
#include "invcurve/kernels/modular.hpp"

using namespace invcurve;
using namespace invcurve::ideals;
using arith::FieldElement;
using arith::NumberField;
using poly::x;
using poly::y;
using poly::z;
using poly::monomial_count;

namespace {

const NumberField& Q = NumberField::rationals();

Options groebner_only() {
  Options o;
  o.modular = false;
  return o;
}

bool reduces_to_zero(const MPoly& f, const std::vector<MPoly>& basis) { return normal_form(f, basis).is_zero(); }

}  // namespace

TEST(Groebner, CoordinateIdeal) {
  const auto gb = buchberger({x(Q), y(Q), z(Q)});
  ASSERT_TRUE(gb.complete);
  EXPECT_EQ(gb.basis.size(), 3u);
  EXPECT_EQ(only_trivial_zero({x(Q), y(Q), z(Q)}, groebner_only()).verdict, Verdict::True);
  EXPECT_EQ(only_trivial_zero({x(Q), y(Q), z(Q)}).method, "macaulay");
}

TEST(Groebner, LineThroughPoint) {
  const MPoly a = x(Q) * x(Q) - y(Q) * y(Q);
  const MPoly b = x(Q) + y(Q);
  const auto gb = buchberger({a, b});
  ASSERT_TRUE(gb.complete);
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], b);
  EXPECT_EQ(only_trivial_zero({a, b}).verdict, Verdict::False);
  EXPECT_EQ(only_trivial_zero({x(Q), y(Q)}).verdict, Verdict::False);
}

TEST(Groebner, UnitAndZeroIdeals) {
  const MPoly one(FieldElement(Q, 1L));
  EXPECT_EQ(only_trivial_zero({x(Q), one}).verdict, Verdict::True);
  EXPECT_EQ(only_trivial_zero({MPoly(Q)}).verdict, Verdict::False);
  EXPECT_THROW(only_trivial_zero({x(Q) + one}), Error);
}

TEST(Groebner, BasisContainsAndReducesGenerators) {
  const auto& k = inv::cached(groups::GroupId::K, inv::Coords::Standard);
  const std::vector<MPoly> gens{k.F, k.Phi};
  const auto gb = buchberger(gens);
  ASSERT_TRUE(gb.complete);
  for (const auto& g : gens) EXPECT_TRUE(reduces_to_zero(g, gb.basis));
  for (const auto& g : gb.basis) EXPECT_TRUE(g.leading_coefficient().is_one());
  // Reduced: no leading monomial divides any term of another element.
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = 0; j < gb.basis.size(); ++j)
      if (i != j)
        for (const auto& m : gb.basis[j].monomials()) EXPECT_FALSE(gb.basis[i].leading_monomial().divides(m));
  EXPECT_EQ(gb.basis.size(), 4u);
}

TEST(Groebner, OrderStability) {
  const MPoly f = x(Q).pow(3) * y(Q) + y(Q).pow(3) * z(Q) + z(Q).pow(3) * x(Q);
  std::vector<MPoly> gens{f.partial(0), f.partial(1), f.partial(2), f};
  const auto reference = buchberger(gens).basis;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    std::vector<MPoly> scaled;
    for (const auto& g : gens) scaled.push_back(g.scaled(FieldElement(Q, long(trial + 2))));
    EXPECT_EQ(buchberger(scaled).basis, reference);
  }
}

TEST(Groebner, BudgetYieldsInconclusive) {
  const auto& k = inv::cached(groups::GroupId::K, inv::Coords::Standard);
  Options o = groebner_only();
  o.budget = 1;
  const auto r = only_trivial_zero({k.F, k.Phi, k.Psi}, o);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(buchberger({k.F, k.Phi, k.Psi}, 1).complete);
}

TEST(Checks, Singularities) {
  EXPECT_EQ(nonsingular_check(x(Q) * x(Q) * y(Q)).verdict, Verdict::False);
  EXPECT_EQ(nonsingular_check(x(Q).pow(3) + y(Q).pow(3) + z(Q).pow(3)).verdict, Verdict::True);
  const MPoly node = y(Q) * y(Q) * z(Q) - x(Q).pow(3) - x(Q) * x(Q) * z(Q);
  EXPECT_EQ(nonsingular_check(node).verdict, Verdict::False);
  EXPECT_EQ(nonsingular_check(node, groebner_only()).verdict, Verdict::False);
}

TEST(Checks, Transversality) {
  EXPECT_EQ(transversal_check(x(Q), y(Q)).verdict, Verdict::True);
  const MPoly yz = y(Q) * z(Q);
  EXPECT_EQ(transversal_check(yz, yz - x(Q) * x(Q)).verdict, Verdict::False);
  // A conic and a tangent line.
  EXPECT_EQ(transversal_check(x(Q) * z(Q) - y(Q) * y(Q), x(Q)).verdict, Verdict::False);
  EXPECT_EQ(transversal_check(x(Q) * z(Q) - y(Q) * y(Q), y(Q)).verdict, Verdict::True);
}

TEST(Checks, KleinTripleHasNoCommonZero) {
  const auto& k = inv::cached(groups::GroupId::K, inv::Coords::Standard);
  const auto modular = only_trivial_zero({k.F, k.Phi, k.Psi});
  EXPECT_EQ(modular.verdict, Verdict::True);
  EXPECT_EQ(modular.method, "macaulay");
  const auto exact = only_trivial_zero({k.F, k.Phi, k.Psi}, groebner_only());
  EXPECT_EQ(exact.verdict, Verdict::True);
  EXPECT_EQ(exact.method, "groebner");
  EXPECT_EQ(only_trivial_zero({k.F, k.Phi}).verdict, Verdict::False);
  EXPECT_EQ(nonsingular_check(k.F).verdict, Verdict::True);
}

TEST(Modular, ReductionIsMultiplicative) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-50, 50);
  for (const NumberField* f : {&Q, &NumberField::cyclotomic15(), &NumberField::cyclotomic7(),
                               &NumberField::wiman_eta()}) {
    const Reduction red = Reduction::for_field(*f);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<arith::Rational> a(f->degree()), b(f->degree());
      for (auto& v : a) v = arith::Rational(num(rng), 1 + std::abs(num(rng)));
      for (auto& v : b) v = arith::Rational(num(rng), 1 + std::abs(num(rng)));
      const auto ea = FieldElement::from_coords(*f, a), eb = FieldElement::from_coords(*f, b);
      const auto ma = red.map(ea), mb = red.map(eb), mab = red.map(ea * eb), sum = red.map(ea + eb);
      ASSERT_TRUE(ma && mb && mab && sum);
      EXPECT_EQ(*mab, kernels::mul_mod(*ma, *mb, red.prime()));
      EXPECT_EQ(*sum, kernels::add_mod(*ma, *mb, red.prime()));
    }
  }
  EXPECT_NE(Reduction::for_field(Q, 0).prime(), Reduction::for_field(Q, 1).prime());
  EXPECT_EQ((Reduction::for_field(NumberField::cyclotomic15()).prime() - 1) % 15, 0u);
}

TEST(Modular, BruteForceAgreesWithCertificate) {
  // Klein's quartic has bad reduction only at 7.
  const auto& k = inv::cached(groups::GroupId::K, inv::Coords::Standard);
  auto reduce = [](const std::vector<MPoly>& gens, std::uint32_t p) {
    const Reduction red(Q, p, 0);
    std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> out;
    for (const auto& g : gens) out.push_back(*red.map(g.to_field(Q)));
    return out;
  };
  EXPECT_TRUE(projective_zeros_mod_p(reduce(gradient_ideal(k.F), 29), 29).empty());
  EXPECT_FALSE(projective_zeros_mod_p(reduce(gradient_ideal(k.F), 7), 7).empty());
  EXPECT_FALSE(projective_zeros_mod_p(reduce({k.F, k.Phi}, 29), 29).empty());
  EXPECT_TRUE(projective_zeros_mod_p(reduce({k.F, k.Phi, k.Psi}, 29), 29).empty());
}

TEST(Modular, MacaulayRankBelowRegularity) {
  const Reduction red = Reduction::for_field(Q);
  const MPoly f = x(Q).pow(3) + y(Q).pow(3) + z(Q).pow(3);
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> g;
  for (const auto& d : gradient_ideal(f)) g.push_back(*red.map(d));
  EXPECT_EQ(macaulay_rank(g, {2, 2, 2}, 4, red.prime()).rank, monomial_count(4));
  EXPECT_LT(macaulay_rank(g, {2, 2, 2}, 3, red.prime()).rank, monomial_count(3));
}
