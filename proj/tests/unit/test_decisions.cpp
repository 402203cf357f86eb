#include <gtest/gtest.h>

#include <numeric>

#include "invcurve/decisions/decisions.hpp"
#include "invcurve/error.hpp"
#include "invcurve/groups/groups.hpp"

using namespace invcurve;
using namespace invcurve::decisions;

namespace {

constexpr GroupId kGroups[] = {GroupId::V, GroupId::I, GroupId::K};

bool in_semigroup(GroupId g, unsigned d) {
  const auto& p = groups::degree_profile(g);
  for (unsigned k = 0; k * p.c <= d; ++k)
    if (representable(d - k * p.c, p.a, p.b)) return true;
  return false;
}

}  // namespace

TEST(Basis, LowDegreeLinearSystems) {
  EXPECT_EQ(basis(GroupId::V, 18).solutions, (std::vector<Exponents>{{3, 0, 0}, {1, 1, 0}}));
  EXPECT_EQ(basis(GroupId::V, 24).solutions, (std::vector<Exponents>{{4, 0, 0}, {2, 1, 0}, {0, 2, 0}}));
  EXPECT_EQ(basis(GroupId::K, 12).solutions, (std::vector<Exponents>{{3, 0, 0}, {0, 2, 0}}));
  EXPECT_TRUE(basis(GroupId::K, 2).solutions.empty());
  EXPECT_EQ(basis(GroupId::I, 14).solutions,
            (std::vector<Exponents>{{7, 0, 0}, {4, 1, 0}, {2, 0, 1}, {1, 2, 0}}));
}

TEST(Basis, ExhaustiveAndDuplicateFree) {
  for (GroupId g : kGroups) {
    const auto& p = groups::degree_profile(g);
    for (unsigned d = 0; d <= 120; ++d) {
      const auto b = basis(g, d);
      std::size_t brute = 0;
      for (unsigned i = 0; i * p.a <= d; ++i)
        for (unsigned j = 0; i * p.a + j * p.b <= d; ++j)
          if ((d - i * p.a - j * p.b) % p.c == 0) ++brute;
      EXPECT_EQ(b.solutions.size(), brute);
      for (const auto& e : b.solutions) EXPECT_EQ(e[0] * p.a + e[1] * p.b + e[2] * p.c, d);
      for (std::size_t k = 1; k < b.solutions.size(); ++k) EXPECT_NE(b.solutions[k - 1], b.solutions[k]);
      EXPECT_EQ(!b.solutions.empty(), in_semigroup(g, d)) << d;
    }
  }
}

TEST(Representable, TwoGenerators) {
  EXPECT_FALSE(representable(10, 6, 14));
  EXPECT_TRUE(representable(48, 12, 30));
  EXPECT_TRUE(representable(0, 6, 14));
  EXPECT_FALSE(representable(16, 6, 14));
  EXPECT_TRUE(representable(20, 6, 14));
  EXPECT_THROW(representable(3, 0, 2), Error);
  // Beyond the Frobenius number (p-1)(q-1)-1 of coprime generators everything is representable.
  for (unsigned d = 24; d < 200; ++d) EXPECT_TRUE(representable(d, 5, 7));
  EXPECT_FALSE(representable(23, 5, 7));
}

TEST(Nonsingular, PaperCases) {
  const auto v24 = decide_nonsingular(GroupId::V, 24);
  EXPECT_FALSE(v24.exists);
  EXPECT_EQ(v24.low_degree_case, LowDegreeCase::Reducible);
  EXPECT_EQ(decide_nonsingular(GroupId::V, 18).low_degree_case, LowDegreeCase::DivisibleByF);
  EXPECT_TRUE(decide_nonsingular(GroupId::K, 18).exists);
  const auto i14 = decide_nonsingular(GroupId::I, 14);
  EXPECT_FALSE(i14.exists);
  EXPECT_EQ(i14.failed_conditions, (std::vector<int>{1, 4}));
  EXPECT_EQ(decide_nonsingular(GroupId::I, 4).low_degree_case, LowDegreeCase::Nonreduced);
  EXPECT_EQ(decide_nonsingular(GroupId::I, 8).low_degree_case, LowDegreeCase::DivisibleByF);
  EXPECT_EQ(decide_nonsingular(GroupId::K, 2).low_degree_case, LowDegreeCase::Empty);
  EXPECT_EQ(decide_nonsingular(GroupId::K, 8).low_degree_case, LowDegreeCase::Nonreduced);
  EXPECT_EQ(decide_nonsingular(GroupId::K, 10).low_degree_case, LowDegreeCase::DivisibleByF);
  EXPECT_EQ(decide_nonsingular(GroupId::K, 12).low_degree_case, LowDegreeCase::SingularAtBaseLocus);
  EXPECT_EQ(decide_nonsingular(GroupId::K, 6).low_degree_case, LowDegreeCase::FundamentalInvariant);
  EXPECT_EQ(decide_nonsingular(GroupId::V, 48).failed_conditions, (std::vector<int>{4}));
  EXPECT_THROW(decide_nonsingular(GroupId::V, 0), Error);
}

TEST(Nonsingular, ClosedForms) {
  EXPECT_TRUE(closed_form_nonsingular(GroupId::V, 36));
  EXPECT_TRUE(closed_form_nonsingular(GroupId::I, 26));
  EXPECT_FALSE(closed_form_nonsingular(GroupId::K, 8));
  EXPECT_FALSE(closed_form_nonsingular(GroupId::V, 48));
}

TEST(Nonsingular, SweepAgreesWithClosedForm) {
  for (GroupId g : kGroups)
    for (unsigned d = 1; d <= 420; ++d) {
      const auto dec = decide_nonsingular(g, d);
      EXPECT_EQ(dec.exists, closed_form_nonsingular(g, d)) << groups::group_name(g) << " " << d;
      if (d >= groups::degree_profile(g).c) EXPECT_EQ(dec.exists, dec.failed_conditions.empty());
      if (!dec.exists && d % 2 == 1) EXPECT_FALSE(dec.exists);
    }
}

TEST(Nonsingular, ConditionsAtDegreeC) {
  for (GroupId g : kGroups) {
    const auto failed = failed_conditions(g, groups::degree_profile(g).c);
    for (int c : failed) EXPECT_GT(c, 3) << groups::group_name(g);
    EXPECT_TRUE(decide_nonsingular(g, groups::degree_profile(g).c).exists);
  }
}

TEST(Nonsingular, ConditionsReduceToRepresentabilityAndResidues) {
  for (GroupId g : kGroups) {
    const auto& p = groups::degree_profile(g);
    const unsigned deg[3] = {p.a, p.b, p.c};
    for (unsigned d = 1; d <= 200; ++d) {
      const auto failed = failed_conditions(g, d);
      auto has = [&](int c) { return std::find(failed.begin(), failed.end(), c) != failed.end(); };
      for (int l = 0; l < 3; ++l) EXPECT_EQ(has(l + 1), !representable(d, deg[(l + 1) % 3], deg[(l + 2) % 3]));
      for (int l = 0; l < 3; ++l) {
        const unsigned mod = deg[l], m = deg[(l + 1) % 3] % mod, n = deg[(l + 2) % 3] % mod;
        const bool ok = d % mod == 0 || d % mod == m || d % mod == n;
        EXPECT_EQ(has(6 - l), !ok);
      }
    }
  }
}
