#include <gtest/gtest.h>

#include <algorithm>

#include "invcurve/decisions/decisions.hpp"
#include "invcurve/error.hpp"
#include "invcurve/singularity/singularity.hpp"

using namespace invcurve;
using namespace invcurve::singularity;

namespace {

constexpr GroupId kGroups[] = {GroupId::V, GroupId::I, GroupId::K};

bool has_line(const IrreducibilityCertificate& c, const std::string& needle) {
  const auto lines = c.lines();
  return std::any_of(lines.begin(), lines.end(), [&](const std::string& l) { return l.find(needle) != l.npos; });
}

bool integral_closed_form(GroupId g, unsigned d) {
  switch (g) {
    case GroupId::V: return d % 6 == 0 && d != 18 && d != 24;
    case GroupId::I: return d % 2 == 0 && d != 4 && d != 8 && d != 14;
    case GroupId::K: return d % 2 == 0 && d != 2 && d != 8 && d != 10 && d != 16 && d != 22;
  }
  return false;
}

}  // namespace

TEST(IndexSet, Membership) {
  const auto k12 = index_set(GroupId::K, 12);
  EXPECT_EQ(k12.pairs, (std::vector<std::pair<unsigned, unsigned>>{{0, 2}, {3, 0}}));
  EXPECT_TRUE(index_set(GroupId::V, 48).contains(1, 1));
  EXPECT_TRUE(index_set(GroupId::K, 2).pairs.empty());
}

TEST(Classify, TableRows) {
  struct Row {
    GroupId g;
    unsigned first;
    unsigned period;
    SingularityType type;
  };
  const Row rows[] = {
      {GroupId::V, 48, 30, SingularityType::A1Node},    {GroupId::V, 54, 30, SingularityType::A3Tacnode},
      {GroupId::I, 24, 10, SingularityType::A3Tacnode}, {GroupId::I, 18, 10, SingularityType::A1Node},
      {GroupId::K, 30, 14, SingularityType::D5Family},  {GroupId::K, 36, 14, SingularityType::A5},
      {GroupId::K, 24, 14, SingularityType::A1Node},    {GroupId::K, 12, 14, SingularityType::A2Cusp},
  };
  for (const auto& r : rows) {
    for (unsigned n = 0; n < 3; ++n) {
      const unsigned d = r.first + n * r.period;
      EXPECT_EQ(classify(r.g, d), r.type) << groups::group_name(r.g) << " " << d;
    }
    // One period below the floor is outside the table.
    if (r.first > r.period) EXPECT_EQ(classify(r.g, r.first - r.period), SingularityType::Undefined);
  }
}

TEST(Classify, ConsistentWithDecisions) {
  for (GroupId g : kGroups)
    for (unsigned d = 1; d <= 420; ++d)
      EXPECT_EQ(classify(g, d) == SingularityType::Nonsingular, decisions::closed_form_nonsingular(g, d));
}

TEST(Classify, TacnodeExponentBound) {
  // For V, d = 24 mod 30: every (i, j) has i + 2j = 4 mod 5.
  for (unsigned d = 54; d <= 420; d += 30)
    for (auto [i, j] : index_set(GroupId::V, d).pairs) {
      EXPECT_EQ((i + 2 * j) % 5, 4u);
      EXPECT_GE(i + 2 * j, 4u);
    }
}

TEST(Certificate, PrintedContradictions) {
  EXPECT_TRUE(has_line(certify_irreducible(GroupId::V, 48), "46 ≤ 25"));
  EXPECT_TRUE(has_line(certify_irreducible(GroupId::I, 24), "22 ≤ 1"));
  EXPECT_TRUE(has_line(certify_irreducible(GroupId::K, 36), "33 ≤ 4"));
  EXPECT_TRUE(has_line(certify_irreducible(GroupId::V, 54), "51 ≤ 40"));
  EXPECT_TRUE(has_line(certify_irreducible(GroupId::V, 48), "1·47 ≠ 72"));
}

TEST(Certificate, CoversEveryCandidate) {
  for (auto [g, d] : {std::pair{GroupId::V, 48u}, {GroupId::V, 54u}, {GroupId::I, 24u}, {GroupId::K, 30u},
                      {GroupId::K, 36u}, {GroupId::K, 50u}, {GroupId::K, 24u}}) {
    const auto c = certify_irreducible(g, d);
    ASSERT_TRUE(c.irreducible) << groups::group_name(g) << " " << d;
    ASSERT_EQ(c.candidates.size(), d / 2);
    for (unsigned k = 0; k < c.candidates.size(); ++k) {
      EXPECT_EQ(c.candidates[k].d1, k + 1);
      EXPECT_TRUE(c.candidates[k].refuted);
    }
    const auto& p = groups::degree_profile(g);
    EXPECT_EQ(c.bound, c.m * p.a * p.b);
    EXPECT_EQ(intersection_multiplicity(c.type), c.m);
  }
}

TEST(Certificate, CuspAndOutOfScope) {
  const auto k12 = certify_irreducible(GroupId::K, 12);
  EXPECT_TRUE(k12.irreducible);
  EXPECT_EQ(k12.summary, "cusps have one branch, curve irreducible");
  EXPECT_FALSE(certify_irreducible(GroupId::V, 18).irreducible);
  EXPECT_FALSE(certify_irreducible(GroupId::V, 36).irreducible);
}

TEST(Certificate, D5ParityObstruction) {
  const auto c = certify_irreducible(GroupId::K, 44);
  ASSERT_TRUE(c.irreducible);
  EXPECT_TRUE(has_line(c, "d1·(d - d1) = 43 is not a multiple of m = 2"));
}

TEST(Integral, PaperExamples) {
  EXPECT_FALSE(decide_integral(GroupId::V, 18));
  EXPECT_TRUE(decide_integral(GroupId::K, 12));
  EXPECT_FALSE(decide_integral(GroupId::I, 4));
  EXPECT_TRUE(decide_integral(GroupId::K, 36));
  EXPECT_FALSE(decide_integral(GroupId::K, 10));
  EXPECT_THROW(decide_integral(GroupId::K, 0), Error);
}

TEST(Integral, SweepAgreesWithClosedForm) {
  for (GroupId g : kGroups)
    for (unsigned d = 1; d <= 420; ++d)
      EXPECT_EQ(decide_integral(g, d), integral_closed_form(g, d)) << groups::group_name(g) << " " << d;
}
