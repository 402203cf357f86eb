#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "invcurve/kernels/modular.hpp"

using namespace invcurve::kernels;

namespace {

constexpr std::uint32_t kPrimes[] = {3, 65537, 998244353, 1073741789u};

std::vector<std::uint32_t> random_vector(std::size_t n, std::uint32_t p, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

class IsaGuard {
 public:
  IsaGuard() : saved_(active_isa()) {}
  ~IsaGuard() { force_isa(saved_); }

 private:
  Isa saved_;
};

}  // namespace

TEST(Modular, ScalarHelpers) {
  EXPECT_EQ(pow_mod(3, 4, 7), 4u);
  EXPECT_EQ(mul_mod(inv_mod(5, 1000003), 5, 1000003), 1u);
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1000001));
  const std::uint32_t p = 211;  // 105 | 210
  std::uint32_t w = root_of_unity(15, p);
  EXPECT_EQ(pow_mod(w, 15, p), 1u);
  EXPECT_NE(pow_mod(w, 5, p), 1u);
  EXPECT_NE(pow_mod(w, 3, p), 1u);
  std::uint32_t r = 0;
  ASSERT_TRUE(sqrt_mod(p - 135 % p, p, r));
  EXPECT_EQ(mul_mod(r, r, p), p - 135 % p);
}

TEST(Modular, SqrtNonResidue) {
  std::uint32_t r = 0;
  EXPECT_FALSE(sqrt_mod(3, 7, r));
  for (std::uint32_t p : {7u, 13u, 17u, 41u, 1073741789u}) {
    if (!is_prime(p)) continue;
    for (std::uint32_t a = 1; a < 50; ++a) {
      if (sqrt_mod(a, p, r)) EXPECT_EQ(mul_mod(r, r, p), a % p) << a << " mod " << p;
    }
  }
}

// Every SIMD kernel must agree bit for bit with the scalar reference, including
// ragged tails and boundary values.
TEST(Kernels, Avx2MatchesScalar) {
  if (!isa_supported(Isa::Avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  std::mt19937 rng(7);
  for (std::uint32_t p : kPrimes) {
    if (!is_prime(p)) continue;
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
      auto src = random_vector(n, p, rng);
      auto dst = random_vector(n, p, rng);
      if (n > 2) {
        src[0] = p - 1;
        dst[0] = p - 1;
        src[1] = 0;
      }
      for (std::uint32_t c : {0u, 1u, p - 1, p / 2, static_cast<std::uint32_t>(rng() % p)}) {
        auto a = dst, b = dst;
        scalar::axpy_mod(a.data(), src.data(), n, c, p);
        avx2::axpy_mod(b.data(), src.data(), n, c, p);
        EXPECT_EQ(a, b) << "axpy p=" << p << " n=" << n << " c=" << c;
        auto s = src, t = src;
        scalar::scale_mod(s.data(), n, c, p);
        avx2::scale_mod(t.data(), n, c, p);
        EXPECT_EQ(s, t) << "scale p=" << p << " n=" << n << " c=" << c;
      }
    }
  }
}

TEST(Kernels, DispatchFollowsForcedIsa) {
  IsaGuard guard;
  force_isa(Isa::Scalar);
  EXPECT_EQ(active_isa(), Isa::Scalar);
  std::vector<std::uint32_t> v = {1, 2, 3};
  scale_mod(v.data(), v.size(), 2, 5);
  EXPECT_EQ(v, (std::vector<std::uint32_t>{2, 4, 1}));
  EXPECT_STREQ(isa_name(Isa::Avx2), "avx2");
  EXPECT_EQ(detect_isa() == Isa::Avx2, isa_supported(Isa::Avx2));
}

TEST(Kernels, RankAgreesAcrossIsas) {
  IsaGuard guard;
  std::mt19937 rng(11);
  const std::uint32_t p = 1073741789u;
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t rows = 40 + trial * 7, cols = 37 + trial * 5, true_rank = 20 + trial;
    // Product of random rows x true_rank and true_rank x cols matrices.
    auto a = random_vector(rows * true_rank, p, rng);
    auto b = random_vector(true_rank * cols, p, rng);
    ModMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < true_rank; ++k) {
        for (std::size_t j = 0; j < cols; ++j) {
          m.at(i, j) = add_mod(m.at(i, j), mul_mod(a[i * true_rank + k], b[k * cols + j], p), p);
        }
      }
    }
    for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
      if (!isa_supported(isa)) continue;
      force_isa(isa);
      ModMatrix copy = m;
      EXPECT_EQ(rank_mod(copy, p), true_rank) << isa_name(isa);
    }
  }
}

TEST(Kernels, RankOfIdentityAndZero) {
  ModMatrix id(5, 5), zero(3, 4);
  for (std::size_t i = 0; i < 5; ++i) id.at(i, i) = 1;
  EXPECT_EQ(rank_mod(id, 101), 5u);
  EXPECT_EQ(rank_mod(zero, 101), 0u);
}
