#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Word-size arithmetic modulo a prime p < 2^30, plus the dense row kernels used by
// Macaulay-matrix rank computations. Every vector kernel has a portable scalar
// reference and an AVX2 variant; the variant is picked once at runtime.

namespace invcurve::kernels {

inline constexpr std::uint32_t kMaxModulus = 1u << 30;

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
// Throws Error for a = 0 mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t n);
// Some element of exact multiplicative order n; requires n | p - 1.
std::uint32_t root_of_unity(std::uint32_t n, std::uint32_t p);
// A square root of a modulo p, or false when a is a non-residue.
bool sqrt_mod(std::uint32_t a, std::uint32_t p, std::uint32_t& root);

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
// Best supported ISA on this CPU.
Isa detect_isa();
Isa active_isa();
// Pins dispatch to a given ISA (tests, benchmarks). Throws Error if unsupported.
void force_isa(Isa isa);

// dst[i] = (dst[i] + c * src[i]) mod p. Inputs must already lie in [0, p).
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p);
// v[i] = c * v[i] mod p.
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

// Dense row-major matrix over F_p.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// Rank by Gaussian elimination; destroys the matrix. Stops early once the rank
// reaches min(rows, cols).
std::size_t rank_mod(ModMatrix& m, std::uint32_t p);

}  // namespace invcurve::kernels
