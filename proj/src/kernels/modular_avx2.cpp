// Compiled with -mavx2 on x86; only reached through runtime dispatch.
#include "invcurve/kernels/modular.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace invcurve::kernels::avx2 {

namespace {

// Shoup multiplication: with cs = floor(c * 2^32 / p), x*c - hi32(x*cs)*p lies in [0, 2p).
inline __m256i mul_shoup(__m256i x, __m256i c, __m256i cs, __m256i p) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, cs), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), _mm256_srli_epi64(cs, 32));
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline std::uint32_t shoup_constant(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_constant(c, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = _mm256_add_epi32(d, mul_shoup(s, vc, vcs, vp));
    d = _mm256_min_epu32(d, _mm256_sub_epi32(d, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  scalar::axpy_mod(dst + i, src + i, n - i, c, p);
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_constant(c, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), mul_shoup(x, vc, vcs, vp));
  }
  scalar::scale_mod(v + i, n - i, c, p);
}

}  // namespace invcurve::kernels::avx2

#else

namespace invcurve::kernels::avx2 {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
  scalar::axpy_mod(dst, src, n, c, p);
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  scalar::scale_mod(v, n, c, p);
}

}  // namespace invcurve::kernels::avx2

#endif
