#include "invcurve/kernels/modular.hpp"

#include <algorithm>
#include <atomic>

#include "invcurve/error.hpp"

namespace invcurve::kernels {

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw Error("no inverse of 0 modulo " + std::to_string(p));
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint32_t root_of_unity(std::uint32_t n, std::uint32_t p) {
  if (n == 0 || (p - 1) % n != 0) {
    throw Error(std::to_string(n) + " does not divide " + std::to_string(p) + " - 1");
  }
  const auto factors = prime_factors(n);
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t w = pow_mod(g, (p - 1) / n, p);
    bool exact = true;
    for (std::uint32_t q : factors) {
      if (pow_mod(w, n / q, p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return w;
  }
  throw Error("no root of unity found");
}

bool sqrt_mod(std::uint32_t a, std::uint32_t p, std::uint32_t& root) {
  a %= p;
  if (a == 0 || p == 2) {
    root = a;
    return true;
  }
  if (pow_mod(a, (p - 1) / 2, p) != 1) return false;
  // Tonelli-Shanks.
  std::uint32_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint32_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint32_t m = s;
  std::uint32_t c = pow_mod(z, q, p);
  std::uint32_t t = pow_mod(a, q, p);
  std::uint32_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint32_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  root = r;
  return true;
}

namespace scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
  }
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) v[i] = mul_mod(v[i], c, p);
}

}  // namespace scalar

namespace {

std::atomic<Isa> g_isa{detect_isa()};

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw Error(std::string("ISA not supported on this CPU: ") + isa_name(isa));
  g_isa.store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
  if (active_isa() == Isa::Avx2) {
    avx2::axpy_mod(dst, src, n, c, p);
  } else {
    scalar::axpy_mod(dst, src, n, c, p);
  }
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  if (active_isa() == Isa::Avx2) {
    avx2::scale_mod(v, n, c, p);
  } else {
    scalar::scale_mod(v, n, c, p);
  }
}

std::size_t rank_mod(ModMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t full = std::min(rows, cols);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < full; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap_ranges(m.row(pivot), m.row(pivot) + cols, m.row(rank));
    const std::size_t width = cols - col;
    std::uint32_t* prow = m.row(rank) + col;
    scale_mod(prow, width, inv_mod(prow[0], p), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = m.row(r) + col;
      if (row[0] != 0) axpy_mod(row, prow, width, p - row[0], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace invcurve::kernels
