#include <immintrin.h>

#include "taft/kernels.hpp"

namespace taft::kernels::avx2 {
namespace {

// Shoup multiplication: with w = floor(a * 2^32 / p), the quotient estimate
// hi32(x * w) is off by at most one, so x*a - q*p lies in [0, 2p).
inline __m256i mulmod(__m256i x, __m256i a, __m256i w, __m256i p) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, w), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), w);
  const __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
  const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, a), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline uint32_t shoup_factor(uint32_t a, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) << 32) / p);
}

}  // namespace

void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p) {
  const std::size_t n = y.size();
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(shoup_factor(a, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i s = _mm256_add_epi32(yv, mulmod(xv, va, vw, vp));
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), s);
  }
  for (; i < n; ++i) y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(a) * x[i]) % p);
}

void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p) {
  const std::size_t n = y.size();
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(shoup_factor(a, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), mulmod(yv, va, vw, vp));
  }
  for (; i < n; ++i) y[i] = static_cast<uint32_t>(static_cast<uint64_t>(a) * y[i] % p);
}

}  // namespace taft::kernels::avx2
