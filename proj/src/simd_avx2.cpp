// AVX2 kernels. Compiled with -mavx2; only called after a runtime CPU check.

#include <immintrin.h>

#include "diffu/simd.hpp"

namespace diffu::simd::detail {

namespace {

/// Eight independent shift-reduce products on 32-bit lanes. Lanes hold values
/// below 2^m with m <= 24, so the accumulator never leaves its lane.
struct Mul8 {
  __m256i modulus;
  __m256i top;
  unsigned m;

  explicit Mul8(const Field& f)
      : modulus(_mm256_set1_epi32(static_cast<int>(f.modulus()))),
        top(_mm256_set1_epi32(static_cast<int>(f.order()))),
        m(f.degree()) {}

  __m256i operator()(__m256i a, __m256i b) const {
    __m256i acc = _mm256_setzero_si256();
    // Walk the bits of b from the top; the sign bit of bb is the current bit.
    __m256i bb = _mm256_sll_epi32(b, _mm_cvtsi32_si128(static_cast<int>(32 - m)));
    for (unsigned i = 0; i < m; ++i) {
      acc = _mm256_slli_epi32(acc, 1);
      const __m256i overflow = _mm256_cmpeq_epi32(_mm256_and_si256(acc, top), top);
      acc = _mm256_xor_si256(acc, _mm256_and_si256(overflow, modulus));
      const __m256i bit = _mm256_srai_epi32(bb, 31);
      acc = _mm256_xor_si256(acc, _mm256_and_si256(bit, a));
      bb = _mm256_slli_epi32(bb, 1);
    }
    return acc;
  }
};

inline __m256i load(const Elem* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Elem* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

void mul_avx2(const Field& f, const Elem* a, const Elem* b, Elem* out, std::size_t n) {
  const Mul8 mul8(f);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(out + i, mul8(load(a + i), load(b + i)));
  mul_scalar(f, a + i, b + i, out + i, n - i);
}

void scale_avx2(const Field& f, Elem c, const Elem* a, Elem* out, std::size_t n) {
  const Mul8 mul8(f);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(out + i, mul8(load(a + i), cv));
  scale_scalar(f, c, a + i, out + i, n - i);
}

void geometric_avx2(const Field& f, Elem start, Elem ratio, Elem* out, std::size_t n) {
  if (n < 16) {
    geometric_scalar(f, start, ratio, out, n);
    return;
  }
  // Lane j carries start * ratio^(8k + j); each block advances by ratio^8.
  geometric_scalar(f, start, ratio, out, 8);
  const Mul8 mul8(f);
  const __m256i step = _mm256_set1_epi32(static_cast<int>(f.pow(ratio, 8)));
  __m256i v = load(out);
  std::size_t i = 8;
  for (; i + 8 <= n; i += 8) {
    v = mul8(v, step);
    store(out + i, v);
  }
  if (i < n) geometric_scalar(f, f.mul(out[i - 1], ratio), ratio, out + i, n - i);
}

void derivative_avx2(const Elem* table, Elem alpha, Elem* out, std::size_t n) {
  const __m256i av = _mm256_set1_epi32(static_cast<int>(alpha));
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const int* base = reinterpret_cast<const int*>(table);
  std::size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    const __m256i xv = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(x)), lane);
    const __m256i shifted = _mm256_i32gather_epi32(base, _mm256_xor_si256(xv, av), 4);
    store(out + x, _mm256_xor_si256(load(table + x), shifted));
  }
  for (; x < n; ++x) out[x] = table[x] ^ table[x ^ alpha];
}

void xor_avx2(Elem* out, const Elem* in, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(out + i, _mm256_xor_si256(load(out + i), load(in + i)));
  xor_scalar(out + i, in + i, n - i);
}

}  // namespace diffu::simd::detail
