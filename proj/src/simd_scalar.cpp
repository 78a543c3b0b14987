#include "diffu/simd.hpp"

namespace diffu::simd::detail {

void mul_scalar(const Field& f, const Elem* a, const Elem* b, Elem* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = f.mul(a[i], b[i]);
}

void scale_scalar(const Field& f, Elem c, const Elem* a, Elem* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = f.mul(c, a[i]);
}

void geometric_scalar(const Field& f, Elem start, Elem ratio, Elem* out, std::size_t n) {
  Elem v = start;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v;
    v = f.mul(v, ratio);
  }
}

void derivative_scalar(const Elem* table, Elem alpha, Elem* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[x] = table[x] ^ table[x ^ alpha];
}

void xor_scalar(Elem* out, const Elem* in, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] ^= in[i];
}

}  // namespace diffu::simd::detail
