#pragma once

// Data-parallel kernels over arrays of field elements.
//
// Every kernel has a scalar reference implementation and, where the build and
// the CPU allow it, an AVX2 implementation. The backend is picked once at
// startup (DIFFU_SIMD=scalar|avx2 overrides the choice) and can be passed
// explicitly, which is how the equivalence tests pin both paths.

#include <span>
#include <vector>

#include "diffu/gf2m.hpp"

namespace diffu::simd {

enum class Backend { kScalar, kAvx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
std::vector<Backend> available_backends();
Backend active_backend();

/// out[i] = a[i] * b[i]
void mul(const Field& f, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out,
         Backend be = active_backend());

/// out[i] = c * a[i]
void scale(const Field& f, Elem c, std::span<const Elem> a, std::span<Elem> out,
           Backend be = active_backend());

/// out[i] = start * ratio^i
void geometric(const Field& f, Elem start, Elem ratio, std::span<Elem> out,
               Backend be = active_backend());

/// out[x] = table[x] + table[x + alpha] for x in [0, table.size()).
/// table.size() must be a power of two greater than alpha.
void derivative(std::span<const Elem> table, Elem alpha, std::span<Elem> out,
                Backend be = active_backend());

/// out[i] ^= in[i]
void xor_into(std::span<Elem> out, std::span<const Elem> in, Backend be = active_backend());

namespace detail {

void mul_scalar(const Field& f, const Elem* a, const Elem* b, Elem* out, std::size_t n);
void scale_scalar(const Field& f, Elem c, const Elem* a, Elem* out, std::size_t n);
void geometric_scalar(const Field& f, Elem start, Elem ratio, Elem* out, std::size_t n);
void derivative_scalar(const Elem* table, Elem alpha, Elem* out, std::size_t n);
void xor_scalar(Elem* out, const Elem* in, std::size_t n);

#if defined(DIFFU_BUILD_AVX2)
void mul_avx2(const Field& f, const Elem* a, const Elem* b, Elem* out, std::size_t n);
void scale_avx2(const Field& f, Elem c, const Elem* a, Elem* out, std::size_t n);
void geometric_avx2(const Field& f, Elem start, Elem ratio, Elem* out, std::size_t n);
void derivative_avx2(const Elem* table, Elem alpha, Elem* out, std::size_t n);
void xor_avx2(Elem* out, const Elem* in, std::size_t n);
#endif

}  // namespace detail

}  // namespace diffu::simd
