#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "diffu/simd.hpp"

namespace diffu::simd {

namespace {

bool cpu_has_avx2() {
#if defined(DIFFU_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend pick_backend() {
  if (const char* env = std::getenv("DIFFU_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Backend::kScalar;
    if (want == "avx2" && backend_available(Backend::kAvx2)) return Backend::kAvx2;
  }
  return backend_available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

void check_sizes(std::size_t a, std::size_t out) {
  if (a != out) throw std::invalid_argument("simd kernel: mismatched span lengths");
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "?";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: return cpu_has_avx2();
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (backend_available(Backend::kAvx2)) out.push_back(Backend::kAvx2);
  return out;
}

Backend active_backend() {
  static const Backend chosen = pick_backend();
  return chosen;
}

#if defined(DIFFU_BUILD_AVX2)
#define DIFFU_DISPATCH(be, scalar_call, avx2_call) \
  do {                                              \
    if ((be) == Backend::kAvx2 && cpu_has_avx2()) { \
      avx2_call;                                    \
    } else {                                        \
      scalar_call;                                  \
    }                                               \
  } while (0)
#else
#define DIFFU_DISPATCH(be, scalar_call, avx2_call) \
  do {                                              \
    (void)(be);                                     \
    scalar_call;                                    \
  } while (0)
#endif

void mul(const Field& f, std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out,
         Backend be) {
  check_sizes(a.size(), out.size());
  check_sizes(b.size(), out.size());
  DIFFU_DISPATCH(be, detail::mul_scalar(f, a.data(), b.data(), out.data(), out.size()),
                 detail::mul_avx2(f, a.data(), b.data(), out.data(), out.size()));
}

void scale(const Field& f, Elem c, std::span<const Elem> a, std::span<Elem> out, Backend be) {
  check_sizes(a.size(), out.size());
  DIFFU_DISPATCH(be, detail::scale_scalar(f, c, a.data(), out.data(), out.size()),
                 detail::scale_avx2(f, c, a.data(), out.data(), out.size()));
}

void geometric(const Field& f, Elem start, Elem ratio, std::span<Elem> out, Backend be) {
  DIFFU_DISPATCH(be, detail::geometric_scalar(f, start, ratio, out.data(), out.size()),
                 detail::geometric_avx2(f, start, ratio, out.data(), out.size()));
}

void derivative(std::span<const Elem> table, Elem alpha, std::span<Elem> out, Backend be) {
  check_sizes(table.size(), out.size());
  const std::size_t n = table.size();
  if (n == 0 || (n & (n - 1)) != 0 || alpha >= n) {
    throw std::invalid_argument("simd::derivative: table size must be a power of two above alpha");
  }
  DIFFU_DISPATCH(be, detail::derivative_scalar(table.data(), alpha, out.data(), n),
                 detail::derivative_avx2(table.data(), alpha, out.data(), n));
}

void xor_into(std::span<Elem> out, std::span<const Elem> in, Backend be) {
  check_sizes(in.size(), out.size());
  DIFFU_DISPATCH(be, detail::xor_scalar(out.data(), in.data(), out.size()),
                 detail::xor_avx2(out.data(), in.data(), out.size()));
}

}  // namespace diffu::simd
