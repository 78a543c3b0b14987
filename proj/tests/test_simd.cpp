#include <doctest.h>

#include "diffu/rng.hpp"
#include "diffu/simd.hpp"

using namespace diffu;
using simd::Backend;

namespace {

std::vector<Elem> random_elems(const Field& f, std::size_t n, SplitMix64& rng) {
  std::vector<Elem> v(n);
  for (auto& x : v) x = rng.next() & f.mask();
  return v;
}

// Every backend is compared with the scalar one; odd lengths exercise the tails.
constexpr std::size_t kLengths[] = {0, 1, 7, 8, 9, 63, 1000};

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar backend is always available") {
  CHECK(simd::backend_available(Backend::kScalar));
  CHECK_FALSE(simd::available_backends().empty());
  CHECK(std::string(simd::backend_name(Backend::kAvx2)) == "avx2");
}

TEST_CASE("scalar kernels match field arithmetic") {
  const auto f = Field::make(9);
  SplitMix64 rng(3);
  const auto a = random_elems(f, 100, rng), b = random_elems(f, 100, rng);
  std::vector<Elem> out(100);
  simd::mul(f, a, b, out, Backend::kScalar);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(out[i] == f.mul(a[i], b[i]));
  simd::scale(f, 0x1A5, a, out, Backend::kScalar);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(out[i] == f.mul(0x1A5, a[i]));
  simd::geometric(f, 5, f.primitive(), out, Backend::kScalar);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == f.mul(5, f.pow(f.primitive(), i)));
}

TEST_CASE("backends agree on every kernel") {
  SplitMix64 rng(99);
  for (Backend be : simd::available_backends()) {
    CAPTURE(simd::backend_name(be));
    for (unsigned m : {2u, 3u, 8u, 13u, 16u, 20u, 24u}) {
      CAPTURE(m);
      const auto f = Field::make(m);
      for (std::size_t n : kLengths) {
        CAPTURE(n);
        const auto a = random_elems(f, n, rng), b = random_elems(f, n, rng);
        std::vector<Elem> ref(n), got(n);

        simd::mul(f, a, b, ref, Backend::kScalar);
        simd::mul(f, a, b, got, be);
        CHECK(ref == got);

        const Elem c = rng.next() & f.mask();
        simd::scale(f, c, a, ref, Backend::kScalar);
        simd::scale(f, c, a, got, be);
        CHECK(ref == got);

        const Elem start = rng.next() & f.mask(), ratio = rng.next() & f.mask();
        simd::geometric(f, start, ratio, ref, Backend::kScalar);
        simd::geometric(f, start, ratio, got, be);
        CHECK(ref == got);

        ref = a;
        got = a;
        simd::xor_into(ref, b, Backend::kScalar);
        simd::xor_into(got, b, be);
        CHECK(ref == got);
      }
      if (m <= 16) {
        const auto table = random_elems(f, f.order(), rng);
        std::vector<Elem> ref(f.order()), got(f.order());
        for (Elem alpha : {Elem{1}, f.mask(), static_cast<Elem>(rng.next() & f.mask())}) {
          simd::derivative(table, alpha, ref, Backend::kScalar);
          simd::derivative(table, alpha, got, be);
          CHECK(ref == got);
          for (Elem x = 0; x < f.order(); ++x) REQUIRE(ref[x] == (table[x] ^ table[x ^ alpha]));
        }
      }
    }
  }
}

}
