#include <doctest.h>

#include "diffu/gf2m.hpp"
#include "diffu/rng.hpp"

using namespace diffu;

namespace {

// Irreducibility by trial division over every polynomial of lower degree.
bool irreducible_by_trial(std::uint64_t p) {
  const int n = gf2poly::degree(p);
  if (n < 1) return false;
  for (std::uint64_t g = 2; gf2poly::degree(g) <= n / 2; ++g) {
    if (gf2poly::mod(p, g) == 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("gf2m") {

TEST_CASE("known products in the AES field") {
  const auto f = Field::make(8, 0x11B);
  CHECK(f.mul(0x57, 0x83) == 0xC1);
  CHECK(f.mul(0x57, 0x13) == 0xFE);
  CHECK(f.inv(0x53) == 0xCA);
  CHECK(f.mul_shift_reduce(0x57, 0x83) == 0xC1);
}

TEST_CASE("ben-or test agrees with trial division up to degree 12") {
  for (std::uint64_t p = 2; p < (1u << 13); ++p) {
    CAPTURE(p);
    CHECK(gf2poly::is_irreducible(p) == irreducible_by_trial(p));
  }
}

TEST_CASE("default moduli are the smallest irreducible of each degree") {
  for (unsigned m = Field::kMinDegree; m <= Field::kMaxDegree; ++m) {
    CAPTURE(m);
    const std::uint32_t p = default_modulus(m);
    CHECK(gf2poly::degree(p) == static_cast<int>(m));
    CHECK(gf2poly::is_irreducible(p));
    if (m <= 16) {
      for (std::uint64_t c = std::uint64_t{1} << m; c < p; ++c) CHECK_FALSE(gf2poly::is_irreducible(c));
    }
  }
}

TEST_CASE("the bundled modulus table matches the built-in defaults") {
  const auto table = load_modulus_table(default_modulus_table_path());
  CHECK(table.size() == Field::kMaxDegree - Field::kMinDegree + 1);
  for (const auto& [m, p] : table) CHECK(p == default_modulus(m));
}

TEST_CASE("reducible moduli are rejected with a factor") {
  try {
    (void)Field::make(8, 0x101);  // (x+1)^8
    FAIL("expected FieldError");
  } catch (const FieldError& e) {
    REQUIRE(e.factor().has_value());
    CHECK(*e.factor() == 0x3);
  }
  CHECK_THROWS_AS(Field::make(8, 0x1B), FieldError);   // wrong degree
  CHECK_THROWS_AS(Field::make(1), FieldError);
  CHECK_THROWS_AS(Field::make(25), FieldError);
  CHECK(gf2poly::smallest_factor(0x11B) == std::nullopt);
  CHECK(gf2poly::smallest_factor(0x31) == 0x7);  // (x^2+x+1)(x^3+x+1)
}

TEST_CASE("log tables agree with shift-reduce") {
  for (unsigned m : {2u, 3u, 5u, 8u}) {
    const auto f = Field::make(m);
    REQUIRE(f.has_tables());
    for (Elem a = 0; a < f.order(); ++a)
      for (Elem b = 0; b < f.order(); ++b) REQUIRE(f.mul(a, b) == f.mul_shift_reduce(a, b));
  }
  SplitMix64 rng(7);
  for (unsigned m : {12u, 16u}) {
    const auto f = Field::make(m);
    for (int i = 0; i < 20000; ++i) {
      const Elem a = rng.next() & f.mask(), b = rng.next() & f.mask();
      REQUIRE(f.mul(a, b) == f.mul_shift_reduce(a, b));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  SplitMix64 rng(11);
  for (unsigned m : {4u, 9u, 17u, 24u}) {
    const auto f = Field::make(m);
    CAPTURE(m);
    CHECK(f.has_tables() == (m <= Field::kMaxTableDegree));
    for (int i = 0; i < 300; ++i) {
      const Elem a = rng.next() & f.mask(), b = rng.next() & f.mask(), c = rng.next() & f.mask();
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
      CHECK(f.pow(a, 2) == f.sqr(a));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, f.order() - 1) == 1);
      }
    }
  }
}

TEST_CASE("pow edge cases") {
  const auto f = Field::make(5);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 5) == 0);
  CHECK(f.pow(3, 0) == 1);
  CHECK(f.pow(3, 31 + 4) == f.pow(3, 4));
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (unsigned m : {2u, 3u, 6u, 8u, 11u, 16u}) {
    const auto f = Field::make(m);
    const Elem g = f.primitive();
    Elem x = 1;
    for (std::uint32_t i = 1; i < f.order() - 1; ++i) {
      x = f.mul(x, g);
      REQUIRE(x != 1);
    }
    CHECK(f.mul(x, g) == 1);
  }
}

TEST_CASE("modulus table parsing") {
  const auto t = parse_modulus_table("# comment\n3: 0xB\n\n8: 0x11d  # primitive\n");
  CHECK(t.size() == 2);
  CHECK(t.at(8) == 0x11D);
  CHECK_THROWS(parse_modulus_table("8: 0x101\n"));
  CHECK_THROWS(parse_modulus_table("8 0x11B\n"));
  CHECK_THROWS(parse_modulus_table("8: zz\n"));
}

TEST_CASE("hex helpers") {
  CHECK(to_hex(0x1b) == "0x1B");
  CHECK(to_hex(0) == "0x0");
  CHECK(parse_hex("0x11b") == 0x11B);
  CHECK(parse_hex("11B") == 0x11B);
  CHECK_FALSE(parse_hex("0xg").has_value());
  CHECK_FALSE(parse_hex("").has_value());
  CHECK(Field::make(8).modulus_hex() == "0x11B");
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
}

}
