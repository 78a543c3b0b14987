#include <doctest.h>

#include <set>

#include "diffu/errors.hpp"
#include "diffu/suites.hpp"
#include "diffu/uniformity.hpp"

using namespace diffu;

namespace {

struct Naive {
  std::uint32_t delta = 0;
  Elem alpha = 0, beta = 0;
  std::map<std::uint32_t, std::uint64_t> spectrum;
};

// Textbook DDT from pointwise evaluation; witness is the lexicographically smallest (alpha, beta).
Naive naive_ddt(const PolyFunc& f) {
  const Elem q = f.field().order();
  Naive n;
  for (Elem a = 1; a < q; ++a) {
    std::vector<std::uint32_t> row(q);
    for (Elem x = 0; x < q; ++x) ++row[f(x ^ a) ^ f(x)];
    for (Elem b = 0; b < q; ++b) {
      ++n.spectrum[row[b]];
      if (row[b] > n.delta) {
        n.delta = row[b];
        n.alpha = a;
        n.beta = b;
      }
    }
  }
  return n;
}

}  // namespace

TEST_SUITE("uniformity") {

TEST_CASE("exhaustive DDT matches the naive oracle") {
  SplitMix64 rng(17);
  for (unsigned m : {2u, 3u, 4u, 5u, 6u}) {
    const auto field = Field::make(m);
    for (int trial = 0; trial < 8; ++trial) {
      const auto f = random_normalized(field, 11, rng).poly();
      const auto naive = naive_ddt(f);
      const auto rep = delta_exhaustive(f);
      CAPTURE(f.to_string());
      CHECK(rep.delta == naive.delta);
      CHECK(rep.witness_alpha == naive.alpha);
      CHECK(rep.witness_beta == naive.beta);
      CHECK(rep.spectrum == naive.spectrum);
      CHECK(rep.is_exact());
      CHECK(rep.rows_examined == field.order() - 1);
      CHECK(delta_exhaustive(field, f.value_table()).delta == rep.delta);
    }
  }
}

TEST_CASE("known differential uniformities") {
  // Inverse: 4 on even m, APN on odd m.
  for (unsigned m = 3; m <= 10; ++m) {
    const auto field = Field::make(m);
    CHECK(delta_exhaustive(PolyFunc::monomial(field, field.order() - 2)).delta == (m % 2 ? 2u : 4u));
  }
  // Gold x^3 and x^5, Kasami x^13: APN when the relevant gcd is 1.
  for (unsigned m : {5u, 7u}) {
    const auto field = Field::make(m);
    CHECK(delta_exhaustive(PolyFunc::monomial(field, 3)).delta == 2);
    CHECK(delta_exhaustive(PolyFunc::monomial(field, 5)).delta == 2);
    CHECK(delta_exhaustive(PolyFunc::monomial(field, 13)).delta == 2);
  }
  // Gold x^(2^k+1) has delta 2^gcd(k, m).
  CHECK(delta_exhaustive(PolyFunc::monomial(Field::make(6), 3)).delta == 2);
  CHECK(delta_exhaustive(PolyFunc::monomial(Field::make(6), 5)).delta == 4);
  CHECK(delta_exhaustive(PolyFunc::monomial(Field::make(6), 9)).delta == 8);
  // Linear functions have full rows.
  CHECK(delta_exhaustive(PolyFunc::monomial(Field::make(4), 2)).delta == 16);
}

TEST_CASE("inverse spectrum on F_256") {
  const auto rep = delta_exhaustive(PolyFunc::monomial(Field::make(8), 254));
  CHECK(rep.delta == 4);
  CHECK(rep.spectrum.at(4) == 255);
  CHECK(rep.spectrum.at(2) == 255 * 126);
  CHECK(rep.spectrum.at(0) == 255 * 129);
}

TEST_CASE("monomial fast path agrees with the exhaustive DDT") {
  for (unsigned m : {3u, 4u, 5u, 6u}) {
    const auto field = Field::make(m);
    for (std::uint64_t d = 3; d < field.order(); ++d) {
      CAPTURE(m);
      CAPTURE(d);
      const auto fast = delta_monomial(d, field);
      const auto full = delta_exhaustive(PolyFunc::monomial(field, d));
      CHECK(fast.delta == full.delta);
      CHECK(fast.mode == DeltaMode::kMonomialFast);
      CHECK(fast.rows_examined == 1);
    }
  }
  const auto field = Field::make(4);
  CHECK_THROWS_AS(delta_monomial(2, field), std::invalid_argument);
  CHECK_THROWS_AS(delta_monomial(16, field), std::invalid_argument);
}

TEST_CASE("ddt rows") {
  const auto field = Field::make(5);
  const auto f = PolyFunc::monomial(field, 7);
  const auto row = ddt_row(f, 3);
  std::uint32_t total = 0;
  for (auto c : row.counts) {
    CHECK(c % 2 == 0);
    total += c;
  }
  CHECK(total == field.order());
  CHECK(row.counts[row.argmax()] == row.max());
  CHECK_THROWS_AS(ddt_row(f, 0), std::invalid_argument);

  const auto ddt = full_ddt(f);
  REQUIRE(ddt.size() == field.order());
  CHECK(ddt[0][0] == field.order());
  CHECK(ddt[3] == row.counts);
  CHECK_THROWS_AS(full_ddt(PolyFunc::monomial(Field::make(9), 7)), ResourceLimit);
}

TEST_CASE("sampled alphas follow the seeded Fisher-Yates contract") {
  const std::uint32_t q = 64;
  const std::uint64_t seed = 1234;
  std::vector<Elem> slots(q - 1);
  for (Elem i = 0; i < q - 1; ++i) slots[i] = i + 1;
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < 20; ++k) std::swap(slots[k], slots[k + rng.below(q - 1 - k)]);
  slots.resize(20);
  CHECK(sample_alphas(q, 20, seed) == slots);

  const auto all = sample_alphas(q, 1000, 9);
  CHECK(all.size() == q - 1);
  CHECK(std::set<Elem>(all.begin(), all.end()).size() == q - 1);
  CHECK(*std::min_element(all.begin(), all.end()) == 1);
}

TEST_CASE("sampled delta is a reproducible lower bound") {
  SplitMix64 rng(4);
  const auto field = Field::make(9);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f = random_normalized(field, 9, rng).poly();
    const auto exact = delta_exhaustive(f);
    const auto a = delta_sampled(f, {.alpha_budget = 40, .seed = 77});
    const auto b = delta_sampled(f, {.alpha_budget = 40, .seed = 77});
    CHECK(a.delta <= exact.delta);
    CHECK(a.delta == b.delta);
    CHECK(a.witness_alpha == b.witness_alpha);
    CHECK(a.rows_examined == 40);
    CHECK_FALSE(a.is_exact());
    CHECK(ddt_row(f, a.witness_alpha).counts[a.witness_beta] == a.delta);

    const auto full = delta_sampled(f, {.alpha_budget = field.order(), .seed = 1});
    CHECK(full.delta == exact.delta);
    CHECK(full.witness_alpha == exact.witness_alpha);
    CHECK(full.witness_beta == exact.witness_beta);
  }
}

TEST_CASE("sampled early exit stops at the first qualifying row") {
  const auto field = Field::make(10);
  const auto f = PolyFunc::monomial(field, 7);
  const auto rep = delta_sampled(f, {.alpha_budget = 500, .seed = 3, .stop_at = 4});
  CHECK(rep.delta >= 4);
  const auto order = sample_alphas(field.order(), 500, 3);
  std::uint64_t first = 0;
  while (ddt_row(f, order[first]).max() < 4) ++first;
  CHECK(rep.rows_examined == first + 1);
  CHECK_THROWS_AS(delta_sampled(f, {.alpha_budget = 0}), std::invalid_argument);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(delta_exhaustive(PolyFunc::monomial(Field::make(17), 7)), ResourceLimit);
  CHECK(delta_monomial(7, Field::make(20)).delta >= 6);
}

}
