#include <doctest.h>

#include "diffu/errors.hpp"
#include "diffu/geometry.hpp"
#include "diffu/mvpoly.hpp"
#include "diffu/suites.hpp"
#include "diffu/uniformity.hpp"

using namespace diffu;

namespace {

// Lexicographically first point of X(F_q) outside V, by evaluating P_f everywhere.
std::optional<AffinePoint4> naive_first_violation(const NormalizedPolyFunc& f) {
  const Field& field = f.field();
  const auto p = pf_polynomial(f);
  const Elem q = field.order();
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      std::vector<Elem> zeros;
      for (Elem z = 0; z < q; ++z)
        if (eval_tripoly(field, p, x, y, z) == 0) zeros.push_back(z);
      for (Elem z : zeros)
        for (Elem t : zeros)
          if (!in_V({x, y, z, t})) return AffinePoint4{x, y, z, t};
    }
  return std::nullopt;
}

NormalizedPolyFunc mono(const Field& field, std::uint64_t d) {
  return NormalizedPolyFunc::from(PolyFunc::monomial(field, d));
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("membership in the seven hyperplanes") {
  CHECK(in_V({1, 1, 2, 3}));
  CHECK(in_V({1, 2, 3, 0}));  // x+y+z+t = 0
  CHECK(in_V({1, 2, 4, 2}));  // y = t
  CHECK_FALSE(in_V({1, 2, 4, 8}));
}

TEST_CASE("projective normalization") {
  const auto field = Field::make(4);
  const auto p = ProjPoint2::normalized(field, {0, 3, 6});
  CHECK(p.coords()[0] == 0);
  CHECK(p.coords()[1] == 1);
  CHECK(p.coords()[2] == field.mul(6, field.inv(3)));
  CHECK(ProjPoint2::normalized(field, {0, 6, field.mul(6, 2)}) == ProjPoint2::normalized(field, {0, 1, 2}));
  CHECK_THROWS_AS(ProjPoint3::normalized(field, {0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("reported violation is the lexicographically first one") {
  SplitMix64 rng(41);
  int with_violation = 0;
  for (unsigned m : {3u, 4u}) {
    const auto field = Field::make(m);
    for (int trial = 0; trial < 6; ++trial) {
      const auto f = random_normalized(field, 9, rng);
      const auto rep = contained_in_V(f);
      const auto naive = naive_first_violation(f);
      CAPTURE(f.poly().to_string());
      CHECK(rep.contained == !naive.has_value());
      CHECK(rep.violation == naive);
      if (rep.violation) {
        ++with_violation;
        CHECK(is_violation(f.poly(), *rep.violation));
      } else {
        const std::uint64_t q = field.order();
        CHECK(rep.points_scanned == q * (q - 1) / 2 * q);
      }
    }
  }
  CHECK(with_violation > 0);
}

TEST_CASE("containment tracks delta <= 4") {
  for (unsigned m : {3u, 4u, 5u, 6u}) {
    const auto field = Field::make(m);
    for (std::uint64_t d = 3; d < field.order() - 1; d += 2) {
      const auto f = mono(field, d);
      CAPTURE(m);
      CAPTURE(d);
      CHECK(contained_in_V(f).contained == (delta_monomial(d, field).delta <= 4));
      CHECK(find_six_solutions(f.poly()).has_value() == (delta_monomial(d, field).delta >= 6));
    }
  }
}

TEST_CASE("six solutions are genuine") {
  const auto field = Field::make(6);
  const auto f = PolyFunc::monomial(field, 9);  // delta 8
  const auto six = find_six_solutions(f);
  REQUIRE(six.has_value());
  const auto& s = *six;
  const Elem alpha = s[0] ^ s[1], beta = f(s[0]) ^ f(s[1]);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) CHECK(s[i] != s[j]);
  for (int i = 0; i < 6; i += 2) {
    CHECK((s[i] ^ s[i + 1]) == alpha);
    CHECK((f(s[i]) ^ f(s[i + 1])) == beta);
  }
}

TEST_CASE("equivalence details agree") {
  SplitMix64 rng(12);
  const auto field = Field::make(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_normalized(field, 9, rng);
    const auto eq = equivalence_details(f);
    CHECK(eq.agree());
    CHECK(eq.delta == delta_exhaustive(f.poly()).delta);
    CHECK(equivalence_check(f));
  }
}

TEST_CASE("X point count against a naive q^4 filter") {
  const auto field = Field::make(3);
  for (const auto& f : {mono(field, 5), mono(field, 3), NormalizedPolyFunc::from(PolyFunc(field, {{5, 3}, {3, 6}}))}) {
    const auto p = pf_polynomial(f);
    std::uint64_t naive = 0;
    for (Elem x = 0; x < 8; ++x)
      for (Elem y = 0; y < 8; ++y)
        for (Elem z = 0; z < 8; ++z)
          for (Elem t = 0; t < 8; ++t)
            naive += eval_tripoly(field, p, x, y, z) == 0 && eval_tripoly(field, p, x, y, t) == 0;
    CHECK(x_point_count(f) == naive);
  }
}

TEST_CASE("chart count matches a full projective scan") {
  for (unsigned m : {2u, 3u, 4u, 5u}) {
    const auto field = Field::make(m);
    for (std::uint64_t d : {5u, 7u, 9u, 11u, 13u, 15u}) {
      CAPTURE(m);
      CAPTURE(d);
      CHECK(proj_curve_points(d, field) == proj_curve_points_scan(d, field));
    }
  }
}

TEST_CASE("curve counts are independent of the modulus") {
  for (std::uint64_t d : {7u, 15u}) {
    CHECK(proj_curve_points(d, Field::make(8, 0x11B)) == proj_curve_points(d, Field::make(8, 0x11D)));
    CHECK(proj_curve_points(d, Field::make(6, 0x43)) == proj_curve_points(d, Field::make(6, 0x5B)));
  }
}

TEST_CASE("structural checks on the Mersenne cones") {
  for (std::uint64_t d : {7u, 15u}) {
    for (unsigned m : {4u, 5u, 6u}) {
      const auto s = structural_checks(d, Field::make(m));
      CAPTURE(d);
      CAPTURE(m);
      CHECK(s.vertex);
      CHECK(s.intercurve);
      CHECK(s.projection);
      CHECK(s.component_plane);
      CHECK(s.c7_points == s.c_points);
      CHECK(s.c_points == proj_curve_points(d, Field::make(m)));
    }
  }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(contained_in_V(mono(Field::make(11), 7)), ResourceLimit);
  CHECK_THROWS_AS(equivalence_details(mono(Field::make(9), 7)), ResourceLimit);
  CHECK_THROWS_AS(x_point_count(mono(Field::make(8), 7)), ResourceLimit);
  CHECK_THROWS_AS(proj_curve_points(7, Field::make(13)), ResourceLimit);
  CHECK_THROWS_AS(structural_checks(7, Field::make(11)), ResourceLimit);
}

}
