#pragma once

// Numeric thresholds for delta(f) > 4 when deg f = 2^r - 1, evaluated in exact
// integer arithmetic (square roots are compared after squaring).

#include <cstdint>
#include <optional>
#include <utility>

namespace diffu {

/// (d-4)(d-5)/2 for odd d >= 5. Throws std::invalid_argument otherwise.
std::int64_t arithmetic_genus(std::int64_t d);

/// [ceil(q+1-2g*sqrt(q)), floor(q+1+2g*sqrt(q))]. The lower end may be negative.
std::pair<std::int64_t, std::int64_t> weil_interval(std::uint64_t q, std::int64_t genus);

/// 7 * degC: most points a plane curve of that degree has on the seven planes.
std::int64_t hyperplane_cap(std::int64_t degree);

/// 8 * (degX * q + 1). Throws std::invalid_argument for degX < 2.
std::int64_t serre_cap(std::int64_t degree, std::uint64_t q);

/// d = 2^r - 1 with r >= 3.
bool is_mersenne_degree(std::int64_t d);

/// Largest m accepted by the bound evaluators.
inline constexpr unsigned kMaxBoundDegree = 62;

struct MonomialBound {
  /// q - 2 pi sqrt(q) - 7(d-3) + 1 > 0 with pi = (d-4)(d-5)/2.
  bool inequality_holds = false;
  /// q >= d^4 - 18d^3 + 121d^2 - 348d + 362.
  bool quartic_condition = false;
  /// 5 <= d < q^(1/4) + 4.6.
  bool root_condition = false;
  /// Hypotheses met and the exact inequality holds.
  bool applies = false;
};

struct PolynomialBound {
  /// q - (d-3)^4 sqrt(q) - 36(2d-3)^5 - 8(d-3) > 0.
  bool inequality_holds = false;
  /// sqrt(q) > d^4 - 12d^3 + 54d^2 + 1044d + 5265 + 25920/d.
  bool sqrt_condition = false;
  /// 31 <= d < q^(1/8) + 2.
  bool root_condition = false;
  /// What the published statement claims for (d, m): the root condition for
  /// d >= 31, plus the named cases d = 7, m >= 22 and d = 15, m >= 30.
  bool statement_claims = false;
  /// Hypotheses met and the exact inequality holds.
  bool applies = false;
};

MonomialBound monomial_bound(std::int64_t d, unsigned m);
PolynomialBound polynomial_bound(std::int64_t d, unsigned m);

bool monomial_theorem_applies(std::int64_t d, unsigned m);
bool polynomial_theorem_applies(std::int64_t d, unsigned m);

struct BoundReport {
  std::int64_t d = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
  bool hypotheses_met = false;  // d = 2^r - 1, r >= 3
  std::optional<std::int64_t> genus;
  std::optional<std::pair<std::int64_t, std::int64_t>> weil;
  std::optional<std::int64_t> hyperplane_cap;  // 7(d-3)
  std::optional<std::int64_t> surface_degree;  // (d-3)^2
  std::optional<std::int64_t> serre_cap;       // 8((d-3)^2 q + 1)
  MonomialBound monomial;
  PolynomialBound polynomial;
  bool predicted_delta_gt_4_monomial = false;
  bool predicted_delta_gt_4_polynomial = false;
};

/// Throws std::invalid_argument for d < 1 or m outside [1, 62].
BoundReport bound_report(std::int64_t d, unsigned m);

/// Smallest m <= max_m with monomial_theorem_applies(d, m), if any.
std::optional<unsigned> first_monomial_m(std::int64_t d, unsigned max_m = kMaxBoundDegree);
std::optional<unsigned> first_polynomial_m(std::int64_t d, unsigned max_m = kMaxBoundDegree);

}  // namespace diffu
