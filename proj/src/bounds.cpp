#include "diffu/bounds.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace diffu {

namespace {

using Big = boost::multiprecision::cpp_int;

std::int64_t narrow(const Big& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

Big pow_big(const Big& b, unsigned e) {
  Big r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

Big field_order(unsigned m) {
  if (m < 1 || m > kMaxBoundDegree) {
    throw std::invalid_argument("m must lie in [1, " + std::to_string(kMaxBoundDegree) + "], got " +
                                std::to_string(m));
  }
  return Big(1) << m;
}

/// lhs > coeff * sqrt(q), for coeff >= 0.
bool exceeds_sqrt_multiple(const Big& lhs, const Big& coeff, const Big& q) {
  if (lhs <= 0) return false;
  return lhs * lhs > coeff * coeff * q;
}

}  // namespace

std::int64_t arithmetic_genus(std::int64_t d) {
  if (d < 5 || d % 2 == 0) {
    throw std::invalid_argument("arithmetic genus needs an odd d >= 5, got " + std::to_string(d));
  }
  return narrow(Big(d - 4) * Big(d - 5) / 2, "genus");
}

std::pair<std::int64_t, std::int64_t> weil_interval(std::uint64_t q, std::int64_t genus) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  // 2g sqrt(q) = sqrt(4 g^2 q); floor/ceil of q + 1 -/+ that via the integer square root.
  const Big spread = boost::multiprecision::sqrt(Big(4) * Big(genus) * Big(genus) * Big(q));
  const Big centre = Big(q) + 1;
  return {narrow(centre - spread, "Weil lower end"), narrow(centre + spread, "Weil upper end")};
}

std::int64_t hyperplane_cap(std::int64_t degree) {
  if (degree < 1) throw std::invalid_argument("curve degree must be at least 1");
  return narrow(Big(7) * degree, "hyperplane cap");
}

std::int64_t serre_cap(std::int64_t degree, std::uint64_t q) {
  if (degree < 2) throw std::invalid_argument("surface degree must be at least 2");
  return narrow(Big(8) * (Big(degree) * Big(q) + 1), "Serre cap");
}

bool is_mersenne_degree(std::int64_t d) {
  if (d < 7) return false;
  return std::has_single_bit(static_cast<std::uint64_t>(d) + 1);
}

MonomialBound monomial_bound(std::int64_t d, unsigned m) {
  const Big q = field_order(m);
  MonomialBound b;
  const Big D(d);
  if (d >= 5 && d % 2 == 1) {
    const Big genus = (D - 4) * (D - 5) / 2;
    b.inequality_holds = exceeds_sqrt_multiple(q - 7 * (D - 3) + 1, 2 * genus, q);
  }
  b.quartic_condition = q >= D * D * D * D - 18 * D * D * D + 121 * D * D - 348 * D + 362;
  // d - 4.6 < q^(1/4)  <=>  (10d - 46)^4 < 10^4 q when 10d > 46.
  const Big shifted = 10 * D - 46;
  b.root_condition = d >= 5 && (shifted <= 0 || pow_big(shifted, 4) < 10000 * q);
  b.applies = is_mersenne_degree(d) && b.inequality_holds;
  return b;
}

PolynomialBound polynomial_bound(std::int64_t d, unsigned m) {
  const Big q = field_order(m);
  PolynomialBound b;
  const Big D(d);
  if (d >= 4) {
    const Big lead = pow_big(D - 3, 4);
    const Big constant = 36 * pow_big(2 * D - 3, 5) + 8 * (D - 3);
    b.inequality_holds = exceeds_sqrt_multiple(q - constant, lead, q);
  }
  if (d >= 2) {
    // d sqrt(q) > d^5 - 12d^4 + 54d^3 + 1044d^2 + 5265d + 25920
    const Big rhs = pow_big(D, 5) - 12 * pow_big(D, 4) + 54 * pow_big(D, 3) + 1044 * D * D + 5265 * D + 25920;
    b.sqrt_condition = rhs < 0 || D * D * q > rhs * rhs;
  }
  b.root_condition = d >= 31 && pow_big(D - 2, 8) < q;
  const bool mersenne = is_mersenne_degree(d);
  b.statement_claims = mersenne && ((d >= 31 && b.root_condition) || (d == 7 && m >= 22) || (d == 15 && m >= 30));
  b.applies = mersenne && b.inequality_holds;
  return b;
}

bool monomial_theorem_applies(std::int64_t d, unsigned m) { return monomial_bound(d, m).applies; }
bool polynomial_theorem_applies(std::int64_t d, unsigned m) { return polynomial_bound(d, m).applies; }

BoundReport bound_report(std::int64_t d, unsigned m) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  BoundReport r;
  r.d = d;
  r.m = m;
  r.q = field_order(m).convert_to<std::uint64_t>();
  r.hypotheses_met = is_mersenne_degree(d);
  const auto optional = [](auto fn) -> std::optional<decltype(fn())> {
    try {
      return fn();
    } catch (const std::overflow_error&) {
      return std::nullopt;
    }
  };
  if (d >= 5 && d % 2 == 1) {
    r.genus = arithmetic_genus(d);
    r.weil = optional([&] { return weil_interval(r.q, *r.genus); });
  }
  if (d >= 4) r.hyperplane_cap = optional([&] { return hyperplane_cap(d - 3); });
  if (d >= 5) {
    r.surface_degree = optional([&] { return narrow(Big(d - 3) * Big(d - 3), "surface degree"); });
    if (r.surface_degree) r.serre_cap = optional([&] { return serre_cap(*r.surface_degree, r.q); });
  }
  r.monomial = monomial_bound(d, m);
  r.polynomial = polynomial_bound(d, m);
  r.predicted_delta_gt_4_monomial = r.monomial.applies;
  r.predicted_delta_gt_4_polynomial = r.polynomial.applies;
  return r;
}

std::optional<unsigned> first_monomial_m(std::int64_t d, unsigned max_m) {
  for (unsigned m = 1; m <= max_m; ++m)
    if (monomial_theorem_applies(d, m)) return m;
  return std::nullopt;
}

std::optional<unsigned> first_polynomial_m(std::int64_t d, unsigned max_m) {
  for (unsigned m = 1; m <= max_m; ++m)
    if (polynomial_theorem_applies(d, m)) return m;
  return std::nullopt;
}

}  // namespace diffu
