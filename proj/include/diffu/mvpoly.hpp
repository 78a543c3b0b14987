#pragma once

// Sparse trivariate polynomials and the quotient
//   P_f(x,y,z) = (f(x) + f(y) + f(z) + f(x+y+z)) / ((x+y)(x+z)(y+z)).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diffu/funcspace.hpp"

namespace diffu {

/// Exponent triple packed as 3 x 21 bits, x most significant.
struct Monomial {
  static constexpr unsigned kBits = 21;
  static constexpr std::uint32_t kMaxExponent = (1u << kBits) - 1;

  std::uint32_t i = 0, j = 0, k = 0;

  std::uint32_t total_degree() const { return i + j + k; }
  std::uint64_t pack() const {
    return (std::uint64_t{i} << (2 * kBits)) | (std::uint64_t{j} << kBits) | k;
  }
  static Monomial unpack(std::uint64_t key) {
    const std::uint64_t m = kMaxExponent;
    return {static_cast<std::uint32_t>(key >> (2 * kBits)), static_cast<std::uint32_t>((key >> kBits) & m),
            static_cast<std::uint32_t>(key & m)};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class Var { kX = 0, kY = 1, kZ = 2 };

/// Sparse polynomial in x, y, z. Coefficients are field element bits; the
/// operations here only ever add coefficients, so a TriPoly is not tied to a
/// particular field until it is evaluated.
class TriPoly {
 public:
  using Terms = std::map<std::uint64_t, Elem>;

  TriPoly() = default;

  /// XOR-accumulates c into the coefficient of x^i y^j z^k.
  void add(Monomial mono, Elem c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Elem coefficient(Monomial mono) const;
  /// Max i+j+k; -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;

  /// Permutes variables: the result's variable perm[v] takes the exponent of v.
  TriPoly permuted(std::array<Var, 3> perm) const;

  /// Multiplies by (a + b) for distinct variables a, b.
  TriPoly times_linear(Var a, Var b) const;

  /// Terms as "coeff*x^i*y^j*z^k", one per line, graded-lex descending.
  std::string to_string() const;

  friend bool operator==(const TriPoly&, const TriPoly&) = default;

 private:
  Terms terms_;
};

/// f(x) + f(y) + f(z) + f(x+y+z), expanded with the characteristic-2 multinomial rule.
TriPoly numerator(const PolyFunc& f);

/// Exact quotient of numerator(f) by (x+y)(x+z)(y+z), by three successive
/// divisions. Throws std::invalid_argument if deg f < 3 or is a power of two;
/// throws InternalError if any division leaves a remainder.
TriPoly pf_polynomial(const NormalizedPolyFunc& f);
TriPoly pf_polynomial(const PolyFunc& f);

/// P_{x^d} over the prime field, homogeneous of degree d - 3.
TriPoly homogeneous_pf(std::uint64_t d);

/// Divides p by (lead + other) as a polynomial in `lead`; returns the quotient and
/// stores the remainder (terms free of `lead`) in *remainder.
TriPoly divide_linear(const TriPoly& p, Var lead, Var other, TriPoly* remainder);

Elem eval_tripoly(const Field& field, const TriPoly& p, Elem x, Elem y, Elem z);

/// Repeated evaluation of one polynomial with per-variable power tables.
class TriPolyEvaluator {
 public:
  TriPolyEvaluator(const Field& field, const TriPoly& p);
  Elem operator()(Elem x, Elem y, Elem z) const;

 private:
  struct Term {
    std::uint32_t i, j, k;
    Elem c;
  };
  const Field& field_;
  std::vector<Term> terms_;
  std::uint32_t max_i_ = 0, max_j_ = 0, max_k_ = 0;
  mutable std::vector<Elem> px_, py_, pz_;
};

}  // namespace diffu
