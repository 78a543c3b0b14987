#pragma once

// Polynomial functions F_q -> F_q and the transformations that leave the
// differential uniformity unchanged.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffu/gf2m.hpp"
#include "diffu/simd.hpp"

namespace diffu {

/// Maps an exponent to the one representing the same function on F_q:
/// 0 stays 0, e >= q becomes ((e - 1) mod (q - 1)) + 1.
std::uint32_t reduce_exponent(std::uint64_t e, std::uint32_t q);

/// True for exponent 0 and for powers of two (the monomials of a q-affine polynomial).
bool is_affine_exponent(std::uint64_t e);

/// A polynomial function on F_q stored as sparse exponent -> nonzero coefficient.
/// Exponents are always reduced below q.
class PolyFunc {
 public:
  using Terms = std::map<std::uint32_t, Elem>;

  /// The zero function.
  explicit PolyFunc(Field field) : field_(std::move(field)) {}

  /// Reduces exponents, sums colliding coefficients and drops zeros.
  PolyFunc(Field field, std::span<const std::pair<std::uint64_t, Elem>> terms);
  PolyFunc(Field field, std::initializer_list<std::pair<std::uint64_t, Elem>> terms);

  static PolyFunc monomial(Field field, std::uint64_t d, Elem c = 1);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest exponent; 0 for constants and the zero function.
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Elem coefficient(std::uint32_t e) const;
  /// The exponent when f = c*x^d with a single term.
  std::optional<std::uint32_t> monomial_exponent() const;

  Elem operator()(Elem x) const;

  /// f(x) for every x in F_q, indexed by x.
  std::vector<Elem> value_table(simd::Backend be = simd::active_backend()) const;

  /// Rendering in the CLI grammar, highest exponent first.
  std::string to_string() const;

  friend bool operator==(const PolyFunc& a, const PolyFunc& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(std::uint64_t e, Elem c);

  Field field_;
  Terms terms_;
};

inline Elem evaluate(const PolyFunc& f, Elem x) { return f(x); }

/// f with no constant term, no power-of-two exponent and at least one odd exponent.
class NormalizedPolyFunc {
 public:
  const PolyFunc& poly() const { return poly_; }
  const Field& field() const { return poly_.field(); }
  std::uint32_t degree() const { return poly_.degree(); }

  /// Throws std::invalid_argument when f does not satisfy the normal form as-is.
  static NormalizedPolyFunc from(PolyFunc f);

  friend bool operator==(const NormalizedPolyFunc& a, const NormalizedPolyFunc& b) {
    return a.poly_ == b.poly_;
  }

 private:
  explicit NormalizedPolyFunc(PolyFunc f) : poly_(std::move(f)) {}
  friend struct NormalizeResult normalize(const PolyFunc& f);

  PolyFunc poly_;
};

struct NormalizeResult {
  /// f with the q-affine part removed, whether or not it is degenerate.
  PolyFunc stripped;
  /// Set unless the stripped function is zero or has no odd exponent.
  std::optional<NormalizedPolyFunc> normalized;
  bool degenerate() const { return !normalized.has_value(); }
  std::string reason;
};

/// Removes the constant term and every power-of-two monomial.
NormalizeResult normalize(const PolyFunc& f);

/// x -> c * f(a*x + b). Throws std::invalid_argument when a = 0 or c = 0.
PolyFunc affine_conjugate(const PolyFunc& f, Elem a, Elem b, Elem c);

/// x -> f(x)^2.
PolyFunc square_function(const PolyFunc& f);

/// The g with g^2 = f pointwise.
PolyFunc square_root_function(const PolyFunc& f);

/// normalize(), then square roots of the stripped part until an odd exponent
/// appears. delta is unchanged by every step. Degenerate only when f is q-affine.
NormalizeResult normalize_up_to_squares(const PolyFunc& f, unsigned* roots_taken = nullptr);

/// The unique polynomial of degree <= q-1 with f(x) = table[x]. O(q^2); m <= 12.
PolyFunc interpolate(const Field& field, std::span<const Elem> table);

inline constexpr unsigned kMaxInterpolateDegree = 12;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument("at column " + std::to_string(position + 1) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "x^d" or a '+'-joined list of terms "hexcoeff*x^e" (also "x", "x^e",
/// "hexcoeff*x", bare "hexcoeff"). Whitespace is ignored; exponents are decimal.
PolyFunc parse_function(const Field& field, std::string_view text);

/// One hex element per line; blank lines and '#' comments are skipped.
std::vector<Elem> parse_value_table(const Field& field, std::string_view text);

}  // namespace diffu
