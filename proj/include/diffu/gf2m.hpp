#pragma once

// Arithmetic in the binary field F_{2^m}, polynomial basis.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diffu {

/// A field element: coefficient bits in the polynomial basis, value < 2^m.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
 public:
  explicit FieldError(const std::string& what, std::optional<std::uint64_t> factor = {})
      : std::invalid_argument(what), factor_(factor) {}

  /// A nontrivial factor of a rejected modulus, when the modulus was reducible.
  std::optional<std::uint64_t> factor() const { return factor_; }

 private:
  std::optional<std::uint64_t> factor_;
};

/// Polynomials over F_2 packed into 64-bit words (bit i = coefficient of x^i).
namespace gf2poly {

int degree(std::uint64_t p);
std::uint64_t mod(std::uint64_t a, std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Ben-Or test: p is irreducible iff gcd(x^(2^i) - x, p) = 1 for 1 <= i <= deg(p)/2.
bool is_irreducible(std::uint64_t p);

/// Smallest (as an integer) nontrivial factor of p, or nullopt if p is irreducible.
std::optional<std::uint64_t> smallest_factor(std::uint64_t p);

}  // namespace gf2poly

/// Immutable description of F_{2^m}. Copies share the lookup tables.
class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 24;
  /// Log/antilog tables are built only up to this degree.
  static constexpr unsigned kMaxTableDegree = 16;

  /// Validates the modulus (or picks the built-in default) and builds the field.
  /// Throws FieldError for an out-of-range degree or a reducible/malformed modulus.
  static Field make(unsigned m, std::optional<std::uint32_t> modulus = std::nullopt);

  unsigned degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  /// q = 2^m.
  std::uint32_t order() const { return std::uint32_t{1} << m_; }
  Elem mask() const { return order() - 1; }
  bool contains(Elem a) const { return a < order(); }
  bool has_tables() const { return tables_ != nullptr; }
  /// A generator of the multiplicative group, fixed at construction.
  Elem primitive() const { return primitive_; }
  std::string modulus_hex() const;

  static Elem add(Elem a, Elem b) { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    if (tables_) {
      if (a == 0 || b == 0) return 0;
      return tables_->exp[tables_->log[a] + tables_->log[b]];
    }
    return mul_shift_reduce(a, b);
  }

  Elem sqr(Elem a) const { return mul(a, a); }

  /// a^e with 0^0 = 1. For a != 0 the exponent acts modulo q-1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// Multiplicative inverse, computed as a^(q-2). Throws std::domain_error for a = 0.
  Elem inv(Elem a) const;

  /// Carry-less product reduced by the modulus, one bit of b at a time.
  Elem mul_shift_reduce(Elem a, Elem b) const {
    Elem acc = 0;
    const Elem top = order();
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
      acc <<= 1;
      if (acc & top) acc ^= modulus_;
      if ((b >> i) & 1u) acc ^= a;
    }
    return acc;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Elem> exp;           // length 2(q-1), so log sums need no reduction
  };

  Field(unsigned m, std::uint32_t modulus);

  unsigned m_;
  std::uint32_t modulus_;
  Elem primitive_ = 0;
  std::shared_ptr<const Tables> tables_;
};

/// Built-in default modulus for degree m: the lexicographically smallest
/// irreducible polynomial of that degree.
std::uint32_t default_modulus(unsigned m);

/// Parses a modulus table ("m: 0xHEX" per line, '#' comments) and validates
/// every entry. Throws FieldError on malformed lines or reducible entries.
std::map<unsigned, std::uint32_t> parse_modulus_table(std::string_view text);
std::map<unsigned, std::uint32_t> load_modulus_table(const std::string& path);

/// Path of the versioned text copy of the built-in table shipped with the sources.
std::string default_modulus_table_path();

/// Parses "0x..." or bare hex.
std::optional<std::uint64_t> parse_hex(std::string_view s);
std::string to_hex(std::uint64_t v);

}  // namespace diffu
