#include "diffu/gf2m.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace diffu {

namespace gf2poly {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t p) {
  const int dp = degree(p);
  if (dp < 0) throw std::domain_error("gf2poly::mod by zero");
  for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const int dp = degree(p);
  a = mod(a, p);
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (degree(a) == dp) a ^= p;
  }
  return acc;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  const int n = degree(p);
  if (n < 1) return false;
  if (n == 1) return true;
  std::uint64_t h = 2;  // x
  for (int i = 1; i <= n / 2; ++i) {
    h = mulmod(h, h, p);
    if (gcd(h ^ 2, p) != 1) return false;
  }
  return true;
}

std::optional<std::uint64_t> smallest_factor(std::uint64_t p) {
  const int n = degree(p);
  if (n < 2) return std::nullopt;
  const std::uint64_t limit = std::uint64_t{1} << (n / 2 + 1);
  for (std::uint64_t g = 2; g < limit; ++g) {
    if (mod(p, g) == 0) return g;
  }
  return std::nullopt;
}

}  // namespace gf2poly

namespace {

constexpr std::uint32_t kDefaultModuli[Field::kMaxDegree + 1] = {
    0,         0,        0x7,      0xb,      0x13,     0x25,     0x43,
    0x83,      0x11b,    0x203,    0x409,    0x805,    0x1009,   0x201b,
    0x4021,    0x8003,   0x1002b,  0x20009,  0x40009,  0x80027,  0x100009,
    0x200005,  0x400003, 0x800021, 0x100001b,
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_degree(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw FieldError("field degree " + std::to_string(m) + " out of range [" +
                     std::to_string(Field::kMinDegree) + ", " +
                     std::to_string(Field::kMaxDegree) + "]");
  }
}

}  // namespace

std::uint32_t default_modulus(unsigned m) {
  check_degree(m);
  return kDefaultModuli[m];
}

Field Field::make(unsigned m, std::optional<std::uint32_t> modulus) {
  check_degree(m);
  const std::uint32_t p = modulus.value_or(kDefaultModuli[m]);
  if (gf2poly::degree(p) != static_cast<int>(m)) {
    throw FieldError("modulus " + to_hex(p) + " does not have degree " + std::to_string(m));
  }
  if (!gf2poly::is_irreducible(p)) {
    const auto factor = gf2poly::smallest_factor(p);
    throw FieldError("modulus " + to_hex(p) + " is reducible: divisible by " +
                         to_hex(factor.value_or(0)),
                     factor);
  }
  return Field(m, p);
}

Field::Field(unsigned m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  const std::uint64_t group = order() - 1;
  const auto primes = prime_factors(group);
  for (Elem g = 2; g < order(); ++g) {
    bool generator = true;
    for (auto p : primes) {
      if (pow(g, group / p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      primitive_ = g;
      break;
    }
  }

  if (m_ <= kMaxTableDegree) {
    auto t = std::make_shared<Tables>();
    t->log.assign(order(), 0);
    t->exp.assign(2 * group, 0);
    Elem v = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      t->exp[i] = v;
      t->exp[i + group] = v;
      t->log[v] = i;
      v = mul_shift_reduce(v, primitive_);
    }
    tables_ = std::move(t);
  }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order() - 1;
  e %= group;
  if (e == 0) return 1;
  if (tables_) {
    return tables_->exp[(static_cast<std::uint64_t>(tables_->log[a]) * e) % group];
  }
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, order() - 2);
}

std::string Field::modulus_hex() const { return to_hex(modulus_); }

std::optional<std::uint64_t> parse_hex(std::string_view s) {
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string to_hex(std::uint64_t v) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  (void)ec;
  std::string out = "0x";
  for (char* c = buf; c != ptr; ++c) out += static_cast<char>(std::toupper(*c));
  return out;
}

}  // namespace diffu
