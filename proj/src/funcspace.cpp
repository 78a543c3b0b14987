#include "diffu/funcspace.hpp"

#include <algorithm>
#include <bit>

#include "diffu/errors.hpp"

namespace diffu {

std::uint32_t reduce_exponent(std::uint64_t e, std::uint32_t q) {
  if (e < q) return static_cast<std::uint32_t>(e);
  return static_cast<std::uint32_t>((e - 1) % (q - 1) + 1);
}

bool is_affine_exponent(std::uint64_t e) { return e == 0 || std::has_single_bit(e); }

PolyFunc::PolyFunc(Field field, std::span<const std::pair<std::uint64_t, Elem>> terms)
    : field_(std::move(field)) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

PolyFunc::PolyFunc(Field field, std::initializer_list<std::pair<std::uint64_t, Elem>> terms)
    : PolyFunc(std::move(field), std::span<const std::pair<std::uint64_t, Elem>>(terms.begin(), terms.size())) {}

PolyFunc PolyFunc::monomial(Field field, std::uint64_t d, Elem c) {
  PolyFunc f(std::move(field));
  f.add_term(d, c);
  return f;
}

void PolyFunc::add_term(std::uint64_t e, Elem c) {
  if (!field_.contains(c)) throw std::invalid_argument("coefficient " + to_hex(c) + " not in field");
  if (c == 0) return;
  const auto r = reduce_exponent(e, field_.order());
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, c);
  } else if ((it->second ^= c) == 0) {
    terms_.erase(it);
  }
}

Elem PolyFunc::coefficient(std::uint32_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<std::uint32_t> PolyFunc::monomial_exponent() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

Elem PolyFunc::operator()(Elem x) const {
  Elem acc = 0;
  for (const auto& [e, c] : terms_) acc ^= field_.mul(c, field_.pow(x, e));
  return acc;
}

std::vector<Elem> PolyFunc::value_table(simd::Backend be) const {
  const std::uint32_t q = field_.order();
  std::vector<Elem> table(q, coefficient(0));
  const std::uint32_t group = q - 1;
  const Elem g = field_.primitive();

  // f(g^i) accumulated in exponent order chunk by chunk, then scattered to index g^i.
  constexpr std::uint32_t kChunk = 1u << 14;
  std::vector<Elem> points(std::min(kChunk, group));
  std::vector<Elem> acc(points.size());
  std::vector<Elem> term(points.size());
  for (std::uint32_t i0 = 0; i0 < group; i0 += kChunk) {
    const std::uint32_t n = std::min(kChunk, group - i0);
    std::span<Elem> pts(points.data(), n), sum(acc.data(), n), tv(term.data(), n);
    simd::geometric(field_, field_.pow(g, i0), g, pts, be);
    std::fill(sum.begin(), sum.end(), coefficient(0));
    for (const auto& [e, c] : terms_) {
      if (e == 0) continue;
      const Elem ratio = field_.pow(g, e);
      simd::geometric(field_, field_.mul(c, field_.pow(ratio, i0)), ratio, tv, be);
      simd::xor_into(sum, tv, be);
    }
    for (std::uint32_t i = 0; i < n; ++i) table[pts[i]] = sum[i];
  }
  return table;
}

std::string PolyFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += to_hex(c);
      continue;
    }
    if (c != 1) out += to_hex(c) + "*";
    out += "x^" + std::to_string(e);
  }
  return out;
}

NormalizedPolyFunc NormalizedPolyFunc::from(PolyFunc f) {
  auto r = normalize(f);
  if (r.degenerate()) throw std::invalid_argument("degenerate function: " + r.reason);
  if (!(r.normalized->poly() == f)) {
    throw std::invalid_argument("function is not in normal form (has a constant or power-of-two term)");
  }
  return std::move(*r.normalized);
}

NormalizeResult normalize(const PolyFunc& f) {
  std::vector<std::pair<std::uint64_t, Elem>> kept;
  bool has_odd = false;
  for (const auto& [e, c] : f.terms()) {
    if (is_affine_exponent(e)) continue;
    kept.emplace_back(e, c);
    has_odd = has_odd || (e & 1u);
  }
  PolyFunc stripped(f.field(), kept);
  NormalizeResult result{stripped, std::nullopt, {}};
  if (stripped.is_zero()) {
    result.reason = "all terms are q-affine; the function is affine and delta = q";
  } else if (!has_odd) {
    result.reason = "no odd-degree term remains; the function is a square and not in normal form";
  } else {
    result.normalized = NormalizedPolyFunc(std::move(stripped));
  }
  return result;
}

PolyFunc affine_conjugate(const PolyFunc& f, Elem a, Elem b, Elem c) {
  const Field& F = f.field();
  if (a == 0 || c == 0) throw std::invalid_argument("affine_conjugate requires a != 0 and c != 0");
  if (!F.contains(a) || !F.contains(b) || !F.contains(c)) {
    throw std::invalid_argument("affine_conjugate: parameter not in field");
  }
  // (a x + b)^e = sum over submasks i of e of a^i b^(e-i) x^i (Lucas).
  std::map<std::uint32_t, Elem> acc;
  for (const auto [e, ce] : f.terms()) {
    const Elem scale = F.mul(c, ce);
    for (std::uint32_t i = e;; i = (i - 1) & e) {
      acc[i] ^= F.mul(scale, F.mul(F.pow(a, i), F.pow(b, e - i)));
      if (i == 0) break;
    }
  }
  std::vector<std::pair<std::uint64_t, Elem>> terms(acc.begin(), acc.end());
  return PolyFunc(F, terms);
}

PolyFunc square_function(const PolyFunc& f) {
  const Field& F = f.field();
  std::vector<std::pair<std::uint64_t, Elem>> terms;
  terms.reserve(f.terms().size());
  for (const auto [e, c] : f.terms()) terms.emplace_back(std::uint64_t{2} * e, F.sqr(c));
  return PolyFunc(F, terms);
}

PolyFunc square_root_function(const PolyFunc& f) {
  // Squaring is a bijection of order m on functions, so m-1 squarings invert it.
  PolyFunc g = f;
  for (unsigned i = 1; i < f.field().degree(); ++i) g = square_function(g);
  return g;
}

NormalizeResult normalize_up_to_squares(const PolyFunc& f, unsigned* roots_taken) {
  auto r = normalize(f);
  unsigned roots = 0;
  // Each root halves every exponent; a non-affine exponent turns odd within m steps.
  while (r.degenerate() && !r.stripped.is_zero() && roots < f.field().degree()) {
    r = normalize(square_root_function(r.stripped));
    ++roots;
  }
  if (roots_taken) *roots_taken = roots;
  return r;
}

PolyFunc interpolate(const Field& field, std::span<const Elem> table) {
  const std::uint32_t q = field.order();
  if (table.size() != q) {
    throw std::invalid_argument("interpolate: table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(q));
  }
  if (field.degree() > kMaxInterpolateDegree) {
    throw ResourceLimit("interpolation is limited to m <= " + std::to_string(kMaxInterpolateDegree));
  }
  for (Elem v : table) {
    if (!field.contains(v)) throw std::invalid_argument("interpolate: value " + to_hex(v) + " not in field");
  }
  // f = sum_a T[a] (1 + (x + a)^(q-1)); expanding (x+a)^(q-1) = sum_k x^k a^(q-1-k)
  // gives c_0 = T[0] and c_k = sum_a T[a] a^(q-1-k) for k >= 1 (with 0^0 = 1).
  const std::uint32_t group = q - 1;
  const Elem g = field.primitive();
  std::vector<Elem> points(group), values(group), powers(group), prod(group);
  simd::geometric(field, 1, g, points);
  for (std::uint32_t i = 0; i < group; ++i) values[i] = table[points[i]];

  std::vector<std::pair<std::uint64_t, Elem>> terms;
  terms.emplace_back(0, table[0]);
  for (std::uint32_t k = 1; k < q; ++k) {
    const std::uint32_t j = q - 1 - k;
    // powers[i] = (g^i)^j
    simd::geometric(field, 1, field.pow(g, j), powers);
    simd::mul(field, values, powers, prod);
    Elem c = 0;
    for (Elem v : prod) c ^= v;
    if (k == q - 1) c ^= table[0];
    terms.emplace_back(k, c);
  }
  return PolyFunc(field, terms);
}

}  // namespace diffu
