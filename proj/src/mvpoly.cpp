#include "diffu/mvpoly.hpp"

#include <algorithm>
#include <bit>

#include "diffu/errors.hpp"

namespace diffu {

namespace {

std::uint32_t get(const Monomial& m, Var v) {
  switch (v) {
    case Var::kX: return m.i;
    case Var::kY: return m.j;
    case Var::kZ: return m.k;
  }
  return 0;
}

void set(Monomial& m, Var v, std::uint32_t e) {
  switch (v) {
    case Var::kX: m.i = e; break;
    case Var::kY: m.j = e; break;
    case Var::kZ: m.k = e; break;
  }
}

Var third_var(Var a, Var b) { return static_cast<Var>(3 - static_cast<int>(a) - static_cast<int>(b)); }

void check_exponent(std::uint64_t e) {
  if (e > Monomial::kMaxExponent) {
    throw std::invalid_argument("exponent " + std::to_string(e) + " exceeds the trivariate key width");
  }
}

/// Adds c * ((x+y+z)^e - x^e - y^e - z^e) to p. A monomial x^i y^j z^k of
/// (x+y+z)^e has odd multinomial coefficient iff i, j, k split the bits of e.
void add_numerator_term(TriPoly& p, std::uint32_t e, Elem c) {
  check_exponent(e);
  for (std::uint32_t i = e;; i = (i - 1) & e) {
    const std::uint32_t rest = e ^ i;
    for (std::uint32_t j = rest;; j = (j - 1) & rest) {
      const std::uint32_t k = rest ^ j;
      if (i != e && j != e && k != e) p.add({i, j, k}, c);
      if (j == 0) break;
    }
    if (i == 0) break;
  }
}

void check_pf_degree(std::uint64_t d) {
  if (d < 3 || std::has_single_bit(d)) {
    throw std::invalid_argument("P_f needs a degree >= 3 that is not a power of two, got " + std::to_string(d));
  }
}

TriPoly divide_all(const TriPoly& num) {
  TriPoly rem;
  TriPoly q1 = divide_linear(num, Var::kX, Var::kY, &rem);
  if (!rem.is_zero()) throw InternalError("numerator not divisible by (x+y)");
  TriPoly q2 = divide_linear(q1, Var::kX, Var::kZ, &rem);
  if (!rem.is_zero()) throw InternalError("numerator not divisible by (x+z)");
  TriPoly q3 = divide_linear(q2, Var::kY, Var::kZ, &rem);
  if (!rem.is_zero()) throw InternalError("numerator not divisible by (y+z)");
  return q3;
}

}  // namespace

void TriPoly::add(Monomial mono, Elem c) {
  if (c == 0) return;
  check_exponent(std::max({mono.i, mono.j, mono.k}));
  const auto key = mono.pack();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else if ((it->second ^= c) == 0) {
    terms_.erase(it);
  }
}

Elem TriPoly::coefficient(Monomial mono) const {
  auto it = terms_.find(mono.pack());
  return it == terms_.end() ? 0 : it->second;
}

long TriPoly::total_degree() const {
  long d = -1;
  for (const auto& [key, c] : terms_) d = std::max<long>(d, Monomial::unpack(key).total_degree());
  return d;
}

bool TriPoly::is_homogeneous() const {
  const long d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return Monomial::unpack(t.first).total_degree() == d; });
}

TriPoly TriPoly::permuted(std::array<Var, 3> perm) const {
  TriPoly out;
  for (const auto& [key, c] : terms_) {
    const Monomial m = Monomial::unpack(key);
    Monomial r;
    set(r, perm[0], m.i);
    set(r, perm[1], m.j);
    set(r, perm[2], m.k);
    out.add(r, c);
  }
  return out;
}

TriPoly TriPoly::times_linear(Var a, Var b) const {
  if (a == b) throw std::invalid_argument("times_linear needs two distinct variables");
  TriPoly out;
  for (const auto& [key, c] : terms_) {
    Monomial ma = Monomial::unpack(key), mb = ma;
    set(ma, a, get(ma, a) + 1);
    set(mb, b, get(mb, b) + 1);
    out.add(ma, c);
    out.add(mb, c);
  }
  return out;
}

std::string TriPoly::to_string() const {
  std::vector<Monomial> monos;
  monos.reserve(terms_.size());
  for (const auto& [key, c] : terms_) monos.push_back(Monomial::unpack(key));
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.pack() > b.pack();
  });
  std::string out;
  for (const auto& m : monos) {
    out += to_hex(coefficient(m)) + "*x^" + std::to_string(m.i) + "*y^" + std::to_string(m.j) + "*z^" +
           std::to_string(m.k) + "\n";
  }
  return out;
}

TriPoly divide_linear(const TriPoly& p, Var lead, Var other, TriPoly* remainder) {
  if (lead == other) throw std::invalid_argument("divide_linear needs two distinct variables");
  const Var third = third_var(lead, other);
  const auto key = [&](const Monomial& m) {
    return Monomial{get(m, lead), get(m, other), get(m, third)}.pack();
  };
  const auto unkey = [&](std::uint64_t k) {
    const Monomial t = Monomial::unpack(k);
    Monomial m;
    set(m, lead, t.i);
    set(m, other, t.j);
    set(m, third, t.k);
    return m;
  };

  // Long division by lead + other, highest power of `lead` first:
  // c*lead^e*r = c*lead^(e-1)*r*(lead + other) + c*lead^(e-1)*other*r.
  std::map<std::uint64_t, Elem> work;
  for (const auto& [k, c] : p.terms()) work[key(Monomial::unpack(k))] = c;
  TriPoly quotient;
  TriPoly rem;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const Monomial t = Monomial::unpack(it->first);
    const Elem c = it->second;
    work.erase(it);
    if (t.i == 0) {
      rem.add(unkey(Monomial{t.i, t.j, t.k}.pack()), c);
      continue;
    }
    quotient.add(unkey(Monomial{t.i - 1, t.j, t.k}.pack()), c);
    const auto next = Monomial{t.i - 1, t.j + 1, t.k}.pack();
    if ((work[next] ^= c) == 0) work.erase(next);
  }
  if (remainder) *remainder = std::move(rem);
  return quotient;
}

TriPoly numerator(const PolyFunc& f) {
  TriPoly p;
  for (const auto& [e, c] : f.terms()) add_numerator_term(p, e, c);
  return p;
}

TriPoly pf_polynomial(const PolyFunc& f) {
  check_pf_degree(f.degree());
  return divide_all(numerator(f));
}

TriPoly pf_polynomial(const NormalizedPolyFunc& f) { return pf_polynomial(f.poly()); }

TriPoly homogeneous_pf(std::uint64_t d) {
  check_pf_degree(d);
  check_exponent(d);
  TriPoly num;
  add_numerator_term(num, static_cast<std::uint32_t>(d), 1);
  return divide_all(num);
}

Elem eval_tripoly(const Field& field, const TriPoly& p, Elem x, Elem y, Elem z) {
  Elem acc = 0;
  for (const auto& [key, c] : p.terms()) {
    const Monomial m = Monomial::unpack(key);
    acc ^= field.mul(c, field.mul(field.pow(x, m.i), field.mul(field.pow(y, m.j), field.pow(z, m.k))));
  }
  return acc;
}

TriPolyEvaluator::TriPolyEvaluator(const Field& field, const TriPoly& p) : field_(field) {
  for (const auto& [key, c] : p.terms()) {
    const Monomial m = Monomial::unpack(key);
    terms_.push_back({m.i, m.j, m.k, c});
    max_i_ = std::max(max_i_, m.i);
    max_j_ = std::max(max_j_, m.j);
    max_k_ = std::max(max_k_, m.k);
  }
  px_.resize(max_i_ + 1);
  py_.resize(max_j_ + 1);
  pz_.resize(max_k_ + 1);
}

Elem TriPolyEvaluator::operator()(Elem x, Elem y, Elem z) const {
  const auto powers = [this](std::vector<Elem>& out, Elem v) {
    out[0] = 1;
    for (std::size_t e = 1; e < out.size(); ++e) out[e] = field_.mul(out[e - 1], v);
  };
  powers(px_, x);
  powers(py_, y);
  powers(pz_, z);
  Elem acc = 0;
  for (const auto& t : terms_) acc ^= field_.mul(t.c, field_.mul(px_[t.i], field_.mul(py_[t.j], pz_[t.k])));
  return acc;
}

}  // namespace diffu
