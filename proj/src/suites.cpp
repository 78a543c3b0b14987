#include "diffu/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "diffu/bounds.hpp"
#include "diffu/geometry.hpp"
#include "diffu/mvpoly.hpp"
#include "diffu/uniformity.hpp"
#include "parallel.hpp"

namespace diffu {

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::kPass: return "PASS";
    case CaseStatus::kFail: return "FAIL";
    case CaseStatus::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool SuiteResult::passed() const { return count(CaseStatus::kFail) == 0; }

std::size_t SuiteResult::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

Elem random_nonzero(const Field& field, SplitMix64& rng) {
  return static_cast<Elem>(1 + rng.below(field.order() - 1));
}

NormalizedPolyFunc random_normalized(const Field& field, std::uint32_t max_degree, SplitMix64& rng) {
  const std::uint32_t top = std::min(max_degree, field.order() - 1);
  for (;;) {
    std::vector<std::pair<std::uint64_t, Elem>> terms;
    for (std::uint32_t e = 3; e <= top; ++e) {
      if (is_affine_exponent(e) || rng.below(2) == 0) continue;
      terms.emplace_back(e, random_nonzero(field, rng));
    }
    auto r = normalize(PolyFunc(field, terms));
    if (!r.degenerate()) return std::move(*r.normalized);
  }
}

NormalizedPolyFunc random_odd_leading(const Field& field, std::uint32_t max_leading, SplitMix64& rng) {
  const std::uint32_t top = std::min(max_leading, field.order() - 1);
  const std::uint32_t odd_count = (top - 1) / 2;  // odd values 3, 5, ..., <= top
  const std::uint32_t lead = 3 + 2 * static_cast<std::uint32_t>(rng.below(odd_count));
  std::vector<std::pair<std::uint64_t, Elem>> terms{{lead, random_nonzero(field, rng)}};
  for (std::uint32_t e = 3; e < lead; ++e) {
    if (is_affine_exponent(e) || rng.below(2) == 0) continue;
    terms.emplace_back(e, random_nonzero(field, rng));
  }
  return NormalizedPolyFunc::from(PolyFunc(field, terms));
}

namespace {

std::vector<unsigned> degrees(const SuiteOptions& o, std::vector<unsigned> defaults) {
  if (o.m) return {*o.m};
  return defaults;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 s(seed ^ (salt * 0x9E3779B97F4A7C15ull));
  return s.next();
}

CaseResult verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CaseStatus::kPass : CaseStatus::kFail, std::move(detail)};
}

std::string field_label(const Field& f) { return "m=" + std::to_string(f.degree()); }

// delta(f) <= 4 iff X(F_q) lies in V, cross-checked three ways.
SuiteResult suite_equivalence(const SuiteOptions& o) {
  SuiteResult r{"equivalence", "delta <= 4 iff X(F_q) within V, on monomials and random polynomials", {}};
  for (unsigned m : degrees(o, {3, 4, 5})) {
    const Field field = Field::make(m);
    const std::uint32_t q = field.order();
    std::size_t total = 0, agree = 0;
    std::string first_bad;
    const auto check = [&](const NormalizedPolyFunc& f) {
      const auto res = equivalence_details(f);
      ++total;
      bool ok = res.agree();
      if (res.geometry.violation) ok = ok && is_violation(f.poly(), *res.geometry.violation) && res.delta >= 6;
      if (ok) {
        ++agree;
      } else if (first_bad.empty()) {
        first_bad = f.poly().to_string() + " (delta " + std::to_string(res.delta) + ")";
      }
    };
    for (std::uint32_t d = 3; d <= q - 2; d += 2) check(NormalizedPolyFunc::from(PolyFunc::monomial(field, d)));
    SplitMix64 rng(mix_seed(o.seed, m));
    for (int i = 0; i < 200; ++i) check(random_normalized(field, 9, rng));
    r.cases.push_back(verdict(field_label(field) + " monomials+200 random", agree == total,
                              std::to_string(agree) + "/" + std::to_string(total) + " agree" +
                                  (first_bad.empty() ? "" : "; first disagreement " + first_bad)));
  }
  return r;
}

SuiteResult suite_inverse(const SuiteOptions& o) {
  SuiteResult r{"inverse", "delta(x^(q-2)) is 4 for even m and 2 for odd m", {}};
  for (unsigned m : degrees(o, {3, 4, 5, 6, 7, 8})) {
    const Field field = Field::make(m);
    const auto rep = delta_exhaustive(PolyFunc::monomial(field, field.order() - 2));
    const std::uint32_t expect = m % 2 == 0 ? 4 : 2;
    r.cases.push_back(verdict(field_label(field) + " x^" + std::to_string(field.order() - 2), rep.delta == expect,
                              "delta " + std::to_string(rep.delta) + ", expected " + std::to_string(expect)));
  }
  return r;
}

PolyFunc random_function(const Field& field, SplitMix64& rng) {
  std::vector<std::pair<std::uint64_t, Elem>> terms;
  const int n = 1 + static_cast<int>(rng.below(4));
  for (int i = 0; i < n; ++i) terms.emplace_back(rng.below(field.order()), random_nonzero(field, rng));
  return PolyFunc(field, terms);
}

SuiteResult suite_invariances(const SuiteOptions& o) {
  SuiteResult r{"invariances", "delta unchanged by q-affine addition, affine conjugation and squaring", {}};
  for (unsigned m : degrees(o, {3, 4, 5, 6})) {
    const Field field = Field::make(m);
    SplitMix64 rng(mix_seed(o.seed, 100 + m));
    int ok = 0;
    std::string first_bad;
    for (int i = 0; i < 100; ++i) {
      const PolyFunc f = random_function(field, rng);
      std::vector<std::pair<std::uint64_t, Elem>> terms(f.terms().begin(), f.terms().end());
      terms.emplace_back(0, static_cast<Elem>(rng.below(field.order())));
      for (unsigned k = 0; k < m; ++k)
        if (rng.below(2)) terms.emplace_back(std::uint64_t{1} << k, random_nonzero(field, rng));
      const PolyFunc plus_affine(field, terms);
      const Elem a = random_nonzero(field, rng), b = static_cast<Elem>(rng.below(field.order())),
                 c = random_nonzero(field, rng);
      const PolyFunc conj = affine_conjugate(f, a, b, c);
      const PolyFunc sq = square_function(f);

      const auto base = delta_exhaustive(f).delta;
      const auto d1 = delta_exhaustive(plus_affine).delta;
      const auto d2 = delta_exhaustive(conj).delta;
      const auto d3 = delta_exhaustive(sq).delta;
      if (base == d1 && base == d2 && base == d3) {
        ++ok;
      } else if (first_bad.empty()) {
        std::ostringstream ss;
        ss << "f=" << f.to_string() << " delta " << base << " vs " << d1 << "/" << d2 << "/" << d3;
        first_bad = ss.str();
      }
    }
    r.cases.push_back(verdict(field_label(field) + " 100 instances", ok == 100,
                              std::to_string(ok) + "/100 invariant" + (first_bad.empty() ? "" : "; " + first_bad)));
  }
  return r;
}

SuiteResult suite_pf(const SuiteOptions& o) {
  SuiteResult r{"pf", "P_f * (x+y)(x+z)(y+z) = numerator and deg P_f = deg f - 3", {}};
  for (unsigned m : degrees(o, {4, 5, 6, 7, 8})) {
    const Field field = Field::make(m);
    SplitMix64 rng(mix_seed(o.seed, 200 + m));
    int ok = 0;
    std::string first_bad;
    for (int i = 0; i < 50; ++i) {
      const auto f = random_odd_leading(field, 31, rng);
      const TriPoly p = pf_polynomial(f);
      const TriPoly back = p.times_linear(Var::kX, Var::kY).times_linear(Var::kX, Var::kZ).times_linear(Var::kY, Var::kZ);
      const bool good = back == numerator(f.poly()) && p.total_degree() == static_cast<long>(f.degree()) - 3;
      if (good) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = f.poly().to_string();
      }
    }
    r.cases.push_back(verdict(field_label(field) + " 50 polynomials", ok == 50,
                              std::to_string(ok) + "/50 exact" + (first_bad.empty() ? "" : "; first failure " + first_bad)));
  }
  return r;
}

SuiteResult suite_weil(const SuiteOptions& o) {
  SuiteResult r{"weil", "#C(F_q) inside q + 1 -/+ 2 g sqrt(q) for C : P_{x^d} = 0", {}};
  const auto run = [&](std::uint64_t d, unsigned m) {
    const Field field = Field::make(m);
    const auto count = proj_curve_points(d, field);
    const auto [lo, hi] = weil_interval(field.order(), arithmetic_genus(static_cast<std::int64_t>(d)));
    const bool ok = static_cast<std::int64_t>(count) >= lo && static_cast<std::int64_t>(count) <= hi;
    r.cases.push_back(verdict("d=" + std::to_string(d) + " " + field_label(field), ok,
                              "count " + std::to_string(count) + " in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]"));
  };
  for (unsigned m : degrees(o, {4, 5, 6, 7, 8, 9, 10})) run(7, m);
  for (unsigned m : degrees(o, {6, 7, 8, 9, 10, 11, 12})) run(15, m);
  return r;
}

SuiteResult suite_structural(const SuiteOptions& o) {
  SuiteResult r{"structural", "vertex, intercurve, projection and component-plane checks for x^d", {}};
  for (std::uint64_t d : {7u, 15u}) {
    for (unsigned m : degrees(o, {4, 5, 6, 7, 8})) {
      const Field field = Field::make(m);
      const auto s = structural_checks(d, field);
      std::ostringstream ss;
      ss << "vertex=" << s.vertex << " intercurve=" << s.intercurve << " projection=" << s.projection
         << " component_plane=" << s.component_plane << " #C7=" << s.c7_points << " #C=" << s.c_points;
      r.cases.push_back(verdict("d=" + std::to_string(d) + " " + field_label(field), s.all(), ss.str()));
    }
  }
  return r;
}

SuiteResult suite_borne1(const SuiteOptions& o) {
  SuiteResult r{"borne1", "delta(x^d) >= 6 wherever the monomial bound applies", {}};
  const auto run = [&](std::int64_t d, unsigned m) {
    const bool applies = monomial_theorem_applies(d, m);
    const Field field = Field::make(m);
    const auto rep = delta_monomial(static_cast<std::uint64_t>(d), field);
    r.cases.push_back(verdict("d=" + std::to_string(d) + " " + field_label(field), applies && rep.delta >= 6,
                              std::string("bound applies=") + (applies ? "yes" : "no") + ", delta " +
                                  std::to_string(rep.delta)));
  };
  const std::vector<std::pair<std::int64_t, std::vector<unsigned>>> plan = {
      {7, {7, 8, 9, 10, 11, 12, 13, 14, 15, 16}}, {15, {14, 15, 16}}, {31, {19, 20}}};
  for (const auto& [d, ms] : plan) {
    for (unsigned m : ms) {
      if (o.m && *o.m != m) continue;
      run(d, m);
    }
  }
  return r;
}

/// #{x : f(x + alpha) + f(x) = beta} by direct evaluation of f.
std::uint64_t recount(const PolyFunc& f, Elem alpha, Elem beta) {
  const std::uint32_t q = f.field().order();
  std::vector<std::uint64_t> partial(detail::worker_count(), 0);
  detail::parallel_chunks(
      0, q,
      [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) {
          const Elem e = static_cast<Elem>(x);
          partial[k] += (f(e ^ alpha) ^ f(e)) == beta;
        }
      },
      static_cast<unsigned>(partial.size()));
  std::uint64_t n = 0;
  for (auto v : partial) n += v;
  return n;
}

SuiteResult suite_lawe(const SuiteOptions& o) {
  SuiteResult r{"lawe", "sampled witness search for delta > 4 on random degree-7 polynomials", {}};
  const unsigned m = o.m.value_or(22);
  const Field field = Field::make(m);
  SplitMix64 rng(mix_seed(o.seed, 300 + m));
  for (int i = 0; i < 3; ++i) {
    std::vector<std::pair<std::uint64_t, Elem>> terms{{7, random_nonzero(field, rng)}};
    for (std::uint64_t e : {6u, 5u, 3u}) terms.emplace_back(e, static_cast<Elem>(rng.below(field.order())));
    const auto f = NormalizedPolyFunc::from(PolyFunc(field, terms));
    const std::uint64_t sample_seed = rng.next();
    const auto rep = delta_sampled(f.poly(), {10000, sample_seed, 6});
    const std::string name = "f" + std::to_string(i) + " " + field_label(field) + " " + f.poly().to_string();
    if (rep.delta < 6) {
      r.cases.push_back({name, CaseStatus::kInconclusive,
                         "no row with >= 6 solutions in " + std::to_string(rep.rows_examined) + " rows"});
      continue;
    }
    const auto n = recount(f.poly(), rep.witness_alpha, rep.witness_beta);
    r.cases.push_back(verdict(name, n == rep.delta && n >= 6,
                              "witness alpha=" + to_hex(rep.witness_alpha) + " beta=" + to_hex(rep.witness_beta) +
                                  " count " + std::to_string(rep.delta) + ", recount " + std::to_string(n) +
                                  " after " + std::to_string(rep.rows_examined) + " rows"));
  }
  return r;
}

/// #X(F_q) by filtering all of F_q^4 with the quotient equations.
std::uint64_t naive_x_count(const Field& field, const TriPoly& p) {
  const std::uint32_t q = field.order();
  std::uint64_t n = 0;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y)
      for (Elem z = 0; z < q; ++z)
        for (Elem t = 0; t < q; ++t)
          n += eval_tripoly(field, p, x, y, z) == 0 && eval_tripoly(field, p, x, y, t) == 0;
  return n;
}

SuiteResult suite_oracles(const SuiteOptions& o) {
  SuiteResult r{"oracles", "monomial fast path vs exhaustive DDT; #X vs a naive q^4 filter", {}};
  for (unsigned m : degrees(o, {3, 4, 5, 6, 7, 8})) {
    const Field field = Field::make(m);
    std::size_t total = 0, same = 0;
    std::string first_bad;
    for (std::uint32_t d = 3; d <= field.order() - 2; ++d) {
      const auto fast = delta_monomial(d, field);
      const auto slow = delta_exhaustive(PolyFunc::monomial(field, d));
      ++total;
      if (fast.delta == slow.delta && fast.witness_alpha == slow.witness_alpha &&
          fast.witness_beta == slow.witness_beta) {
        ++same;
      } else if (first_bad.empty()) {
        first_bad = "d=" + std::to_string(d);
      }
    }
    r.cases.push_back(verdict("delta_monomial " + field_label(field), same == total,
                              std::to_string(same) + "/" + std::to_string(total) + " agree" +
                                  (first_bad.empty() ? "" : "; first mismatch " + first_bad)));
  }
  if (!o.m || *o.m == 3) {
    const Field f8 = Field::make(3);
    const std::vector<PolyFunc> polys = {PolyFunc(f8, {{5, 1}}), PolyFunc(f8, {{7, 1}}),
                                         PolyFunc(f8, {{7, 3}, {6, 5}, {5, 1}, {3, 2}})};
    for (const auto& p : polys) {
      const auto f = NormalizedPolyFunc::from(p);
      const auto fast = x_point_count(f);
      const auto slow = naive_x_count(f8, pf_polynomial(f));
      r.cases.push_back(verdict("x_point_count m=3 " + p.to_string(), fast == slow,
                                std::to_string(fast) + " vs naive " + std::to_string(slow)));
    }
  }
  return r;
}

struct SuiteEntry {
  const char* name;
  const char* description;
  SuiteResult (*run)(const SuiteOptions&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"equivalence", "delta <= 4 iff X(F_q) within V", suite_equivalence},
      {"inverse", "delta of the inverse map", suite_inverse},
      {"invariances", "delta invariances", suite_invariances},
      {"pf", "P_f reconstruction and degree", suite_pf},
      {"weil", "curve point counts inside the Weil interval", suite_weil},
      {"structural", "structural checks on the cones", suite_structural},
      {"borne1", "monomial bound implies delta >= 6", suite_borne1},
      {"lawe", "sampled witness search at m = 22", suite_lawe},
      {"oracles", "fast paths against brute force", suite_oracles},
  };
  return entries;
}

}  // namespace

std::vector<SuiteInfo> list_suites() {
  std::vector<SuiteInfo> out;
  for (const auto& e : registry()) out.push_back({e.name, e.description});
  return out;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& e : registry()) {
    if (name == e.name) return e.run(options);
  }
  std::string known;
  for (const auto& e : registry()) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'; known suites: " + known);
}

}  // namespace diffu
