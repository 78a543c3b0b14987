#include "diffu/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

#include "diffu/errors.hpp"
#include "parallel.hpp"

namespace diffu {

namespace {

void check_limit(const Field& field, unsigned limit, const char* what) {
  if (field.degree() > limit) {
    throw ResourceLimit(std::string(what) + " is limited to m <= " + std::to_string(limit) + " (got m = " +
                        std::to_string(field.degree()) + ")");
  }
}

/// Calls fn(point) for one representative of every point of P^2(F_q):
/// (1:y:z), then (0:1:z), then (0:0:1).
template <class Fn>
void for_each_plane_point(const Field& field, Fn&& fn) {
  const std::uint32_t q = field.order();
  for (Elem y = 0; y < q; ++y)
    for (Elem z = 0; z < q; ++z) fn(std::array<Elem, 3>{1, y, z});
  for (Elem z = 0; z < q; ++z) fn(std::array<Elem, 3>{0, 1, z});
  fn(std::array<Elem, 3>{0, 0, 1});
}

/// Prefix count of (x, y) pairs with x < y visited before row x.
std::uint64_t pairs_before(std::uint64_t q, std::uint64_t x) {
  // sum_{u < x} (q - 1 - u)
  return x * (q - 1) - x * (x - 1) / 2;
}

}  // namespace

bool in_V(const AffinePoint4& p) {
  const auto [x, y, z, t] = p;
  return x == y || x == z || x == t || y == z || y == t || z == t || (x ^ y ^ z ^ t) == 0;
}

GeometryReport contained_in_V(const PolyFunc& f) {
  const Field& field = f.field();
  check_limit(field, kMaxContainmentDegree, "containment scan");
  const std::uint32_t q = field.order();
  const auto table = f.value_table();

  // (x,y,z,t) is a violation iff (y,x,z,t) is, so the smallest one has x < y.
  // Worker k takes rows x = k, k + W, ...; its first hit is its smallest.
  const unsigned workers = std::min<unsigned>(detail::worker_count(), q);
  std::vector<std::optional<AffinePoint4>> found(workers);
  std::atomic<std::uint32_t> best_x{q};
  detail::parallel_chunks(
      0, workers,
      [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::vector<Elem> diff(q);
        std::vector<Elem> roots;
        for (std::uint64_t w = lo; w < hi; ++w) {
          for (Elem x = static_cast<Elem>(w); x < q && !found[w]; x += workers) {
            if (x > best_x.load(std::memory_order_relaxed)) break;
            for (Elem y = x + 1; y < q && !found[w]; ++y) {
              // numerator(x, y, z) = table[x] + table[y] + table[z] + table[x+y+z]
              const Elem s = table[x] ^ table[y];
              simd::derivative(table, x ^ y, diff);
              roots.clear();
              for (Elem z = 0; z < q; ++z)
                if (diff[z] == s) roots.push_back(z);
              for (Elem z : roots) {
                if (z == x || z == y) continue;
                for (Elem t : roots) {
                  if (t == x || t == y || t == z || t == (x ^ y ^ z)) continue;
                  found[w] = AffinePoint4{x, y, z, t};
                  break;
                }
                if (found[w]) break;
              }
            }
            if (found[w]) {
              std::uint32_t cur = best_x.load();
              while (x < cur && !best_x.compare_exchange_weak(cur, x)) {
              }
            }
          }
        }
      },
      workers);

  GeometryReport report;
  for (const auto& v : found) {
    if (v && (!report.violation || *v < *report.violation)) report.violation = v;
  }
  report.contained = !report.violation.has_value();
  if (report.violation) {
    const auto [x, y, z, t] = *report.violation;
    report.points_scanned = (pairs_before(q, x) + (y - x)) * q;
  } else {
    report.points_scanned = pairs_before(q, q) * q;
  }
  return report;
}

GeometryReport contained_in_V(const NormalizedPolyFunc& f) { return contained_in_V(f.poly()); }

bool is_violation(const PolyFunc& f, const AffinePoint4& p) {
  const auto [x, y, z, t] = p;
  const Elem e1 = f(x) ^ f(y) ^ f(z) ^ f(x ^ y ^ z);
  const Elem e2 = f(x) ^ f(y) ^ f(t) ^ f(x ^ y ^ t);
  return e1 == 0 && e2 == 0 && !in_V(p);
}

std::optional<std::array<Elem, 6>> find_six_solutions(const PolyFunc& f) {
  const Field& field = f.field();
  const std::uint32_t q = field.order();
  std::vector<Elem> values(q);
  for (Elem x = 0; x < q; ++x) values[x] = f(x);

  constexpr Elem kNone = ~Elem{0};
  std::vector<Elem> first(q, kNone), second(q, kNone);
  std::vector<Elem> touched;
  for (Elem alpha = 1; alpha < q; ++alpha) {
    const Elem high = std::bit_floor(alpha);
    std::optional<std::array<Elem, 6>> hit;
    touched.clear();
    for (Elem x = 0; x < q && !hit; ++x) {
      if (x & high) continue;  // one representative per pair {x, x + alpha}
      const Elem beta = values[x] ^ values[x ^ alpha];
      if (first[beta] == kNone) {
        first[beta] = x;
        touched.push_back(beta);
      } else if (second[beta] == kNone) {
        second[beta] = x;
      } else {
        const Elem a = first[beta], b = second[beta];
        hit = std::array<Elem, 6>{a, a ^ alpha, b, b ^ alpha, x, x ^ alpha};
      }
    }
    for (Elem b : touched) first[b] = second[b] = kNone;
    if (hit) return hit;
  }
  return std::nullopt;
}

EquivalenceResult equivalence_details(const NormalizedPolyFunc& f) {
  check_limit(f.field(), kMaxEquivalenceDegree, "equivalence check");
  EquivalenceResult r;
  const auto ddt = delta_exhaustive(f.poly());
  r.delta = ddt.delta;
  r.delta_at_most_4 = ddt.delta <= 4;
  r.geometry = contained_in_V(f);
  r.contained = r.geometry.contained;
  r.no_six_solutions = !find_six_solutions(f.poly()).has_value();
  return r;
}

bool equivalence_check(const NormalizedPolyFunc& f) { return equivalence_details(f).agree(); }

std::uint64_t x_point_count(const NormalizedPolyFunc& f) {
  const Field& field = f.field();
  check_limit(field, kMaxPointCountDegree, "exact point count of X");
  const TriPoly P = pf_polynomial(f);
  const std::uint32_t q = field.order();
  std::vector<std::uint64_t> per_x(q, 0);
  detail::parallel_chunks(0, q, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    const TriPolyEvaluator eval(field, P);
    for (std::uint64_t x = lo; x < hi; ++x) {
      for (Elem y = 0; y < q; ++y) {
        std::uint64_t n = 0;
        for (Elem z = 0; z < q; ++z) n += eval(static_cast<Elem>(x), y, z) == 0;
        per_x[x] += n * n;  // z and t range over the same root set
      }
    }
  });
  std::uint64_t total = 0;
  for (auto n : per_x) total += n;
  return total;
}

std::uint64_t proj_curve_points(std::uint64_t d, const Field& field) {
  check_limit(field, kMaxCurveDegree, "projective curve count");
  const TriPoly P = homogeneous_pf(d);
  const std::uint32_t q = field.order();
  std::vector<Elem> pw(q);
  for (Elem v = 0; v < q; ++v) pw[v] = field.pow(v, d);

  // Where (x+y)(x+z)(y+z) != 0, P vanishes iff x^d + y^d + z^d + (x+y+z)^d does.
  const auto on_curve = [&](const TriPolyEvaluator& eval, Elem x, Elem y, Elem z) {
    if (x == y || x == z || y == z) return eval(x, y, z) == 0;
    return (pw[x] ^ pw[y] ^ pw[z] ^ pw[x ^ y ^ z]) == 0;
  };
  std::vector<std::uint64_t> per_y(q, 0);
  detail::parallel_chunks(0, q, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    const TriPolyEvaluator eval(field, P);
    for (std::uint64_t y = lo; y < hi; ++y)
      for (Elem z = 0; z < q; ++z) per_y[y] += on_curve(eval, 1, static_cast<Elem>(y), z);
  });
  std::uint64_t count = 0;
  for (auto n : per_y) count += n;
  const TriPolyEvaluator eval(field, P);
  for (Elem z = 0; z < q; ++z) count += on_curve(eval, 0, 1, z);
  count += on_curve(eval, 0, 0, 1);
  return count;
}

std::uint64_t proj_curve_points_scan(std::uint64_t d, const Field& field) {
  check_limit(field, 5, "full projective scan");
  const TriPoly P = homogeneous_pf(d);
  const TriPolyEvaluator eval(field, P);
  const std::uint32_t q = field.order();
  std::uint64_t zeros = 0;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y)
      for (Elem z = 0; z < q; ++z)
        if ((x | y | z) != 0 && eval(x, y, z) == 0) ++zeros;
  return zeros / (q - 1);
}

StructuralChecks structural_checks(std::uint64_t d, const Field& field) {
  check_limit(field, kMaxStructuralDegree, "structural checks");
  const TriPoly P = homogeneous_pf(d);
  const TriPolyEvaluator eval(field, P);
  StructuralChecks r;

  r.vertex = eval(0, 0, 1) == 1;

  // H7 : t = x + y + z and the plane x + z + t = 0 : t = x + z are both
  // parametrized bijectively by (x:y:z) in P^2.
  bool intercurve = true, plane_agree = true, images_on_curve = true;
  std::set<ProjPoint2> images;
  for_each_plane_point(field, [&](const std::array<Elem, 3>& p) {
    const auto [x, y, z] = p;
    const Elem t7 = x ^ y ^ z;
    const bool on_s1 = eval(x, y, z) == 0;
    if (eval(x, y, t7) == 0) {
      ++r.c7_points;
      intercurve = intercurve && on_s1;
      const auto point = ProjPoint3::normalized(field, {x, y, z, t7});
      const auto& c = point.coords();
      const auto image = ProjPoint2::normalized(field, {c[0], c[1], c[2]});
      images.insert(image);
      const auto& ic = image.coords();
      images_on_curve = images_on_curve && eval(ic[0], ic[1], ic[2]) == 0;
    }
    const Elem tc = x ^ z;
    plane_agree = plane_agree && (on_s1 == (eval(x, y, tc) == 0));
  });
  r.intercurve = intercurve;
  r.component_plane = plane_agree;
  r.c_points = proj_curve_points(d, field);
  r.projection = images.size() == r.c7_points && images_on_curve && r.c7_points == r.c_points;
  return r;
}

}  // namespace diffu
