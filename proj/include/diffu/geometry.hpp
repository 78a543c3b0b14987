#pragma once

// Rational points of the varieties attached to f:
//   X : P_f(x,y,z) = P_f(x,y,t) = 0 in affine 4-space,
//   V : the seven hyperplanes x+y, x+z, x+t, y+z, y+t, z+t, x+y+z+t = 0,
// and, for monomials, the projective plane curve C : P_{x^d}(x,y,z) = 0.
//
// delta(f) <= 4 exactly when every F_q-point of X lies on V.

#include <array>
#include <cstdint>
#include <optional>

#include "diffu/mvpoly.hpp"
#include "diffu/uniformity.hpp"

namespace diffu {

struct AffinePoint4 {
  Elem x = 0, y = 0, z = 0, t = 0;
  friend auto operator<=>(const AffinePoint4&, const AffinePoint4&) = default;
};

/// A point of P^2 or P^3 scaled so its first nonzero coordinate is 1.
template <std::size_t N>
class ProjPoint {
 public:
  /// Throws std::invalid_argument for the all-zero vector.
  static ProjPoint normalized(const Field& field, std::array<Elem, N> coords) {
    std::size_t lead = 0;
    while (lead < N && coords[lead] == 0) ++lead;
    if (lead == N) throw std::invalid_argument("projective point with all coordinates zero");
    const Elem s = field.inv(coords[lead]);
    for (auto& c : coords) c = field.mul(c, s);
    return ProjPoint(coords);
  }
  const std::array<Elem, N>& coords() const { return coords_; }
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  explicit ProjPoint(std::array<Elem, N> c) : coords_(c) {}
  std::array<Elem, N> coords_;
};

using ProjPoint2 = ProjPoint<3>;
using ProjPoint3 = ProjPoint<4>;

/// True iff the point lies on one of the seven hyperplanes of V.
bool in_V(const AffinePoint4& p);

struct GeometryReport {
  bool contained = true;
  /// Lexicographically smallest point of X(F_q) off V, when there is one.
  std::optional<AffinePoint4> violation;
  /// Number of (x, y, z) triples whose numerator was evaluated.
  std::uint64_t points_scanned = 0;
  std::optional<std::uint64_t> x_point_count;
};

inline constexpr unsigned kMaxContainmentDegree = 10;

/// Decides X(F_q) within V by scanning (x, y) prefixes. Off V the factors
/// (x+y)(x+z)(y+z) and (x+y)(x+t)(y+t) are nonzero, so P_f vanishes exactly
/// where the numerator f(x)+f(y)+f(z)+f(x+y+z) does. Throws ResourceLimit for m > 10.
GeometryReport contained_in_V(const NormalizedPolyFunc& f);
GeometryReport contained_in_V(const PolyFunc& f);

/// True iff the point is on X (numerator form) and on none of the hyperplanes.
bool is_violation(const PolyFunc& f, const AffinePoint4& p);

struct EquivalenceResult {
  bool delta_at_most_4 = false;   // from the exhaustive DDT
  bool contained = false;         // X(F_q) within V
  bool no_six_solutions = false;  // no alpha, beta with three disjoint solution pairs
  std::uint32_t delta = 0;
  GeometryReport geometry;
  bool agree() const { return delta_at_most_4 == contained && contained == no_six_solutions; }
};

inline constexpr unsigned kMaxEquivalenceDegree = 8;

/// Runs the three characterizations of delta <= 4 side by side. m <= 8.
EquivalenceResult equivalence_details(const NormalizedPolyFunc& f);
bool equivalence_check(const NormalizedPolyFunc& f);

/// Searches for six distinct x_0..x_5 with x_{2i} + x_{2i+1} = alpha and
/// f(x_{2i}) + f(x_{2i+1}) = beta, pairing solutions directly.
std::optional<std::array<Elem, 6>> find_six_solutions(const PolyFunc& f);

inline constexpr unsigned kMaxPointCountDegree = 7;

/// Exact #X(F_q) using the true quotient P_f (points on V included). m <= 7.
std::uint64_t x_point_count(const NormalizedPolyFunc& f);

inline constexpr unsigned kMaxCurveDegree = 12;

/// #C(F_q) for C : P_{x^d}(x,y,z) = 0 in P^2, counted over the three affine
/// charts (1:y:z), (0:1:z), (0:0:1). m <= 12; d must not be a power of two.
std::uint64_t proj_curve_points(std::uint64_t d, const Field& field);

/// Same count from a full scan of F_q^3 minus the origin, divided by q-1. For tests; m <= 5.
std::uint64_t proj_curve_points_scan(std::uint64_t d, const Field& field);

struct StructuralChecks {
  /// P_{x^d}(0,0,1) = 1.
  bool vertex = false;
  /// Every point of S2 on the plane x+y+z+t = 0 lies on S1.
  bool intercurve = false;
  /// (x:y:z:t) -> (x:y:z) is injective on C7(F_q) and lands on C(F_q), and the counts match.
  bool projection = false;
  /// S1 and S2 have the same points on the plane x+z+t = 0.
  bool component_plane = false;
  std::uint64_t c7_points = 0;
  std::uint64_t c_points = 0;
  bool all() const { return vertex && intercurve && projection && component_plane; }
};

inline constexpr unsigned kMaxStructuralDegree = 10;

StructuralChecks structural_checks(std::uint64_t d, const Field& field);

}  // namespace diffu
