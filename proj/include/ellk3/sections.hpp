#pragma once

// Group law on long Weierstrass curves over GF(p)(t), torsion orders and
// bounded torsion search, fixed loci of p-torsion translations and the
// height identity of torsion sections.

#include <optional>
#include <string>
#include <vector>

#include "ellk3/tate.hpp"

namespace ellk3 {

struct SectionPoint {
  bool zero = true;
  RatFunc x;
  RatFunc y;

  static SectionPoint origin() { return {}; }
  static SectionPoint affine(RatFunc x, RatFunc y) { return {false, std::move(x), std::move(y)}; }
  bool operator==(const SectionPoint& o) const;
  std::string to_string() const;
};

bool on_curve(const WeierstrassModel& m, const SectionPoint& P);
SectionPoint negate(const WeierstrassModel& m, const SectionPoint& P);
SectionPoint add(const WeierstrassModel& m, const SectionPoint& P, const SectionPoint& Q);
SectionPoint multiply(const WeierstrassModel& m, const SectionPoint& P, long long k);

// Least n <= bound with nP = 0, certified by (n/q)P != 0 for primes q | n.
std::optional<int> order_of(const WeierstrassModel& m, const SectionPoint& P, int bound);

// The point in the coordinates of change_coordinates(m, c).
SectionPoint transform_point(const SectionPoint& P, const CoordinateChange& c);

// Points of exact order n with x = X/D^2, deg X <= deg_bound and D a
// product of distinct irreducible factors of the discriminant (or of the
// good supersingular places). Deterministic order.
std::vector<SectionPoint> torsion_search(const WeierstrassModel& m, int n, int deg_bound);

enum class Specialization {
  Identity,        // meets the identity component
  ComponentGroup,  // meets a non-identity component
  Theta1,          // the I_n* components (characteristic 2 only)
  Theta2,
  Theta3,
};

struct FixedLocusDescriptor {
  enum class Kind { Empty, WholeFiber, OnePoint, CurveOfMultipleComponents };
  Kind kind;
  std::string detail;
};
std::string to_string(FixedLocusDescriptor::Kind k);

// Reduced fixed locus on the fiber of translation by a p-torsion section.
FixedLocusDescriptor fixed_locus(const FiberAnalysis& fiber, int p, bool intersects_zero, Specialization spec);

struct HeightIdentity {
  // Exact rationals as numerator / denominator.
  long long lhs_num, lhs_den;
  long long rhs_num, rhs_den;
  bool holds() const { return lhs_num * rhs_den == rhs_num * lhs_den; }
};

// 4 + 2 (sigma_0 . sigma_p) against sum n_v k_v (p - k_v) / p over fibers
// of type I_{p n_v}.
HeightIdentity torsion_height_identity(const std::vector<FiberAnalysis>& fibers, const std::vector<int>& k, int p,
                                       int zero_intersection = 0);

}  // namespace ellk3
