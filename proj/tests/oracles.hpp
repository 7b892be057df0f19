#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance driver: brute-force point counts, trial division, random
// admissible coordinate changes, random points and the fixed-locus rules
// written out case by case.

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ellk3/brauer.hpp"
#include "ellk3/families.hpp"
#include "ellk3/golden.hpp"
#include "ellk3/sections.hpp"

namespace oracle {

using namespace ellk3;

inline int md(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline int inv(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (md(1LL * a * x, p) == 1) return x;
  }
  return 0;
}

// #E(F_p) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, by enumeration.
inline int count_points(int p, int a1, int a2, int a3, int a4, int a6) {
  int n = 1;
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      long long lhs = 1LL * y * y + 1LL * a1 * x * y + 1LL * a3 * y;
      long long rhs = 1LL * x * x * x + 1LL * a2 * x * x + 1LL * a4 * x + a6;
      n += md(lhs - rhs, p) == 0;
    }
  }
  return n;
}

// Supersingular j in GF(p), found by counting points on one curve per
// j-value: E is supersingular iff #E(F_p) = 1 mod p. Curves are chosen from
// families whose j is known in closed form (all supersingular j lie in
// GF(p) for p <= 13).
inline std::set<int> supersingular_j_by_counting(int p) {
  std::set<int> out;
  auto record = [&](int j, int count) {
    if (md(count - 1, p) == 0) out.insert(j);
  };
  if (p == 2) {
    record(0, count_points(2, 0, 0, 1, 0, 0));  // y^2 + y = x^3, j = 0
    record(1, count_points(2, 1, 0, 0, 0, 1));  // y^2 + xy = x^3 + 1/j
    return out;
  }
  if (p == 3) {
    record(0, count_points(3, 0, 0, 0, 1, 0));  // y^2 = x^3 + x, j = 0
    for (int j = 1; j < 3; ++j) {
      // y^2 = x^3 + x^2 - 1/j has j-invariant j.
      record(j, count_points(3, 0, 1, 0, 0, md(-inv(j, 3), 3)));
    }
    return out;
  }
  std::set<int> seen;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      long long d = md(4LL * a * a * a + 27LL * b * b, p);
      if (d == 0) continue;
      int j = md(1728LL * 4 * a * a * a % p * inv(static_cast<int>(d), p), p);
      if (!seen.insert(j).second) continue;
      record(j, count_points(p, 0, 0, 0, a, b));
    }
  }
  return out;
}

// Every monic polynomial of exact degree d, lowest coefficient first.
inline std::vector<Poly> monic_polys(int p, int d) {
  std::vector<Poly> out;
  int total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    std::vector<int> c(static_cast<std::size_t>(d + 1), 0);
    int x = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = x % p;
      x /= p;
    }
    c[static_cast<std::size_t>(d)] = 1;
    out.emplace_back(p, c);
  }
  return out;
}

inline bool irreducible_by_trial_division(const Poly& f) {
  int n = f.deg();
  if (n <= 0) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    for (const Poly& g : monic_polys(f.modulus(), d)) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

inline Poly random_poly(std::mt19937& rng, int p, int max_deg) {
  std::uniform_int_distribution<int> coeff(0, p - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<int> c(static_cast<std::size_t>(deg(rng) + 1));
  for (int& x : c) x = coeff(rng);
  return Poly(p, c);
}

// An admissible change: constant or 1/pi scaling and polynomial r, s, w.
inline CoordinateChange random_change(std::mt19937& rng, int p) {
  std::uniform_int_distribution<int> unit(1, p - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  CoordinateChange c = CoordinateChange::translation(random_poly(rng, p, 3), random_poly(rng, p, 2),
                                                     random_poly(rng, p, 4));
  RatFunc u = RatFunc::constant(p, unit(rng));
  if (coin(rng) == 0) u = u * RatFunc(Poly::constant(p, 1), Poly(p, {unit(rng) % p, 1}));
  return c.then(CoordinateChange::scaling(u));
}

// Curve through two chosen points P1, P2 with x2 = x1 + 1.
struct CurveWithPoints {
  WeierstrassModel model;
  SectionPoint p1, p2;
};

inline CurveWithPoints random_curve_with_points(std::mt19937& rng, int p) {
  for (;;) {
    Poly a1 = random_poly(rng, p, 1), a2 = random_poly(rng, p, 2), a3 = random_poly(rng, p, 3);
    Poly x1 = random_poly(rng, p, 2), y1 = random_poly(rng, p, 3), y2 = random_poly(rng, p, 3);
    Poly x2 = x1 + Poly::constant(p, 1);
    auto rest = [&](const Poly& x, const Poly& y) { return y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x; };
    // rest(P) = a4 x + a6 for both points, and x2 - x1 = 1.
    Poly a4 = rest(x2, y2) - rest(x1, y1);
    Poly a6 = rest(x1, y1) - a4 * x1;
    std::array<Poly, 5> a = {a1, a2, a3, a4, a6};
    if (invariants(a).delta.is_zero()) continue;
    return {WeierstrassModel(p, a), SectionPoint::affine(x1, y1), SectionPoint::affine(x2, y2)};
  }
}

// Fixed locus rules for a translation by a p-torsion section, written out
// independently of the library. nullopt marks impossible combinations.
inline std::optional<FixedLocusDescriptor::Kind> fixed_locus_rule(KodairaType::Symbol s, int n, bool good_ss, int p,
                                                                  bool meets_zero, Specialization spec) {
  using K = FixedLocusDescriptor::Kind;
  using S = KodairaType::Symbol;
  using Sp = Specialization;
  if (s == S::I0) return good_ss ? K::WholeFiber : K::Empty;
  if (s == S::In) return K::Empty;
  if (meets_zero) return K::WholeFiber;
  bool star = s == S::I0s || s == S::Ins;
  bool theta = spec == Sp::Theta1 || spec == Sp::Theta2 || spec == Sp::Theta3;
  if (theta && !(p == 2 && star)) return std::nullopt;
  if (spec == Sp::Identity) {
    if (s == S::II || s == S::III || s == S::IV) return K::OnePoint;
    return K::CurveOfMultipleComponents;
  }
  if (s == S::IVs) return p == 3 && spec == Sp::ComponentGroup ? std::optional(K::OnePoint) : std::nullopt;
  if (s == S::IIIs) return p == 2 && spec == Sp::ComponentGroup ? std::optional(K::OnePoint) : std::nullopt;
  if (!star || p != 2) return std::nullopt;
  int nn = s == S::I0s ? 0 : n;
  if (nn <= 1) return spec == Sp::ComponentGroup ? std::optional(K::OnePoint) : std::nullopt;
  if (nn % 2 == 1) {
    return spec == Sp::ComponentGroup || spec == Sp::Theta1 ? std::optional(K::CurveOfMultipleComponents)
                                                             : std::nullopt;
  }
  if (spec == Sp::Theta1) return K::CurveOfMultipleComponents;
  if (spec == Sp::Theta2 || spec == Sp::Theta3) return K::OnePoint;
  return std::nullopt;
}

// Random member of a p >= 3 family with p-torsion, uniformly over families.
inline FamilySpec random_family_member(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  auto el = [&](int p, bool nonzero) {
    std::uniform_int_distribution<int> d(nonzero ? 1 : 0, p - 1);
    return std::to_string(d(rng));
  };
  switch (pick(rng)) {
    case 0: {
      std::string a = el(5, false), b;
      do b = el(5, false);
      while (b == a);
      return {FamilyKind::P5AlphaBeta, {{"alpha", a}, {"beta", b}}};
    }
    case 1:
      return {FamilyKind::P3Deg6,
              {{"r4", el(3, false)}, {"r3", el(3, false)}, {"r2", el(3, false)}, {"r1", el(3, true)}, {"r0", el(3, true)}}};
    case 2:
      return {FamilyKind::P3Deg5, {{"r4", el(3, false)}, {"r3", el(3, false)}, {"r2", el(3, false)}, {"r1", el(3, true)}}};
    default:
      return {FamilyKind::P3Deg4, {{"r4", el(3, false)}, {"r3", el(3, false)}, {"r2", el(3, true)}}};
  }
}

// The semi-stable char-2 configuration: Frobenius pullback of the rational
// surface y^2 + (t+1)xy + ty = x^3.
inline WeierstrassModel semistable_char2() {
  return frobenius_pullback(model_from_strings(2, {"t+1", "0", "t", "0", "0"}));
}

}  // namespace oracle
