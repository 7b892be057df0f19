#pragma once

// Hasse invariants, supersingular j-values, p-torsion tests, the height
// flag of the formal Brauer group and the supersingularity decision.

#include <vector>

#include "ellk3/tate.hpp"

namespace ellk3 {

struct HasseClass {
  RatFunc raw;
  PowerClass class_triviality = PowerClass::Nontrivial;
  bool zero = false;
};

// Coefficient of (xyz)^(p-1) in F^(p-1) for the homogeneous cubic
// F = y^2 z + a1 xyz + a3 yz^2 - x^3 - a2 x^2 z - a4 xz^2 - a6 z^3.
Poly hasse_polynomial(const WeierstrassModel& m);
HasseClass hasse_invariant(const WeierstrassModel& m);

// Whether j (an element of k) is the j-invariant of a supersingular curve.
bool is_supersingular_j(const ResidueField& k, const Poly& j);

struct SupersingularSet {
  Poly modulus;              // irreducible quadratic defining GF(p^2)
  std::vector<Poly> values;  // reduced representatives, canonical order
};
SupersingularSet supersingular_j(int p);

// prod (X - j) over the supersingular j-values; coefficients lie in GF(p).
Poly supersingular_polynomial(int p);

enum class TorsionMode { Hasse, Direct };

// p^n-torsion on the model (n = 1 in Hasse mode).
bool p_torsion_exists(const WeierstrassModel& m, int n, TorsionMode mode = TorsionMode::Hasse);

HeightFlag height_flag(const WeierstrassModel& m);

// has_pn_torsion: the caller declares a p^n-torsion section with p^n >= 3.
Decision supersingularity_decision(const SurfaceReport& report, bool has_pn_torsion);

}  // namespace ellk3
