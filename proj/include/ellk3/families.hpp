#pragma once

// Generators for the parametrized surface families: the p = 5 branch-point
// family, the char-3 and char-2 deformation families, char-2 twists and
// Igusa pullbacks along classifying maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellk3/frobext.hpp"
#include "ellk3/sections.hpp"

namespace ellk3 {

enum class FamilyKind { P5AlphaBeta, P3Deg6, P3Deg5, P3Deg4, P2E84, P2Twist, IgusaTower };

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& name);

struct FamilySpec {
  FamilyKind family;
  std::map<std::string, std::string> parameters;

  std::string describe() const;
};

struct FamilyMember {
  WeierstrassModel model;   // the surface X (minimal unless raw)
  WeierstrassModel base;    // the quotient Y with X = Y^(p^n)
  CoordinateChange change;  // raw pullback coordinates -> model
  int torsion_order = 0;    // p^n when X carries such a section, else 0
  // Sections written down in closed form, in the coordinates of `model`.
  std::vector<SectionPoint> sections;
};

// Parameter names and constraints:
//   p5_alpha_beta  alpha, beta in F_5, alpha != beta
//   p3_deg6        r4 r3 r2 r1 r0 in F_3, r1 r0 != 0
//   p3_deg5        r4 r3 r2 r1 in F_3, r1 != 0 (r0 = 0)
//   p3_deg4        r4 r3 r2 in F_3, r2 != 0 (r1 = r0 = 0)
//   p2_e84         r4 r3 r2 in F_2
//   p2_twist       g (rational function), optional a1..a6 of the base,
//                  default y^2 + xy = x^3 + t^2
//   igusa_tower    p_power, optional k (Frobenius steps, default 0) and
//                  phi (classifying map in s, default s)
FamilyMember generate(const FamilySpec& spec, bool raw = false);

}  // namespace ellk3
