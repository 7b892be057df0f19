#pragma once

// Frobenius pullback, base change along classifying maps, the Artin-Schreier
// twist in characteristic 2, Frobenius descent and the Igusa table.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ellk3/tate.hpp"

namespace ellk3 {

// t = num(s) / den(s); stored in the library's single variable.
struct ClassifyingMap {
  Poly num;
  Poly den;

  ClassifyingMap(Poly n, Poly d);
  static ClassifyingMap parse(const std::string& text, int p);
  int degree() const;
  RatFunc as_ratfunc() const { return RatFunc(num, den); }
  std::string to_string() const;
};

// a_i(t) -> a_i(t^p), then minimalized unless raw.
WeierstrassModel frobenius_pullback(const WeierstrassModel& m, bool raw = false);

// a_i(t) -> den^(i chi) a_i(num/den), then minimalized unless raw.
WeierstrassModel base_change(const WeierstrassModel& m, const ClassifyingMap& phi, bool raw = false);

// a2 -> a2 + g a1^2, cleared of denominators, minimalized unless raw.
WeierstrassModel quadratic_twist_char2(const WeierstrassModel& m, const RatFunc& g, bool raw = false);

struct DescentResult {
  WeierstrassModel model;  // minimal model of the descended surface
  int scaling_degree = 0;  // total degree of the u-scaling that was needed
};

// Best-effort syntactic test: finds an admissible change putting all a_i in
// GF(p)[t^p] and returns the model with t^p replaced by t. Only scalings at
// the additive places are tried.
std::optional<DescentResult> frobenius_descent(const WeierstrassModel& m);

struct TowerRow {
  int k = 0;                      // number of Frobenius pullbacks
  std::vector<FiberCount> fibers; // expected bad fibers of E^(p^k)
  // Coefficients a1..a6 of a printed model of E^(p^k), when one exists.
  std::optional<std::array<std::string, 5>> printed;
};

struct IgusaEntry {
  int p_power;
  int p;
  int level;
  WeierstrassModel model;
  std::vector<FiberCount> fiber_table;
  std::vector<TowerRow> tower;  // k = 0 .. level
};

std::vector<int> igusa_levels();
IgusaEntry igusa_universal(int p_power);

}  // namespace ellk3
