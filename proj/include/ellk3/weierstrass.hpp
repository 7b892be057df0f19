#pragma once

// Long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
// coefficients in GF(p)[t], plus invariants and coordinate changes.

#include <array>
#include <string>
#include <utility>

#include "ellk3/algebra.hpp"

namespace ellk3 {

// Index into the coefficient array: a1 a2 a3 a4 a6.
inline constexpr std::array<int, 5> kWeights = {1, 2, 3, 4, 6};

class WeierstrassModel {
 public:
  // chi < 0 selects the smallest chart with deg a_i <= i*chi.
  WeierstrassModel(int p, std::array<Poly, 5> a, int chi = -1, std::string label = "");

  int p() const { return p_; }
  // i in {1,2,3,4,6}.
  const Poly& a(int i) const;
  const std::array<Poly, 5>& coeffs() const { return a_; }
  int chi() const { return chi_; }
  // Coefficient of t^j in a_i.
  int a_coeff(int i, int j) const { return a(i).coeff(j); }
  const std::string& label() const { return label_; }
  WeierstrassModel with_label(std::string label) const;
  WeierstrassModel with_chi(int chi) const;
  std::string equation() const;
  bool operator==(const WeierstrassModel& o) const { return p_ == o.p_ && a_ == o.a_ && chi_ == o.chi_; }

  // Smallest chi with deg a_i <= i*chi.
  static int degree_chi(const std::array<Poly, 5>& a);

 private:
  int p_;
  std::array<Poly, 5> a_;
  int chi_;
  std::string label_;
};

// Scale rational coefficients into GF(p)[t] with the smallest polynomial u.
WeierstrassModel model_from_rational(int p, const std::array<RatFunc, 5>& a, std::string label = "");

// Text form used in model files; missing coefficients default to "0".
WeierstrassModel model_from_strings(int p, const std::array<std::string, 5>& a, std::string label = "");

struct InvariantSet {
  Poly b2, b4, b6, b8, c4, c6, delta;
  RatFunc j;
};

InvariantSet invariants(const WeierstrassModel& m);
// Same formulas on a bare coefficient array (j left empty).
InvariantSet invariants(const std::array<Poly, 5>& a);
Poly discriminant(const WeierstrassModel& m);
RatFunc j_invariant(const WeierstrassModel& m);

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + w.
struct CoordinateChange {
  RatFunc u, r, s, w;

  static CoordinateChange identity(int p);
  static CoordinateChange translation(const Poly& r, const Poly& s, const Poly& w);
  static CoordinateChange scaling(const RatFunc& u);
  bool is_identity() const;
  // Apply this change, then `next`.
  CoordinateChange then(const CoordinateChange& next) const;
  CoordinateChange inverse() const;
};

// Polynomial translation (u = 1) of a coefficient array.
std::array<Poly, 5> translate(const std::array<Poly, 5>& a, const Poly& r, const Poly& s, const Poly& w);

// Coefficient transform on arbitrary rational coefficients.
std::array<RatFunc, 5> transform_coefficients(const std::array<RatFunc, 5>& a, const CoordinateChange& c);

// Throws when the result is not integral over GF(p)[t].
WeierstrassModel change_coordinates(const WeierstrassModel& m, const CoordinateChange& c);

enum class NormalForm { A1A3Zero, A1A2A3Zero };

std::pair<WeierstrassModel, CoordinateChange> normalize(const WeierstrassModel& m, NormalForm target);

// Coefficients b_i(s) = s^(i chi) a_i(1/s) of the chart at infinity, as a
// model in the same variable with the same chi. Flipping twice is identity.
WeierstrassModel infinity_chart(const WeierstrassModel& m);

struct SurfaceClass {
  enum class Kind { Rational, K3, Other };
  Kind kind;
  int chi;
  std::string to_string() const;
};

// Requires a globally minimal model; defined next to the minimality test.
SurfaceClass classify_surface(const WeierstrassModel& m);

}  // namespace ellk3
