#include "ellk3/weierstrass.hpp"

#include <algorithm>
#include <sstream>

namespace ellk3 {
namespace {

int weight_index(int i) {
  switch (i) {
    case 1: return 0;
    case 2: return 1;
    case 3: return 2;
    case 4: return 3;
    case 6: return 4;
    default: throw std::out_of_range("no Weierstrass coefficient a" + std::to_string(i));
  }
}

std::string coefficient_text(const Poly& c) {
  std::string s = c.to_string();
  bool single = std::count(s.begin(), s.end(), '+') == 0;
  return single ? s : "(" + s + ")";
}

}  // namespace

WeierstrassModel::WeierstrassModel(int p, std::array<Poly, 5> a, int chi, std::string label)
    : p_(p), a_(std::move(a)), chi_(chi), label_(std::move(label)) {
  require_prime(p);
  for (Poly& c : a_) {
    if (c.modulus() == 0) c = Poly(p);
    if (c.modulus() != p) throw Error("coefficient modulus differs from the model's characteristic");
  }
  int need = degree_chi(a_);
  if (chi_ < 0) {
    chi_ = need;
  } else if (chi_ < need) {
    throw Error("chart parameter chi=" + std::to_string(chi_) + " is below the coefficient degrees");
  }
  if (discriminant(*this).is_zero()) throw Error("singular generic fiber");
}

int WeierstrassModel::degree_chi(const std::array<Poly, 5>& a) {
  int chi = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    if (a[k].is_zero()) continue;
    int w = kWeights[k];
    chi = std::max(chi, (a[k].deg() + w - 1) / w);
  }
  return chi;
}

const Poly& WeierstrassModel::a(int i) const { return a_[static_cast<std::size_t>(weight_index(i))]; }

WeierstrassModel WeierstrassModel::with_label(std::string label) const {
  WeierstrassModel m = *this;
  m.label_ = std::move(label);
  return m;
}

WeierstrassModel WeierstrassModel::with_chi(int chi) const { return WeierstrassModel(p_, a_, chi, label_); }

std::string WeierstrassModel::equation() const {
  std::ostringstream os;
  os << "y^2";
  if (!a(1).is_zero()) os << " + " << (a(1).is_one() ? "" : coefficient_text(a(1)) + "*") << "x*y";
  if (!a(3).is_zero()) os << " + " << (a(3).is_one() ? "" : coefficient_text(a(3)) + "*") << "y";
  os << " = x^3";
  if (!a(2).is_zero()) os << " + " << (a(2).is_one() ? "" : coefficient_text(a(2)) + "*") << "x^2";
  if (!a(4).is_zero()) os << " + " << (a(4).is_one() ? "" : coefficient_text(a(4)) + "*") << "x";
  if (!a(6).is_zero()) os << " + " << coefficient_text(a(6));
  return os.str();
}

WeierstrassModel model_from_rational(int p, const std::array<RatFunc, 5>& a, std::string label) {
  // u = prod pi^k with k = max over i of ceil(-v_pi(a_i) / i).
  Poly den_lcm = Poly::constant(p, 1);
  for (const RatFunc& c : a) {
    if (c.is_zero()) continue;
    den_lcm = exact_div(den_lcm * c.den(), gcd(den_lcm, c.den()));
  }
  Poly u = Poly::constant(p, 1);
  if (!den_lcm.is_constant()) {
    for (const Poly& pi : distinct_irreducible_factors(den_lcm)) {
      Place v = Place::finite(pi);
      int k = 0;
      for (std::size_t i = 0; i < 5; ++i) {
        int val = valuation(a[i], v);
        if (val < 0) k = std::max(k, (-val + kWeights[i] - 1) / kWeights[i]);
      }
      u *= pow(pi, k);
    }
  }
  std::array<Poly, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    RatFunc scaled = a[i] * RatFunc(pow(u, kWeights[i]));
    if (!scaled.is_polynomial()) throw std::logic_error("denominator clearing failed");
    out[i] = scaled.num();
  }
  return WeierstrassModel(p, std::move(out), -1, std::move(label));
}

WeierstrassModel model_from_strings(int p, const std::array<std::string, 5>& a, std::string label) {
  std::array<Poly, 5> c;
  for (std::size_t i = 0; i < 5; ++i) {
    try {
      c[i] = a[i].empty() ? Poly(p) : parse_poly(a[i], p);
    } catch (const ParseError& e) {
      throw ParseError("a" + std::to_string(kWeights[i]) + ": " + e.reason(), e.offset());
    }
  }
  return WeierstrassModel(p, std::move(c), -1, std::move(label));
}

InvariantSet invariants(const WeierstrassModel& m) {
  InvariantSet s = invariants(m.coeffs());
  if (!s.delta.is_zero()) s.j = RatFunc(s.c4 * s.c4 * s.c4, s.delta);
  return s;
}

InvariantSet invariants(const std::array<Poly, 5>& a) {
  const Poly& a1 = a[0];
  const Poly& a2 = a[1];
  const Poly& a3 = a[2];
  const Poly& a4 = a[3];
  const Poly& a6 = a[4];
  InvariantSet s;
  // Integral formulas reduced mod p, identical in every characteristic.
  s.b2 = a1 * a1 + a2.scaled(4);
  s.b4 = a4.scaled(2) + a1 * a3;
  s.b6 = a3 * a3 + a6.scaled(4);
  s.b8 = a1 * a1 * a6 + (a2 * a6).scaled(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  s.c4 = s.b2 * s.b2 - s.b4.scaled(24);
  s.c6 = -(s.b2 * s.b2 * s.b2) + (s.b2 * s.b4).scaled(36) - s.b6.scaled(216);
  s.delta = -(s.b2 * s.b2 * s.b8) - (s.b4 * s.b4 * s.b4).scaled(8) - (s.b6 * s.b6).scaled(27) +
            (s.b2 * s.b4 * s.b6).scaled(9);
  return s;
}

Poly discriminant(const WeierstrassModel& m) { return invariants(m).delta; }

RatFunc j_invariant(const WeierstrassModel& m) { return invariants(m).j; }

// ---------------------------------------------------------------- changes

CoordinateChange CoordinateChange::identity(int p) {
  return {RatFunc::constant(p, 1), RatFunc(p), RatFunc(p), RatFunc(p)};
}

CoordinateChange CoordinateChange::translation(const Poly& r, const Poly& s, const Poly& w) {
  return {RatFunc::constant(r.modulus(), 1), RatFunc(r), RatFunc(s), RatFunc(w)};
}

CoordinateChange CoordinateChange::scaling(const RatFunc& u) {
  int p = u.modulus();
  return {u, RatFunc(p), RatFunc(p), RatFunc(p)};
}

bool CoordinateChange::is_identity() const {
  return u == RatFunc::constant(u.modulus(), 1) && r.is_zero() && s.is_zero() && w.is_zero();
}

CoordinateChange CoordinateChange::then(const CoordinateChange& n) const {
  RatFunc u2 = u * u;
  return {u * n.u, r + u2 * n.r, s + u * n.s, w + u2 * s * n.r + u2 * u * n.w};
}

CoordinateChange CoordinateChange::inverse() const {
  RatFunc ui = u.inverse();
  RatFunc ui2 = ui * ui;
  return {ui, -(r * ui2), -(s * ui), (r * s - w) * ui2 * ui};
}

std::array<Poly, 5> translate(const std::array<Poly, 5>& a, const Poly& r, const Poly& s, const Poly& w) {
  const Poly& a1 = a[0];
  const Poly& a2 = a[1];
  const Poly& a3 = a[2];
  const Poly& a4 = a[3];
  const Poly& a6 = a[4];
  return {a1 + s.scaled(2),
          a2 - s * a1 + r.scaled(3) - s * s,
          a3 + r * a1 + w.scaled(2),
          a4 - s * a3 + (r * a2).scaled(2) - (w + r * s) * a1 + (r * r).scaled(3) - (s * w).scaled(2),
          a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w - r * w * a1};
}

std::array<RatFunc, 5> transform_coefficients(const std::array<RatFunc, 5>& a, const CoordinateChange& c) {
  if (c.u.is_zero()) throw Error("coordinate change with u = 0");
  const RatFunc& a1 = a[0];
  const RatFunc& a2 = a[1];
  const RatFunc& a3 = a[2];
  const RatFunc& a4 = a[3];
  const RatFunc& a6 = a[4];
  const RatFunc& r = c.r;
  const RatFunc& s = c.s;
  const RatFunc& w = c.w;
  int p = c.u.modulus();
  auto k = [p](std::int64_t v) { return RatFunc::constant(p, v); };
  RatFunc n1 = a1 + k(2) * s;
  RatFunc n2 = a2 - s * a1 + k(3) * r - s * s;
  RatFunc n3 = a3 + r * a1 + k(2) * w;
  RatFunc n4 = a4 - s * a3 + k(2) * r * a2 - (w + r * s) * a1 + k(3) * r * r - k(2) * s * w;
  RatFunc n6 = a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w - r * w * a1;
  RatFunc ui = c.u.inverse();
  RatFunc ui2 = ui * ui;
  RatFunc ui3 = ui2 * ui;
  return {n1 * ui, n2 * ui2, n3 * ui3, n4 * ui2 * ui2, n6 * ui3 * ui3};
}

WeierstrassModel change_coordinates(const WeierstrassModel& m, const CoordinateChange& c) {
  std::array<RatFunc, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = RatFunc(m.coeffs()[i]);
  std::array<RatFunc, 5> b = transform_coefficients(a, c);
  std::array<Poly, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!b[i].is_polynomial()) throw Error("coordinate change does not give an integral model");
    out[i] = b[i].num();
  }
  return WeierstrassModel(m.p(), std::move(out), -1, m.label());
}

std::pair<WeierstrassModel, CoordinateChange> normalize(const WeierstrassModel& m, NormalForm target) {
  int p = m.p();
  if (p == 2) throw Error("cannot complete the square in characteristic 2");
  if (target == NormalForm::A1A2A3Zero && p == 3) throw Error("cannot complete the cube in characteristic 3");
  int half = mod_inverse(2, p);
  CoordinateChange c = CoordinateChange::translation(Poly(p), m.a(1).scaled(-half), m.a(3).scaled(-half));
  WeierstrassModel n = change_coordinates(m, c);
  if (target == NormalForm::A1A2A3Zero) {
    CoordinateChange c2 = CoordinateChange::translation(n.a(2).scaled(-mod_inverse(3, p)), Poly(p), Poly(p));
    n = change_coordinates(n, c2);
    c = c.then(c2);
  }
  return {n, c};
}

WeierstrassModel infinity_chart(const WeierstrassModel& m) {
  std::array<Poly, 5> b;
  for (std::size_t i = 0; i < 5; ++i) b[i] = m.coeffs()[i].reversed(kWeights[i] * m.chi());
  return WeierstrassModel(m.p(), std::move(b), m.chi(), m.label());
}

std::string SurfaceClass::to_string() const {
  switch (kind) {
    case Kind::Rational: return "rational";
    case Kind::K3: return "K3";
    case Kind::Other: return "other(" + std::to_string(chi) + ")";
  }
  return "other";
}

}  // namespace ellk3
