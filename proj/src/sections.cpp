#include "ellk3/sections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ellk3 {

bool SectionPoint::operator==(const SectionPoint& o) const {
  if (zero || o.zero) return zero == o.zero;
  return x == o.x && y == o.y;
}

std::string SectionPoint::to_string() const {
  if (zero) return "O";
  return "(" + x.to_string() + ", " + y.to_string() + ")";
}

namespace {

RatFunc coef(const WeierstrassModel& m, int i) { return RatFunc(m.a(i)); }

}  // namespace

bool on_curve(const WeierstrassModel& m, const SectionPoint& P) {
  if (P.zero) return true;
  const RatFunc &x = P.x, &y = P.y;
  RatFunc lhs = y * y + coef(m, 1) * x * y + coef(m, 3) * y;
  RatFunc rhs = ((x + coef(m, 2)) * x + coef(m, 4)) * x + coef(m, 6);
  return lhs == rhs;
}

SectionPoint negate(const WeierstrassModel& m, const SectionPoint& P) {
  if (P.zero) return P;
  return SectionPoint::affine(P.x, -P.y - coef(m, 1) * P.x - coef(m, 3));
}

SectionPoint add(const WeierstrassModel& m, const SectionPoint& P, const SectionPoint& Q) {
  if (P.zero) return Q;
  if (Q.zero) return P;
  int p = m.p();
  RatFunc a1 = coef(m, 1), a2 = coef(m, 2), a3 = coef(m, 3), a4 = coef(m, 4), a6 = coef(m, 6);
  RatFunc lambda(p), nu(p);
  if (P.x == Q.x) {
    RatFunc denom = P.y + Q.y + a1 * Q.x + a3;
    if (denom.is_zero()) return SectionPoint::origin();
    RatFunc x = P.x, y = P.y;
    RatFunc two = RatFunc::constant(p, 2), three = RatFunc::constant(p, 3);
    RatFunc d = two * y + a1 * x + a3;
    lambda = (three * x * x + two * a2 * x + a4 - a1 * y) / d;
    nu = (-(x * x * x) + a4 * x + two * a6 - a3 * y) / d;
  } else {
    RatFunc dx = Q.x - P.x;
    lambda = (Q.y - P.y) / dx;
    nu = (P.y * Q.x - Q.y * P.x) / dx;
  }
  RatFunc x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
  RatFunc y3 = -(lambda + a1) * x3 - nu - a3;
  return SectionPoint::affine(x3, y3);
}

SectionPoint multiply(const WeierstrassModel& m, const SectionPoint& P, long long k) {
  SectionPoint base = k < 0 ? negate(m, P) : P;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  SectionPoint acc = SectionPoint::origin();
  while (e) {
    if (e & 1) acc = add(m, acc, base);
    e >>= 1;
    if (e) base = add(m, base, base);
  }
  return acc;
}

std::optional<int> order_of(const WeierstrassModel& m, const SectionPoint& P, int bound) {
  SectionPoint Q = P;
  for (int n = 1; n <= bound; ++n) {
    if (Q.zero) return n;
    Q = add(m, Q, P);
  }
  return std::nullopt;
}

SectionPoint transform_point(const SectionPoint& P, const CoordinateChange& c) {
  if (P.zero) return P;
  RatFunc u2 = c.u * c.u;
  RatFunc xr = P.x - c.r;
  return SectionPoint::affine(xr / u2, (P.y - c.s * xr - c.w) / (u2 * c.u));
}

// ---------------------------------------------------------------- search

namespace {

constexpr long long kSearchCap = 10'000'000;

int fp_sqrt(int a, int p) {
  for (int x = 0; x < p; ++x) {
    if (mod_reduce(std::int64_t{x} * x, p) == a) return x;
  }
  return -1;
}

// Square root of a polynomial over GF(p), p odd.
std::optional<Poly> poly_sqrt(const Poly& f) {
  int p = f.modulus();
  if (f.is_zero()) return f;
  int n = f.deg();
  if (n % 2) return std::nullopt;
  int d = n / 2;
  int lead = fp_sqrt(f.leading(), p);
  if (lead < 0) return std::nullopt;
  std::vector<int> g(static_cast<std::size_t>(d + 1), 0);
  g[static_cast<std::size_t>(d)] = lead;
  int inv2lead = mod_inverse(mod_reduce(2 * std::int64_t{lead}, p), p);
  for (int i = d - 1; i >= 0; --i) {
    // Coefficient of t^(d+i) in g^2.
    std::int64_t acc = f.coeff(d + i);
    for (int j = i + 1; j < d; ++j) {
      int k = d + i - j;
      if (k > i && k < d) acc -= std::int64_t{g[static_cast<std::size_t>(j)]} * g[static_cast<std::size_t>(k)];
    }
    g[static_cast<std::size_t>(i)] = mod_reduce(mod_reduce(acc, p) * std::int64_t{inv2lead}, p);
  }
  Poly r(p, g);
  if (r * r != f) return std::nullopt;
  return r;
}

// All polynomial Y over GF(2) with deg Y <= dy and Y^2 + b Y = c.
std::vector<Poly> solve_artin_schreier(const Poly& b, const Poly& c, int dy) {
  const int p = 2;
  int rows_n = std::max(2 * dy, dy + (b.is_zero() ? 0 : b.deg()));
  if (!c.is_zero()) {
    if (c.deg() > rows_n) return {};
  }
  rows_n += 1;
  const int cols = dy + 1;
  // Augmented matrix over GF(2), one row per coefficient.
  std::vector<std::vector<int>> mat(static_cast<std::size_t>(rows_n), std::vector<int>(static_cast<std::size_t>(cols + 1), 0));
  for (int i = 0; i <= dy; ++i) {
    Poly img = Poly::monomial(p, 1, 2 * i) + b.shifted(i);
    for (int e = 0; e < rows_n; ++e) mat[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] = img.coeff(e);
  }
  for (int e = 0; e < rows_n; ++e) mat[static_cast<std::size_t>(e)][static_cast<std::size_t>(cols)] = c.coeff(e);
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < cols && r < mat.size(); ++col) {
    std::size_t piv = r;
    while (piv < mat.size() && !mat[piv][static_cast<std::size_t>(col)]) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[r], mat[piv]);
    for (std::size_t k = 0; k < mat.size(); ++k) {
      if (k != r && mat[k][static_cast<std::size_t>(col)]) {
        for (int j = 0; j <= cols; ++j) mat[k][static_cast<std::size_t>(j)] ^= mat[r][static_cast<std::size_t>(j)];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t k = r; k < mat.size(); ++k) {
    if (mat[k][static_cast<std::size_t>(cols)]) return {};
  }
  std::vector<int> y(static_cast<std::size_t>(cols), 0);
  for (std::size_t k = 0; k < r; ++k) y[static_cast<std::size_t>(pivots[k])] = mat[k][static_cast<std::size_t>(cols)];
  Poly y0(p, y);
  // The kernel of Y -> Y^2 + bY is {0, b}.
  std::vector<Poly> out = {y0};
  if (!b.is_zero() && b.degree_at_most(dy)) out.push_back(y0 + b);
  return out;
}

struct Candidate {
  Poly D;      // finite part of the denominator
  bool at_infinity;
};

}  // namespace

std::vector<SectionPoint> torsion_search(const WeierstrassModel& input, int n, int deg_bound) {
  if (n < 2 || n > 8) throw Error("torsion order must lie in [2, 8]");
  if (deg_bound < 0 || deg_bound > 16) throw Error("degree bound must lie in [0, 16]");
  auto [m, change] = minimalize_global(input);
  int p = m.p();

  // Places where a section of order n may meet the zero section: only for
  // p | n, and only at supersingular or additive fibers.
  std::vector<Place> meet;
  if (n % p == 0) {
    SurfaceReport rep = analyze(m, AnalyzeOptions{true, false, std::nullopt});
    for (const FiberAnalysis& f : rep.fibers) {
      if (f.type.additive() || f.reduction_class == ReductionClass::GoodSupersingular) meet.push_back(f.place);
    }
  }
  std::vector<Candidate> denominators;
  for (std::size_t mask = 0; mask < (std::size_t{1} << meet.size()); ++mask) {
    Candidate c{Poly::constant(p, 1), false};
    for (std::size_t i = 0; i < meet.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      if (meet[i].is_infinity()) {
        c.at_infinity = true;
      } else {
        c.D *= meet[i].pi();
      }
    }
    denominators.push_back(c);
  }

  long long work = 0;
  std::vector<SectionPoint> found;
  for (const Candidate& cand : denominators) {
    const Poly& D = cand.D;
    int dd = D.deg() + (cand.at_infinity ? 1 : 0);
    int dx = deg_bound + 2 * dd;
    int dy = (3 * deg_bound + 1) / 2 + 3 * dd;
    long long count = 1;
    for (int i = 0; i <= dx; ++i) {
      count *= p;
      if (count > kSearchCap) break;
    }
    work += count;
    if (work > kSearchCap) throw Error("torsion search space exceeds 10^7 candidates");
    Poly D2 = D * D, D3 = D2 * D, D4 = D2 * D2, D6 = D3 * D3;
    Poly aD = m.a(1) * D, a3D3 = m.a(3) * D3, a2D2 = m.a(2) * D2, a4D4 = m.a(4) * D4, a6D6 = m.a(6) * D6;

    std::vector<int> digits(static_cast<std::size_t>(dx + 1), 0);
    for (;;) {
      Poly X(p, digits);
      // Y^2 + (a1 X D + a3 D^3) Y = X^3 + a2 X^2 D^2 + a4 X D^4 + a6 D^6
      Poly b = aD * X + a3D3;
      Poly c = ((X + a2D2) * X + a4D4) * X + a6D6;
      std::vector<Poly> ys;
      if (p == 2) {
        ys = solve_artin_schreier(b, c, dy);
      } else if (std::optional<Poly> g = poly_sqrt(b * b + c.scaled(4))) {
        int half = mod_inverse(2, p);
        ys.push_back((*g - b).scaled(half));
        if (!g->is_zero()) ys.push_back((-*g - b).scaled(half));
      }
      for (const Poly& Y : ys) {
        SectionPoint P = SectionPoint::affine(RatFunc(X, D2), RatFunc(Y, D3));
        if (!on_curve(m, P)) throw std::logic_error("torsion search produced a point off the curve");
        std::optional<int> ord = order_of(m, P, n);
        if (!ord || *ord != n) continue;
        SectionPoint back = transform_point(P, change.inverse());
        if (std::find(found.begin(), found.end(), back) == found.end()) found.push_back(back);
      }
      int i = 0;
      while (i <= dx && ++digits[static_cast<std::size_t>(i)] == p) digits[static_cast<std::size_t>(i++)] = 0;
      if (i > dx) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const SectionPoint& a, const SectionPoint& b) {
    auto key = [](const SectionPoint& s) { return std::make_tuple(s.x.den(), s.x.num(), s.y.den(), s.y.num()); };
    auto ka = key(a), kb = key(b);
    auto lt = [](const Poly& u, const Poly& v) { return Poly::less(u, v); };
    if (std::get<0>(ka) != std::get<0>(kb)) return lt(std::get<0>(ka), std::get<0>(kb));
    if (std::get<1>(ka) != std::get<1>(kb)) return lt(std::get<1>(ka), std::get<1>(kb));
    if (std::get<2>(ka) != std::get<2>(kb)) return lt(std::get<2>(ka), std::get<2>(kb));
    return lt(std::get<3>(ka), std::get<3>(kb));
  });
  return found;
}

// ---------------------------------------------------------------- fixed loci

std::string to_string(FixedLocusDescriptor::Kind k) {
  switch (k) {
    case FixedLocusDescriptor::Kind::Empty: return "empty";
    case FixedLocusDescriptor::Kind::WholeFiber: return "whole-fiber";
    case FixedLocusDescriptor::Kind::OnePoint: return "one-point";
    case FixedLocusDescriptor::Kind::CurveOfMultipleComponents: return "curve";
  }
  return "?";
}

FixedLocusDescriptor fixed_locus(const FiberAnalysis& fiber, int p, bool intersects_zero, Specialization spec) {
  using K = FixedLocusDescriptor::Kind;
  using S = KodairaType::Symbol;
  const KodairaType& t = fiber.type;
  const std::string name = t.render(p);
  if (t.symbol == S::I0) {
    if (fiber.reduction_class == ReductionClass::GoodSupersingular) {
      return {K::WholeFiber, "good supersingular fiber: the section meets the zero section"};
    }
    return {K::Empty, "good ordinary fiber: translation is free"};
  }
  if (t.multiplicative()) return {K::Empty, name + ": translation by a nontrivial torsion point is free"};
  if (intersects_zero) return {K::WholeFiber, name + ": the section meets the zero section"};

  bool theta = spec == Specialization::Theta1 || spec == Specialization::Theta2 || spec == Specialization::Theta3;
  bool star = t.symbol == S::I0s || t.symbol == S::Ins;
  if (theta && !(p == 2 && star)) throw Error("Theta components only apply to I_n* fibers in characteristic 2");

  if (spec == Specialization::Identity) {
    if (t.symbol == S::II || t.symbol == S::III || t.symbol == S::IV) return {K::OnePoint, name + ": fixed point on the cuspidal curve"};
    return {K::CurveOfMultipleComponents, name + ": fixed curve on the non-identity components"};
  }
  if (t.symbol == S::IVs && p == 3 && spec == Specialization::ComponentGroup) return {K::OnePoint, name + ": one fixed point"};
  if (t.symbol == S::IIIs && p == 2 && spec == Specialization::ComponentGroup) return {K::OnePoint, name + ": one fixed point"};
  if (star && p == 2) {
    if (t.n <= 1) {
      if (spec == Specialization::ComponentGroup) return {K::OnePoint, name + ": one fixed point"};
      throw Error(name + ": give the specialization as a component-group element");
    }
    if (t.n % 2 == 1) {
      if (spec == Specialization::ComponentGroup || spec == Specialization::Theta1) {
        return {K::CurveOfMultipleComponents, name + ": the section meets Theta_1 and fixes a chain of curves"};
      }
      throw Error(name + ": a 2-torsion section must meet Theta_1");
    }
    if (spec == Specialization::Theta1) return {K::CurveOfMultipleComponents, name + ": meets Theta_1, fixed chain of curves"};
    if (spec == Specialization::Theta2 || spec == Specialization::Theta3) return {K::OnePoint, name + ": one fixed point"};
    throw Error(name + ": specify Theta_1, Theta_2 or Theta_3");
  }
  throw Error(name + ": no p-torsion section can specialize to a non-identity component in characteristic " +
              std::to_string(p));
}

// ---------------------------------------------------------------- heights

HeightIdentity torsion_height_identity(const std::vector<FiberAnalysis>& fibers, const std::vector<int>& k, int p,
                                       int zero_intersection) {
  if (k.size() != fibers.size()) throw Error("one component index per fiber is required");
  long long num = 0;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const FiberAnalysis& f = fibers[i];
    if (!f.type.multiplicative() || f.type.n % p != 0) {
      throw Error("the identity applies to semi-stable fibers of type I_{pn} only, got " + f.type.render(p));
    }
    if (k[i] < 1 || k[i] >= p) throw Error("component index must lie in [1, p-1]");
    long long nv = f.type.n / p;
    num += f.place.degree() * nv * k[i] * (p - k[i]);
  }
  HeightIdentity h{4 + 2LL * zero_intersection, 1, num, p};
  long long g = std::gcd(h.rhs_num, h.rhs_den);
  if (g > 1) {
    h.rhs_num /= g;
    h.rhs_den /= g;
  }
  return h;
}

}  // namespace ellk3
