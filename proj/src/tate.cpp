#include "ellk3/tate.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "ellk3/brauer.hpp"

namespace ellk3 {

// ---------------------------------------------------------------- types

bool KodairaType::additive() const { return symbol != Symbol::I0 && symbol != Symbol::In; }

int KodairaType::components() const {
  switch (symbol) {
    case Symbol::I0: return 1;
    case Symbol::In: return n;
    case Symbol::II: return 1;
    case Symbol::III: return 2;
    case Symbol::IV: return 3;
    case Symbol::I0s: return 5;
    case Symbol::Ins: return n + 5;
    case Symbol::IVs: return 7;
    case Symbol::IIIs: return 8;
    case Symbol::IIs: return 9;
  }
  return 1;
}

std::string KodairaType::component_group() const {
  switch (symbol) {
    case Symbol::I0:
    case Symbol::II:
    case Symbol::IIs: return "0";
    case Symbol::In: return "Z/" + std::to_string(n);
    case Symbol::III:
    case Symbol::IIIs: return "Z/2";
    case Symbol::IV:
    case Symbol::IVs: return "Z/3";
    case Symbol::I0s: return "(Z/2)^2";
    case Symbol::Ins: return n % 2 == 0 ? "(Z/2)^2" : "Z/4";
  }
  return "0";
}

std::string KodairaType::render(int p) const {
  auto suffix = [this]() { return swan > 0 ? "_" + std::to_string(swan) : std::string(); };
  switch (symbol) {
    case Symbol::I0: return "I_0";
    case Symbol::In: return "I_" + std::to_string(n);
    case Symbol::II: return "II" + suffix();
    case Symbol::III: return "III" + suffix();
    case Symbol::IV: return "IV" + suffix();
    case Symbol::IVs: return "IV*" + suffix();
    case Symbol::IIIs: return "III*" + suffix();
    case Symbol::IIs: return "II*" + suffix();
    case Symbol::I0s:
    case Symbol::Ins:
      if (p == 2 || p == 3) return "I*_{" + std::to_string(n) + "," + std::to_string(swan) + "}";
      return "I*_" + std::to_string(n);
  }
  return "?";
}

bool KodairaType::operator<(const KodairaType& o) const {
  if (symbol != o.symbol) return static_cast<int>(symbol) < static_cast<int>(o.symbol);
  if (n != o.n) return n < o.n;
  return swan < o.swan;
}

KodairaType KodairaType::parse(const std::string& text) {
  static const std::regex star(R"(I\*_(?:\{(\d+),(\d+)\}|(\d+)))");
  static const std::regex mult(R"(I_?(\d+))");
  static const std::regex other(R"((II|III|IV)(\*?)(?:_(\d+))?)");
  std::smatch mm;
  KodairaType k;
  if (std::regex_match(text, mm, star)) {
    k.n = std::stoi(mm[1].matched ? mm[1].str() : mm[3].str());
    k.swan = mm[2].matched ? std::stoi(mm[2].str()) : 0;
    k.symbol = k.n == 0 ? Symbol::I0s : Symbol::Ins;
    return k;
  }
  if (std::regex_match(text, mm, mult)) {
    k.n = std::stoi(mm[1].str());
    k.symbol = k.n == 0 ? Symbol::I0 : Symbol::In;
    return k;
  }
  if (std::regex_match(text, mm, other)) {
    bool s = !mm[2].str().empty();
    const std::string base = mm[1].str();
    if (base == "II") k.symbol = s ? Symbol::IIs : Symbol::II;
    if (base == "III") k.symbol = s ? Symbol::IIIs : Symbol::III;
    if (base == "IV") k.symbol = s ? Symbol::IVs : Symbol::IV;
    k.swan = mm[3].matched ? std::stoi(mm[3].str()) : 0;
    return k;
  }
  throw Error("unknown Kodaira symbol '" + text + "'");
}

std::string to_string(ReductionClass c) {
  switch (c) {
    case ReductionClass::GoodOrdinary: return "good-ordinary";
    case ReductionClass::GoodSupersingular: return "good-supersingular";
    case ReductionClass::Multiplicative: return "multiplicative";
    case ReductionClass::AdditivePotMultiplicative: return "additive-pot-multiplicative";
    case ReductionClass::AdditivePotOrdinary: return "additive-pot-ordinary";
    case ReductionClass::AdditivePotSupersingular: return "additive-pot-supersingular";
  }
  return "?";
}

bool is_additive(ReductionClass c) {
  return c == ReductionClass::AdditivePotMultiplicative || c == ReductionClass::AdditivePotOrdinary ||
         c == ReductionClass::AdditivePotSupersingular;
}

std::string to_string(HeightFlag h) {
  switch (h) {
    case HeightFlag::One: return "h=1";
    case HeightFlag::AtLeastTwo: return "h>=2";
    case HeightFlag::Infinite: return "h=inf";
    case HeightFlag::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::SupersingularUnirational: return "supersingular+unirational";
    case Decision::Ordinary: return "ordinary";
    case Decision::MixedChar2: return "mixed-char2-case";
    case Decision::Undecided: return "undecided";
  }
  return "?";
}

// ---------------------------------------------------------------- Tate

namespace {

using Coeffs = std::array<Poly, 5>;

struct LocalResult {
  KodairaType type;
  int v_delta = 0;
  // Composite change up to the last rescaling; identity when already minimal.
  CoordinateChange minimizing;
};

class Tate {
 public:
  Tate(int p, Coeffs a, const Poly& pi)
      : p_(p), a_(std::move(a)), pi_(pi), k_(pi), total_(CoordinateChange::identity(p)),
        minimizing_(CoordinateChange::identity(p)) {}

  LocalResult run();

 private:
  const Poly& a(int i) const { return a_[static_cast<std::size_t>(i == 6 ? 4 : i - 1)]; }
  int val(const Poly& f) const { return valuation(f, pi_); }
  bool zero(const Poly& f) const { return k_.is_zero(f); }
  Poly red(const Poly& f) const { return k_.reduce(f); }
  Poly inv(const Poly& f) const { return k_.inv(f); }
  Poly unit(int c) const { return Poly::constant(p_, c); }
  Poly inv_int(int c) const { return unit(mod_inverse(c, p_)); }
  Poly root(const Poly& f, int e) const { return k_.char_root(f, e); }
  Poly div_pi(const Poly& f, int e) const { return exact_div(f, pow(pi_, e)); }

  void apply(const Poly& r, const Poly& s, const Poly& w) {
    a_ = translate(a_, r, s, w);
    total_ = total_.then(CoordinateChange::translation(r, s, w));
  }

  LocalResult done(KodairaType::Symbol sym, int n, int v_delta) const {
    KodairaType t;
    t.symbol = sym;
    t.n = n;
    if (t.additive()) t.swan = v_delta - 2 - (t.components() - 1);
    if (t.swan < 0) throw std::logic_error("negative Swan conductor from Ogg's formula");
    return {t, v_delta, minimizing_};
  }

  int p_;
  Coeffs a_;
  Poly pi_;
  ResidueField k_;
  CoordinateChange total_;
  CoordinateChange minimizing_;
};

LocalResult Tate::run() {
  using S = KodairaType::Symbol;
  const Poly zero_poly(p_);
  const Poly pi2 = pi_ * pi_;
  for (;;) {
    InvariantSet inv0 = invariants(a_);
    int vd = val(inv0.delta);
    if (vd == 0) return done(S::I0, 0, 0);

    // Move the singular point of the reduction to (0, 0).
    Poly r(p_), w(p_);
    if (p_ == 2) {
      if (zero(inv0.b2)) {
        r = root(a(4), 2);
        w = root(((r + a(2)) * r + a(4)) * r + a(6), 2);
      } else {
        Poly ia1 = inv(a(1));
        r = ia1 * a(3);
        w = ia1 * (a(4) + r * r);
      }
    } else if (p_ == 3) {
      if (zero(inv0.b2)) {
        r = root(-inv0.b6, 3);
      } else {
        r = -(inv(inv0.b2) * inv0.b4);
      }
      w = a(1) * r + a(3);
    } else {
      if (zero(inv0.c4)) {
        r = -(inv_int(12) * inv0.b2);
      } else {
        r = -(inv(inv0.c4.scaled(12)) * (inv0.c6 + inv0.b2 * inv0.c4));
      }
      w = -(inv_int(2) * (a(1) * r + a(3)));
    }
    apply(red(r), zero_poly, red(w));
    InvariantSet inv1 = invariants(a_);

    if (!zero(inv1.b2)) return done(S::In, vd, vd);
    if (val(a(6)) < 2) return done(S::II, 0, vd);
    if (val(inv1.b8) < 3) return done(S::III, 0, vd);
    if (val(inv1.b6) < 3) return done(S::IV, 0, vd);

    // Make pi | a1, a2 and pi^2 | a3, a4 and pi^3 | a6.
    Poly s(p_);
    if (p_ == 2) {
      s = root(a(2), 2);
      w = pi_ * root(div_pi(a(6), 2), 2);
    } else if (p_ == 3) {
      // Unreduced on purpose: a3 + 2w must vanish to second order.
      s = a(1);
      w = a(3);
    } else {
      s = -(a(1) * inv_int(2));
      w = -(a(3) * inv_int(2));
    }
    apply(zero_poly, s, w);

    // P(T) = T^3 + b T^2 + c T + d.
    Poly b = div_pi(a(2), 1);
    Poly c = div_pi(a(4), 2);
    Poly d = div_pi(a(6), 3);
    Poly bb = b * b, cc = c * c, bc = b * c;
    Poly disc = (d * d).scaled(27) - bb * cc + (bb * b * d).scaled(4) - (bc * d).scaled(18) + (cc * c).scaled(4);
    Poly xx = c.scaled(3) - bb;

    if (!zero(disc)) return done(S::I0s, 0, vd);

    if (!zero(xx)) {
      // Double root: move it to T = 0 and run the I_n* subprocedure.
      Poly rr(p_);
      if (p_ == 2) {
        rr = root(c, 2);
      } else if (p_ == 3) {
        rr = c * inv(b);
      } else {
        rr = (bc - d.scaled(9)) * inv(xx.scaled(2));
      }
      apply(pi_ * red(rr), zero_poly, zero_poly);
      int ix = 3, iy = 3;
      Poly mx = pi2, my = pi2;
      for (;;) {
        Poly a2t = div_pi(a(2), 1);
        Poly a3t = exact_div(a(3), my);
        Poly a4t = exact_div(a(4), pi_ * mx);
        Poly a6t = exact_div(a(6), mx * my);
        if (!zero(a3t * a3t + a6t.scaled(4))) break;
        Poly t(p_);
        if (p_ == 2) {
          t = my * root(a6t, 2);
        } else {
          t = my * red(-(a3t * inv_int(2)));
        }
        apply(zero_poly, zero_poly, t);
        my = my * pi_;
        ++iy;
        a2t = div_pi(a(2), 1);
        a3t = exact_div(a(3), my);
        a4t = exact_div(a(4), pi_ * mx);
        a6t = exact_div(a(6), mx * my);
        if (!zero(a4t * a4t - (a6t * a2t).scaled(4))) break;
        if (p_ == 2) {
          t = mx * root(a6t * inv(a2t), 2);
        } else {
          t = mx * red(-(a4t * inv(a2t.scaled(2))));
        }
        apply(t, zero_poly, zero_poly);
        mx = mx * pi_;
        ++ix;
      }
      return done(S::Ins, ix + iy - 5, vd);
    }

    // Triple root: move it to T = 0.
    Poly rr(p_);
    if (p_ == 2) {
      rr = b;
    } else if (p_ == 3) {
      rr = root(-d, 3);
    } else {
      rr = -(b * inv_int(3));
    }
    apply(pi_ * red(rr), zero_poly, zero_poly);
    Poly a3t = div_pi(a(3), 2);
    Poly a6t = div_pi(a(6), 4);
    if (!zero(a3t * a3t + a6t.scaled(4))) return done(S::IVs, 0, vd);
    Poly t(p_);
    if (p_ == 2) {
      t = pi2 * root(a6t, 2);
    } else {
      t = pi2 * red(-(a3t * inv_int(2)));
    }
    apply(zero_poly, zero_poly, t);
    if (val(a(4)) < 4) return done(S::IIIs, 0, vd);
    if (val(a(6)) < 6) return done(S::IIs, 0, vd);

    // Not minimal: divide by pi and start over.
    for (std::size_t i = 0; i < 5; ++i) a_[i] = div_pi(a_[i], kWeights[i]);
    total_ = total_.then(CoordinateChange::scaling(RatFunc(pi_)));
    minimizing_ = total_;
  }
}

LocalResult run_local(const WeierstrassModel& m, const Place& v) {
  if (v.is_infinity()) {
    WeierstrassModel flipped = infinity_chart(m);
    return Tate(m.p(), flipped.coeffs(), Poly::t(m.p())).run();
  }
  return Tate(m.p(), m.coeffs(), v.pi()).run();
}

ReductionClass classify_reduction(const KodairaType& type, const RatFunc& j, const Place& v) {
  int p = j.modulus();
  if (type.multiplicative()) return ReductionClass::Multiplicative;
  int vj = valuation(j, v);
  if (vj < 0) {
    if (!type.additive()) throw std::logic_error("good reduction with a pole of j");
    return ReductionClass::AdditivePotMultiplicative;
  }
  Poly jr = residue(j, v);
  ResidueField k(v.is_infinity() ? Poly::t(p) : v.pi());
  bool ss = is_supersingular_j(k, jr);
  if (type.additive()) return ss ? ReductionClass::AdditivePotSupersingular : ReductionClass::AdditivePotOrdinary;
  return ss ? ReductionClass::GoodSupersingular : ReductionClass::GoodOrdinary;
}

FiberAnalysis make_fiber(const Place& v, const LocalResult& r, const RatFunc& j) {
  FiberAnalysis f{v, r.type, r.type.components(), r.v_delta, r.type.component_group(),
                  classify_reduction(r.type, j, v)};
  // Ogg consistency and tameness away from 2 and 3.
  if (r.type.multiplicative() && r.v_delta != r.type.n) throw std::logic_error("I_n with v(delta) != n");
  if (r.type.additive() && r.v_delta != 2 + r.type.swan + f.m - 1) throw std::logic_error("Ogg's formula violated");
  if (r.type.swan != 0 && v.modulus() > 3) throw std::logic_error("wild ramification for p >= 5");
  return f;
}

}  // namespace

FiberAnalysis tate_local(const WeierstrassModel& m, const Place& v) {
  return make_fiber(v, run_local(m, v), j_invariant(m));
}

bool is_globally_minimal(const WeierstrassModel& m) {
  Poly delta = discriminant(m);
  if (WeierstrassModel::degree_chi(m.coeffs()) != m.chi()) return false;
  if (12 * m.chi() - delta.deg() >= 12 && !run_local(m, Place::infinity(m.p())).minimizing.is_identity()) {
    return false;
  }
  if (delta.is_constant()) return true;
  for (const Factor& f : factor(delta).factors) {
    if (f.mult < 12) continue;
    if (!run_local(m, Place::finite(f.pi)).minimizing.is_identity()) return false;
  }
  return true;
}

std::pair<WeierstrassModel, CoordinateChange> minimalize_global(const WeierstrassModel& m) {
  int p = m.p();
  WeierstrassModel cur = m.with_chi(WeierstrassModel::degree_chi(m.coeffs()));
  CoordinateChange change = CoordinateChange::identity(p);
  Poly delta = discriminant(cur);
  if (!delta.is_constant()) {
    for (const Factor& f : factor(delta).factors) {
      if (f.mult < 12) continue;
      LocalResult r = Tate(p, cur.coeffs(), f.pi).run();
      if (r.minimizing.is_identity()) continue;
      cur = change_coordinates(cur, r.minimizing);
      change = change.then(r.minimizing);
    }
  }
  cur = cur.with_chi(WeierstrassModel::degree_chi(cur.coeffs()));
  int chi0 = cur.chi();
  if (12 * chi0 - discriminant(cur).deg() >= 12) {
    WeierstrassModel flipped = infinity_chart(cur);
    LocalResult r = Tate(p, flipped.coeffs(), Poly::t(p)).run();
    if (!r.minimizing.is_identity()) {
      // Translate back to the finite chart: r_t = t^(2 chi) R(1/t) and so on.
      const CoordinateChange& c = r.minimizing;
      if (!c.r.is_polynomial() || !c.s.is_polynomial() || !c.w.is_polynomial()) {
        throw std::logic_error("non-integral change at infinity");
      }
      CoordinateChange back = CoordinateChange::translation(c.r.num().reversed(2 * chi0), c.s.num().reversed(chi0),
                                                            c.w.num().reversed(3 * chi0));
      cur = change_coordinates(cur, back);
      change = change.then(back);
      int k = valuation(c.u.num(), Poly::t(p));
      if (WeierstrassModel::degree_chi(cur.coeffs()) > chi0 - k) throw std::logic_error("reduction at infinity failed");
    }
  }
  cur = cur.with_chi(WeierstrassModel::degree_chi(cur.coeffs()));
  return {cur, change};
}

// ---------------------------------------------------------------- reports

int SurfaceReport::geometric_additive_count() const {
  int n = 0;
  for (const FiberAnalysis& f : fibers) {
    if (f.type.additive()) n += f.place.degree();
  }
  return n;
}

int SurfaceReport::geometric_pot_supersingular_count() const {
  int n = 0;
  for (const FiberAnalysis& f : fibers) {
    if (f.reduction_class == ReductionClass::AdditivePotSupersingular ||
        f.reduction_class == ReductionClass::GoodSupersingular) {
      n += f.place.degree();
    }
  }
  return n;
}

namespace {

// Places of good reduction whose j-residue is supersingular.
std::vector<Place> good_supersingular_candidates(const RatFunc& j) {
  int p = j.modulus();
  Poly s = supersingular_polynomial(p);
  // Numerator of S(j) = sum s_k N^k D^(deg S - k).
  int ds = s.deg();
  Poly acc(p);
  for (int k = 0; k <= ds; ++k) {
    if (!s.coeff(k)) continue;
    acc += (pow(j.num(), k) * pow(j.den(), ds - k)).scaled(s.coeff(k));
  }
  std::vector<Place> out;
  if (!acc.is_zero() && !acc.is_constant()) {
    for (const Poly& pi : distinct_irreducible_factors(acc)) out.push_back(Place::finite(pi));
  }
  return out;
}

}  // namespace

SurfaceReport analyze(const WeierstrassModel& input, const AnalyzeOptions& options) {
  int p = input.p();
  auto [model, change] = options.raw ? std::make_pair(input, CoordinateChange::identity(p)) : minimalize_global(input);
  SurfaceReport rep(model, change);
  InvariantSet inv = invariants(model);

  std::vector<Place> places;
  if (!inv.delta.is_constant()) {
    for (const Poly& pi : distinct_irreducible_factors(inv.delta)) places.push_back(Place::finite(pi));
  }
  for (const Place& v : good_supersingular_candidates(inv.j)) {
    if (valuation(inv.delta, v) == 0) places.push_back(v);
  }
  places.push_back(Place::infinity(p));
  std::sort(places.begin(), places.end(), Place::less);

  int c2 = 0;
  for (const Place& v : places) {
    LocalResult r = run_local(model, v);
    FiberAnalysis f = make_fiber(v, r, inv.j);
    c2 += v.degree() * f.v_delta_min;
    if (f.type.symbol == KodairaType::Symbol::I0 && f.reduction_class != ReductionClass::GoodSupersingular) continue;
    rep.fibers.push_back(std::move(f));
  }
  rep.c2 = c2;
  if (!options.raw) {
    if (c2 != 12 * model.chi()) throw std::logic_error("Euler number bookkeeping failed");
    int chi = model.chi();
    rep.surface_class = {chi == 1   ? SurfaceClass::Kind::Rational
                         : chi == 2 ? SurfaceClass::Kind::K3
                                    : SurfaceClass::Kind::Other,
                         chi};
  } else {
    rep.surface_class = {SurfaceClass::Kind::Other, model.chi()};
  }

  bool k3 = rep.surface_class.kind == SurfaceClass::Kind::K3;
  if (k3 && (options.brauer_flags || options.torsion)) {
    rep.height_flag = height_flag(model);
  }
  if (options.torsion) {
    bool pn = *options.torsion >= 3;
    // The classification only covers K3 surfaces.
    Decision d = k3 ? supersingularity_decision(rep, pn) : Decision::Undecided;
    rep.decision = d;
    if (d == Decision::SupersingularUnirational) {
      rep.supersingular = true;
      rep.unirational_implied = true;
      rep.height_flag = HeightFlag::Infinite;
    } else if (d == Decision::Ordinary) {
      rep.supersingular = false;
      rep.height_flag = HeightFlag::One;
    } else if (d == Decision::MixedChar2) {
      rep.height_flag = HeightFlag::AtLeastTwo;
    }
  } else if (rep.height_flag == HeightFlag::One) {
    rep.supersingular = false;
  }
  return rep;
}

std::vector<FiberCount> fiber_multiset(const std::vector<FiberAnalysis>& fibers) {
  std::map<KodairaType, int> counts;
  for (const FiberAnalysis& f : fibers) {
    if (f.type.symbol == KodairaType::Symbol::I0) continue;
    counts[f.type] += f.place.degree();
  }
  std::vector<FiberCount> out;
  for (const auto& [t, c] : counts) out.push_back({t, c});
  return out;
}

std::string render_multiset(const std::vector<FiberCount>& fibers, int p) {
  std::ostringstream os;
  bool first = true;
  for (const FiberCount& f : fibers) {
    if (!first) os << ", ";
    first = false;
    if (f.count > 1) os << f.count << "x";
    os << f.type.render(p);
  }
  return os.str();
}

std::vector<FiberCount> parse_multiset(const std::string& text) {
  std::vector<FiberCount> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(", ", pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    int count = 1;
    if (std::size_t x = item.find('x'); x != std::string::npos) {
      count = std::stoi(item.substr(0, x));
      item = item.substr(x + 1);
    }
    out.push_back({KodairaType::parse(item), count});
    pos = end + 2;
  }
  std::sort(out.begin(), out.end(), [](const FiberCount& a, const FiberCount& b) { return a.type < b.type; });
  return out;
}

SurfaceClass classify_surface(const WeierstrassModel& m) {
  if (!is_globally_minimal(m)) throw Error("model is not globally minimal; run minimalize_global first");
  Poly delta = discriminant(m);
  int total = 0;
  for (const Factor& f : factor(delta).factors) total += f.pi.deg() * f.mult;
  total += 12 * m.chi() - delta.deg();
  if (total != 12 * m.chi()) throw std::logic_error("discriminant degree mismatch");
  int chi = m.chi();
  if (chi == 1) return {SurfaceClass::Kind::Rational, chi};
  if (chi == 2) return {SurfaceClass::Kind::K3, chi};
  return {SurfaceClass::Kind::Other, chi};
}

}  // namespace ellk3
