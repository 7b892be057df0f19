#include "ellk3/families.hpp"

#include <array>
#include <sstream>

namespace ellk3 {

namespace {

struct KindName {
  FamilyKind kind;
  const char* name;
};
constexpr std::array<KindName, 7> kKinds = {{
    {FamilyKind::P5AlphaBeta, "p5_alpha_beta"},
    {FamilyKind::P3Deg6, "p3_deg6"},
    {FamilyKind::P3Deg5, "p3_deg5"},
    {FamilyKind::P3Deg4, "p3_deg4"},
    {FamilyKind::P2E84, "p2_e84"},
    {FamilyKind::P2Twist, "p2_twist"},
    {FamilyKind::IgusaTower, "igusa_tower"},
}};

class Params {
 public:
  Params(const FamilySpec& spec, std::vector<std::string> allowed) : spec_(spec) {
    for (const auto& [k, v] : spec.parameters) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        throw Error(to_string(spec.family) + ": unknown parameter '" + k + "'");
      }
    }
  }

  bool has(const std::string& k) const { return spec_.parameters.count(k) != 0; }

  const std::string& text(const std::string& k) const {
    auto it = spec_.parameters.find(k);
    if (it == spec_.parameters.end()) throw Error(to_string(spec_.family) + ": missing parameter '" + k + "'");
    return it->second;
  }

  // Element of F_p; absent optional parameters read as 0.
  int element(const std::string& k, int p, bool required = true) const {
    if (!required && !has(k)) return 0;
    Poly c = parse_poly(text(k), p);
    if (!c.is_constant()) throw Error(to_string(spec_.family) + ": parameter '" + k + "' must be a constant");
    return c.coeff(0);
  }

  int integer(const std::string& k, int fallback) const {
    if (!has(k)) return fallback;
    try {
      std::size_t used = 0;
      int v = std::stoi(text(k), &used);
      if (used != text(k).size()) throw std::invalid_argument(k);
      return v;
    } catch (const std::logic_error&) {
      throw Error(to_string(spec_.family) + ": parameter '" + k + "' must be an integer");
    }
  }

 private:
  const FamilySpec& spec_;
};

// X = Y^(p^k) with the raw-to-minimal change kept for transporting points.
FamilyMember pull_back(const WeierstrassModel& y, int k, bool raw, int torsion) {
  WeierstrassModel x = y;
  for (int i = 0; i < k; ++i) x = frobenius_pullback(x, true);
  FamilyMember out{x, y, CoordinateChange::identity(y.p()), torsion, {}};
  if (!raw) {
    auto [m, c] = minimalize_global(x);
    out.model = m;
    out.change = c;
  }
  return out;
}

FamilyMember p3_family(const FamilySpec& spec, bool raw) {
  const int p = 3;
  int deg = spec.family == FamilyKind::P3Deg6 ? 6 : spec.family == FamilyKind::P3Deg5 ? 5 : 4;
  std::vector<std::string> names = {"r4", "r3", "r2"};
  if (deg >= 5) names.push_back("r1");
  if (deg == 6) names.push_back("r0");
  Params prm(spec, names);
  std::array<int, 5> r{};  // r0..r4
  for (int i = 0; i <= 4; ++i) {
    std::string key = "r" + std::to_string(i);
    bool present = std::find(names.begin(), names.end(), key) != names.end();
    r[static_cast<std::size_t>(i)] = present ? prm.element(key, p) : 0;
  }
  if (deg == 6 && (r[1] == 0 || r[0] == 0)) throw Error("deg phi=6 requires r1*r0 != 0");
  if (deg == 5 && r[1] == 0) throw Error("deg phi=5 requires r1 != 0, r0 = 0");
  if (deg == 4 && r[2] == 0) throw Error("deg phi=4 requires r2 != 0, r1 = r0 = 0");

  // y^2 = x^3 + t^2 x^2 + g(t), g = t^5 + r4 t^4 + ... + r0.
  Poly g(p, {r[0], r[1], r[2], r[3], r[4], 1});
  Poly zero(p);
  WeierstrassModel y(p, {zero, Poly::monomial(p, 1, 2), zero, zero, g}, -1, to_string(spec.family));
  FamilyMember out = pull_back(y, 1, raw, 3);

  // On the raw pullback the cube roots of the r_i are the r_i themselves:
  // x = -g(t), y = +-t^3 g(t).
  RatFunc x0 = RatFunc(-g);
  RatFunc y0 = RatFunc(Poly::monomial(p, 1, 3) * g);
  for (const RatFunc& yy : {y0, -y0}) {
    SectionPoint P = SectionPoint::affine(x0, yy);
    out.sections.push_back(raw ? P : transform_point(P, out.change));
  }
  return out;
}

}  // namespace

std::string to_string(FamilyKind k) {
  for (const auto& e : kKinds) {
    if (e.kind == k) return e.name;
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (const auto& e : kKinds) {
    if (name == e.name) return e.kind;
  }
  throw Error("unknown family '" + name + "'");
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  os << to_string(family);
  for (const auto& [k, v] : parameters) os << " " << k << "=" << v;
  return os.str();
}

FamilyMember generate(const FamilySpec& spec, bool raw) {
  switch (spec.family) {
    case FamilyKind::P5AlphaBeta: {
      const int p = 5;
      Params prm(spec, {"alpha", "beta"});
      int alpha = prm.element("alpha", p);
      int beta = prm.element("beta", p);
      if (alpha == beta) throw Error("p5_alpha_beta requires alpha != beta (the classifying map would be constant)");
      // t = (alpha s^2 + beta) / (s^2 + 1), branched over alpha and beta.
      ClassifyingMap phi(Poly(p, {beta, 0, alpha}), Poly(p, {1, 0, 1}));
      WeierstrassModel y = base_change(igusa_universal(5).model, phi).with_label(spec.describe());
      return pull_back(y, 1, raw, 5);
    }
    case FamilyKind::P3Deg6:
    case FamilyKind::P3Deg5:
    case FamilyKind::P3Deg4:
      return p3_family(spec, raw);
    case FamilyKind::P2E84: {
      const int p = 2;
      Params prm(spec, {"r4", "r3", "r2"});
      // y^2 + txy = x^3 + t^5 + r4 t^4 + r3 t^3 + r2 t^2
      Poly a6(p, {0, 0, prm.element("r2", p), prm.element("r3", p), prm.element("r4", p), 1});
      Poly zero(p);
      WeierstrassModel y(p, {Poly::monomial(p, 1, 1), zero, zero, zero, a6}, -1, spec.describe());
      return pull_back(y, 2, raw, 4);
    }
    case FamilyKind::P2Twist: {
      const int p = 2;
      Params prm(spec, {"g", "a1", "a2", "a3", "a4", "a6"});
      std::array<std::string, 5> a = {"1", "0", "0", "0", "t^2"};
      const std::array<const char*, 5> keys = {"a1", "a2", "a3", "a4", "a6"};
      bool custom = false;
      for (const char* k : keys) custom = custom || prm.has(k);
      if (custom) {
        for (std::size_t i = 0; i < keys.size(); ++i) a[i] = prm.has(keys[i]) ? prm.text(keys[i]) : "0";
      }
      WeierstrassModel base = model_from_strings(p, a, "twist base");
      RatFunc g = parse_ratfunc(prm.text("g"), p);
      WeierstrassModel x = quadratic_twist_char2(base, g, raw).with_label(spec.describe());
      return {x, base, CoordinateChange::identity(p), 2, {}};
    }
    case FamilyKind::IgusaTower: {
      Params prm(spec, {"p_power", "k", "phi"});
      int q = prm.integer("p_power", 0);
      IgusaEntry e = igusa_universal(q);
      int k = prm.integer("k", 0);
      if (k < 0 || k > 4) throw Error("igusa_tower: k must lie in [0, 4]");
      WeierstrassModel y = e.model;
      if (prm.has("phi")) y = base_change(y, ClassifyingMap::parse(prm.text("phi"), e.p));
      y = y.with_label(spec.describe());
      return pull_back(y, k, raw, k >= e.level ? q : 0);
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace ellk3
