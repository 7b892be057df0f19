#include "ellk3/frobext.hpp"

#include <algorithm>
#include <functional>

namespace ellk3 {

// ---------------------------------------------------------------- maps

ClassifyingMap::ClassifyingMap(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error("classifying map has zero denominator");
  RatFunc f(num, den);
  if (f.is_constant()) throw Error("classifying map must be non-constant");
  num = f.num();
  den = f.den();
}

ClassifyingMap ClassifyingMap::parse(const std::string& text, int p) {
  char var = text.find('s') != std::string::npos ? 's' : 't';
  RatFunc f = parse_ratfunc(text, p, var);
  return ClassifyingMap(f.num(), f.den());
}

int ClassifyingMap::degree() const {
  int dn = num.is_zero() ? 0 : num.deg();
  return std::max(dn, den.deg());
}

std::string ClassifyingMap::to_string() const { return as_ratfunc().to_string('s'); }

namespace {

// sum c_k N^k D^(n-k) for f = sum c_k t^k, deg f <= n.
Poly homogenize(const Poly& f, int n, const Poly& N, const Poly& D) {
  int p = N.modulus();
  Poly out(p);
  if (f.is_zero()) return out;
  std::vector<Poly> npow = {Poly::constant(p, 1)}, dpow = {Poly::constant(p, 1)};
  for (int k = 1; k <= n; ++k) {
    npow.push_back(npow.back() * N);
    dpow.push_back(dpow.back() * D);
  }
  for (int k = 0; k <= f.deg(); ++k) {
    if (f.coeff(k)) out += (npow[static_cast<std::size_t>(k)] * dpow[static_cast<std::size_t>(n - k)]).scaled(f.coeff(k));
  }
  return out;
}

WeierstrassModel finish(const WeierstrassModel& raw_model, bool raw) {
  return raw ? raw_model : minimalize_global(raw_model).first;
}

}  // namespace

WeierstrassModel frobenius_pullback(const WeierstrassModel& m, bool raw) {
  int p = m.p();
  std::array<Poly, 5> b;
  for (std::size_t i = 0; i < 5; ++i) b[i] = m.coeffs()[i].inflate(p);
  return finish(WeierstrassModel(p, std::move(b), p * m.chi(), m.label()), raw);
}

WeierstrassModel base_change(const WeierstrassModel& m, const ClassifyingMap& phi, bool raw) {
  int p = m.p();
  if (phi.num.modulus() != p) throw Error("classifying map over a different field");
  int chi = m.chi();
  std::array<Poly, 5> b;
  for (std::size_t i = 0; i < 5; ++i) b[i] = homogenize(m.coeffs()[i], kWeights[i] * chi, phi.num, phi.den);
  return finish(WeierstrassModel(p, std::move(b), chi * phi.degree(), m.label()), raw);
}

WeierstrassModel quadratic_twist_char2(const WeierstrassModel& m, const RatFunc& g, bool raw) {
  if (m.p() != 2) throw Error("the Artin-Schreier twist is only defined in characteristic 2");
  if (m.a(1).is_zero()) throw Error("twist by a2 + g a1^2 is trivial when a1 = 0");
  std::array<RatFunc, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = RatFunc(m.coeffs()[i]);
  a[1] = a[1] + g * RatFunc(m.a(1) * m.a(1));
  return finish(model_from_rational(2, a, m.label()), raw);
}

// ---------------------------------------------------------------- descent

namespace {

bool is_pth_power(const Poly& f) {
  int p = f.modulus();
  const std::vector<int>& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] && e % static_cast<std::size_t>(p) != 0) return false;
  }
  return true;
}

// Exponents that are not multiples of p.
Poly off_part(const Poly& f) {
  int p = f.modulus();
  std::vector<int> c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); e += static_cast<std::size_t>(p)) c[e] = 0;
  return Poly(p, c);
}

Poly p_root(const Poly& f) {
  int p = f.modulus();
  std::vector<int> c;
  for (std::size_t e = 0; e < f.coeffs().size(); e += static_cast<std::size_t>(p)) c.push_back(f.coeffs()[e]);
  return Poly(p, c);
}

// Some x supported on exponents prime to p, deg x <= D, with alpha x + beta
// a p-th power. Gaussian elimination over GF(p).
std::optional<Poly> solve_off(const Poly& alpha, const Poly& beta, int D) {
  int p = beta.modulus() ? beta.modulus() : alpha.modulus();
  std::vector<int> vars;
  for (int i = 1; i <= D; ++i) {
    if (i % p) vars.push_back(i);
  }
  int top = D + (alpha.is_zero() ? 0 : alpha.deg());
  if (!beta.is_zero()) top = std::max(top, beta.deg());
  std::vector<std::vector<int>> rows;
  for (int e = 1; e <= top; ++e) {
    if (e % p == 0) continue;
    std::vector<int> row;
    for (int i : vars) row.push_back(e - i >= 0 ? alpha.coeff(e - i) : 0);
    row.push_back(mod_reduce(-std::int64_t{beta.coeff(e)}, p));
    rows.push_back(std::move(row));
  }
  const std::size_t nv = vars.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nv && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    int inv = mod_inverse(rows[r][c], p);
    for (int& x : rows[r]) x = mod_reduce(std::int64_t{x} * inv, p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      int f = rows[k][c];
      for (std::size_t j = 0; j <= nv; ++j) rows[k][j] = mod_reduce(rows[k][j] - std::int64_t{f} * rows[r][j], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k) {
    if (rows[k][nv] != 0) return std::nullopt;
  }
  std::vector<int> x(static_cast<std::size_t>(D + 1), 0);
  for (std::size_t k = 0; k < r; ++k) x[static_cast<std::size_t>(vars[static_cast<std::size_t>(pivot_col[k])])] = rows[k][nv];
  return Poly(p, x);
}

// Calls f on every polynomial sum c_i t^(p i) with p i <= D.
bool for_each_pth_power(int p, int D, const std::function<bool(const Poly&)>& f) {
  int n = D / p + 1;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<int> c(static_cast<std::size_t>(p * (n - 1) + 1), 0);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(p * i)] = digits[static_cast<std::size_t>(i)];
    if (f(Poly(p, c))) return true;
    int i = 0;
    while (i < n && ++digits[static_cast<std::size_t>(i)] == p) digits[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
  }
}

using Coeffs = std::array<Poly, 5>;

bool all_pth_powers(const Coeffs& a) {
  return std::all_of(a.begin(), a.end(), is_pth_power);
}

// Translations making every coefficient a p-th power, with deg r <= D.
std::optional<Coeffs> translate_to_powers(const Coeffs& a, int D) {
  int p = a[0].modulus();
  Poly zero(p);
  if (p >= 5) return all_pth_powers(a) ? std::optional<Coeffs>(a) : std::nullopt;
  if (p == 3) {
    // a1 = a3 = 0; a2 fixed, a4 + 2 a2 r and a6 + a4 r + a2 r^2 + r^3.
    const Poly &a2 = a[1], &a4 = a[3];
    if (!is_pth_power(a2)) return std::nullopt;
    std::optional<Coeffs> found;
    auto check = [&](const Poly& r) {
      Coeffs b = translate(a, r, zero, zero);
      if (all_pth_powers(b)) {
        found = b;
        return true;
      }
      return false;
    };
    if (!a2.is_zero()) {
      std::optional<Poly> r0 = solve_off(a2.scaled(2), a4, D);
      if (!r0) return std::nullopt;
      for_each_pth_power(p, D, [&](const Poly& c) { return check(*r0 + c); });
    } else {
      if (!is_pth_power(a4)) return std::nullopt;
      // Every r works for a4; enumerate the prime-to-3 part too.
      for_each_pth_power(p, D, [&](const Poly& c) {
        std::function<bool(int, Poly)> rec = [&](int e, Poly r) {
          if (e > D) return check(r);
          if (e % p == 0) return rec(e + 1, r);
          for (int v = 0; v < p; ++v) {
            if (rec(e + 1, r + Poly::monomial(p, v, e))) return true;
          }
          return false;
        };
        return rec(1, c);
      });
    }
    return found;
  }
  // p = 2. a1 is fixed and must be a square. The odd parts of r, s and w are
  // forced by a3, a2 and a4 (or a2, a4 and a6 when a1 = 0); the even parts
  // of r and s are enumerated and the even part of w does not matter.
  const Poly &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3];
  if (!is_pth_power(a1)) return std::nullopt;
  int Ds = (D + 1) / 2;
  std::optional<Coeffs> found;
  auto try_rs = [&](const Poly& r, const Poly& s) -> bool {
    // w only enters a4 through (w + rs) a1, and a6 through w^2 + w a3'.
    Coeffs b = translate(a, r, s, zero);
    std::optional<Poly> w = a1.is_zero() ? solve_off(b[2], b[4], D + Ds) : solve_off(a1, b[3], D + Ds);
    if (!w) return false;
    Coeffs c = translate(a, r, s, *w);
    if (all_pth_powers(c)) {
      found = c;
      return true;
    }
    return false;
  };
  if (!a1.is_zero()) {
    std::optional<Poly> r_odd = solve_off(a1, a3, D);
    if (!r_odd) return std::nullopt;
    for_each_pth_power(p, D, [&](const Poly& r_even) {
      Poly r = *r_odd + r_even;
      return for_each_pth_power(p, Ds, [&](const Poly& s_even) {
        // a2 + s a1 + r + s^2: odd(s) from the linear part.
        std::optional<Poly> s_odd = solve_off(a1, a2 + r, Ds);
        if (!s_odd) return false;
        return try_rs(r, *s_odd + s_even);
      });
    });
  } else {
    if (!is_pth_power(a3)) return std::nullopt;
    Poly r_odd = off_part(a2);
    for_each_pth_power(p, D, [&](const Poly& r_even) {
      Poly r = r_odd + r_even;
      return for_each_pth_power(p, Ds, [&](const Poly& s_even) {
        // a4 + s a3 + r^2.
        std::optional<Poly> s_odd = solve_off(a3, a4 + r * r, Ds);
        if (!s_odd) return false;
        return try_rs(r, *s_odd + s_even);
      });
    });
  }
  return found;
}

}  // namespace

std::optional<DescentResult> frobenius_descent(const WeierstrassModel& input) {
  int p = input.p();
  WeierstrassModel m = minimalize_global(input).first;
  if (p >= 5) m = normalize(m, NormalForm::A1A2A3Zero).first;
  if (p == 3) m = normalize(m, NormalForm::A1A3Zero).first;

  // Candidate scalings u = prod pi^k over finite additive places.
  std::vector<Poly> places;
  std::vector<std::vector<int>> exps;
  for (const Poly& pi : distinct_irreducible_factors(discriminant(m))) {
    FiberAnalysis f = tate_local(m, Place::finite(pi));
    if (!f.type.additive()) continue;
    places.push_back(pi);
    std::vector<int> ks;
    if (p >= 5) {
      // 4k + v(a4) and 6k + v(a6) must both vanish mod p.
      for (int k = 0; k < p; ++k) {
        bool ok = true;
        for (int i : {3, 4}) {
          const Poly& c = m.coeffs()[static_cast<std::size_t>(i)];
          if (!c.is_zero() && (kWeights[static_cast<std::size_t>(i)] * k + valuation(c, pi)) % p != 0) ok = false;
        }
        if (ok) ks.push_back(k);
      }
    } else {
      ks = {0, 1, 2, 3};
    }
    if (ks.empty()) return std::nullopt;
    exps.push_back(ks);
  }

  std::vector<std::size_t> idx(places.size(), 0);
  for (;;) {
    Poly u = Poly::constant(p, 1);
    for (std::size_t i = 0; i < places.size(); ++i) u *= pow(places[i], exps[i][idx[i]]);
    Coeffs a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = m.coeffs()[i] * pow(u, kWeights[i]);
    int chi = WeierstrassModel::degree_chi(a);
    for (int extra = 0; extra <= 1; ++extra) {
      std::optional<Coeffs> b = translate_to_powers(a, 2 * (chi + extra));
      if (!b) continue;
      Coeffs y;
      for (std::size_t i = 0; i < 5; ++i) y[i] = p_root((*b)[i]);
      WeierstrassModel ym = minimalize_global(WeierstrassModel(p, y)).first;
      return DescentResult{ym, u.deg()};
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == exps[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- table

namespace {

struct RawEntry {
  int p_power;
  int p;
  std::array<std::string, 5> model;  // empty a_i means "rational, see below"
  std::vector<std::pair<std::string, std::optional<std::array<std::string, 5>>>> tower;
};

using Eq = std::optional<std::array<std::string, 5>>;

const std::vector<RawEntry>& raw_table() {
  static const std::vector<RawEntry> table = {
      {3, 3, {"t", "0", "0", "0", "-t^5"}, {{"I_1, II*_1", Eq{}}, {"I_3, IV*_1", Eq{{"t", "0", "t^2", "0", "0"}}}}},
      {4, 2, {"1", "0", "0", "0", "t"}, {{"I_1, II*_1", Eq{}}, {"I_2, III*_1", Eq{{"1", "0", "0", "0", "t^2"}}}, {"I_4, I*_{1,1}", Eq{{"1", "0", "0", "0", "t^4"}}}}},
      {5, 5, {"0", "0", "0", "3t^4", "t^5"}, {{"2xI_1, II*", Eq{}}, {"2xI_5, II", Eq{{"0", "0", "0", "3t^4", "t"}}}}},
      {7, 7, {"0", "0", "0", "t^3", "5t^6"}, {{"3xI_1, III*", Eq{}}, {"3xI_7, III", Eq{{"0", "0", "0", "t", "5t^12"}}}}},
      {8, 2, {"1", "0", "0", "0", "t(t+1)"},
       {{"2xI_1, III*_1", Eq{}},
        {"2xI_2, I*_{1,1}", Eq{{"1", "0", "0", "0", "t^2(1+t^2)"}}},
        {"2xI_4, III_1", Eq{{"1", "0", "0", "0", "t^4(1+t^4)"}}},
        {"2xI_8, I*_{1,1}", Eq{{"1", "0", "0", "0", "t^8(1+t^8)"}}}}},
      // The printed models of the two pullbacks are not legible; the tower
      // is generated by pullback only.
      {9, 3, {"t", "0", "0", "0", "-t^3(t^2-1)"}, {{"3xI_1, IV*_1", Eq{}}, {"3xI_3, II_1", Eq{}}, {"3xI_9, IV*_1", Eq{}}}},
      {11, 11, {"", "", "", "", ""}, {{"5xI_1, II*, III*", Eq{}}, {"5xI_11, II, III", Eq{}}}},
  };
  return table;
}

}  // namespace

std::vector<int> igusa_levels() {
  std::vector<int> out;
  for (const RawEntry& e : raw_table()) out.push_back(e.p_power);
  return out;
}

IgusaEntry igusa_universal(int p_power) {
  for (const RawEntry& e : raw_table()) {
    if (e.p_power != p_power) continue;
    WeierstrassModel model = [&] {
      if (!e.model[0].empty()) return model_from_strings(e.p, e.model);
      // y^2 = x^3 + t/(t-1) x + 5(t-1)/t
      int p = e.p;
      std::array<RatFunc, 5> a = {RatFunc(p), RatFunc(p), RatFunc(p), parse_ratfunc("t/(t-1)", p),
                                  parse_ratfunc("5(t-1)/t", p)};
      return model_from_rational(p, a);
    }();
    model = minimalize_global(model).first.with_label("E_Ig(" + std::to_string(p_power) + ")");
    int level = 0;
    for (int q = 1; q < p_power; q *= e.p) ++level;
    IgusaEntry out{p_power, e.p, level, model, parse_multiset(e.tower[0].first), {}};
    for (std::size_t k = 0; k < e.tower.size(); ++k) {
      out.tower.push_back({static_cast<int>(k), parse_multiset(e.tower[k].first), e.tower[k].second});
    }
    return out;
  }
  throw Error("no Igusa curve tabulated for p^n = " + std::to_string(p_power));
}

}  // namespace ellk3
