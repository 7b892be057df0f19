#include "ellk3/brauer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "ellk3/frobext.hpp"
#include "ellk3/sections.hpp"

namespace ellk3 {

namespace {

using Reducer = std::function<Poly(const Poly&)>;

// Monomials of F with exponents (x, y, z) and coefficient index into
// {1, a1, a3, -1, -a2, -a4, -a6}.
struct Monomial {
  int x, y, z;
};
constexpr std::array<Monomial, 7> kMonomials = {{
    {0, 2, 1}, {1, 1, 1}, {0, 1, 2}, {3, 0, 0}, {2, 0, 1}, {1, 0, 2}, {0, 0, 3},
}};

// Coefficient of (xyz)^(p-1) in F^(p-1), with every product passed through
// `red` so the same code works over GF(p)[t] and over residue fields.
Poly hasse_generic(int p, const std::array<Poly, 5>& a, const Reducer& red) {
  const int e = p - 1;
  std::array<Poly, 7> c = {Poly::constant(p, 1), a[0], a[2], Poly::constant(p, -1), -a[1], -a[3], -a[4]};
  // powers[i][k] = c_i^k
  std::array<std::vector<Poly>, 7> powers;
  for (std::size_t i = 0; i < 7; ++i) {
    powers[i].push_back(Poly::constant(p, 1));
    for (int k = 1; k <= e; ++k) powers[i].push_back(red(powers[i].back() * c[i]));
  }
  std::vector<int> fact(static_cast<std::size_t>(e + 1), 1);
  for (int k = 1; k <= e; ++k) fact[static_cast<std::size_t>(k)] = mod_reduce(std::int64_t{fact[k - 1]} * k, p);

  Poly total(p);
  std::array<int, 7> ex{};
  // Depth-first over exponent vectors with running x, y, z totals.
  std::function<void(std::size_t, int, int, int, int)> rec = [&](std::size_t i, int left, int x, int y, int z) {
    if (x > e || y > e || z > e) return;
    if (i == 6) {
      ex[6] = left;
      if (x != e || y != e || z + 3 * left != e) return;
      int denom = 1;
      for (int k : ex) denom = mod_reduce(std::int64_t{denom} * fact[static_cast<std::size_t>(k)], p);
      int coef = mod_reduce(std::int64_t{fact[static_cast<std::size_t>(e)]} * mod_inverse(denom, p), p);
      Poly term = Poly::constant(p, coef);
      for (std::size_t k = 0; k < 7; ++k) {
        if (ex[k]) term = red(term * powers[k][static_cast<std::size_t>(ex[k])]);
      }
      total += term;
      return;
    }
    const Monomial& mo = kMonomials[i];
    for (int k = 0; k <= left; ++k) {
      ex[i] = k;
      rec(i + 1, left - k, x + k * mo.x, y + k * mo.y, z + k * mo.z);
    }
  };
  rec(0, e, 0, 0, 0);
  return red(total);
}

Poly identity_reduce(const Poly& f) { return f; }

}  // namespace

Poly hasse_polynomial(const WeierstrassModel& m) {
  return hasse_generic(m.p(), m.coeffs(), identity_reduce);
}

HasseClass hasse_invariant(const WeierstrassModel& m) {
  HasseClass h;
  Poly H = hasse_polynomial(m);
  h.raw = RatFunc(H);
  h.zero = H.is_zero();
  if (!h.zero) h.class_triviality = power_class_index(h.raw, m.p() - 1);
  return h;
}

bool is_supersingular_j(const ResidueField& k, const Poly& jin) {
  int p = k.characteristic();
  Poly j = k.reduce(jin);
  Poly zero(p);
  std::array<Poly, 5> a = {zero, zero, zero, zero, zero};
  if (p == 2) {
    if (j.is_zero()) {
      a[2] = Poly::constant(p, 1);
    } else {
      a[0] = Poly::constant(p, 1);
      a[4] = k.inv(j);
    }
  } else if (p == 3) {
    if (j.is_zero()) {
      a[3] = Poly::constant(p, 1);
    } else {
      a[1] = Poly::constant(p, 1);
      a[4] = k.reduce(-k.inv(j));
    }
  } else {
    Poly c1728 = Poly::constant(p, 1728);
    if (j.is_zero()) {
      a[4] = Poly::constant(p, 1);
    } else if (k.is_zero(j - c1728)) {
      a[3] = Poly::constant(p, 1);
    } else {
      Poly d = k.mul(j, c1728 - j);
      a[3] = k.reduce(d.scaled(3));
      a[4] = k.reduce(k.mul(d, c1728 - j).scaled(2));
    }
  }
  Poly H = hasse_generic(p, a, [&k](const Poly& f) { return k.reduce(f); });
  return H.is_zero();
}

SupersingularSet supersingular_j(int p) {
  require_prime(p);
  Poly q = monic_irreducibles(p, 2).front();
  ResidueField k(q);
  SupersingularSet out{q, {}};
  for (int c1 = 0; c1 < p; ++c1) {
    for (int c0 = 0; c0 < p; ++c0) {
      Poly j(p, {c0, c1});
      if (is_supersingular_j(k, j)) out.values.push_back(j);
    }
  }
  std::sort(out.values.begin(), out.values.end(), Poly::less);
  return out;
}

Poly supersingular_polynomial(int p) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(p); it != cache.end()) return it->second;

  SupersingularSet ss = supersingular_j(p);
  ResidueField k(ss.modulus);
  // Polynomial in X with coefficients in GF(p^2), lowest degree first.
  std::vector<Poly> acc = {Poly::constant(p, 1)};
  for (const Poly& j : ss.values) {
    std::vector<Poly> next(acc.size() + 1, Poly(p));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = k.add(next[i + 1], acc[i]);
      next[i] = k.add(next[i], -k.mul(acc[i], j));
    }
    acc = std::move(next);
  }
  std::vector<int> coeffs;
  for (const Poly& c : acc) {
    if (!c.is_constant()) throw std::logic_error("supersingular polynomial not defined over the prime field");
    coeffs.push_back(c.coeff(0));
  }
  Poly s(p, coeffs);
  cache.emplace(p, s);
  return s;
}

bool p_torsion_exists(const WeierstrassModel& m, int n, TorsionMode mode) {
  int p = m.p();
  if (n < 1) throw Error("torsion exponent must be positive");
  if (mode == TorsionMode::Direct) {
    int order = 1;
    for (int i = 0; i < n; ++i) order *= p;
    return !torsion_search(m, order, 2 * m.chi()).empty();
  }
  if (n != 1) throw Error("the Hasse criterion only detects p-torsion (n = 1)");
  std::optional<DescentResult> y = frobenius_descent(m);
  if (!y) return false;
  HasseClass h = hasse_invariant(y->model);
  return !h.zero && h.class_triviality == PowerClass::Trivial;
}

HeightFlag height_flag(const WeierstrassModel& m) {
  if (classify_surface(m).kind != SurfaceClass::Kind::K3) throw Error("height flag requires a K3 surface");
  int p = m.p();
  if (p >= 7) return HeightFlag::Undetermined;
  // a11 for p = 2, a22 after a1 = a3 = 0 for p = 3, 2 a44 after
  // a1 = a2 = a3 = 0 for p = 5.
  bool one = false;
  if (p == 2) {
    one = m.a_coeff(1, 1) != 0;
  } else if (p == 3) {
    one = normalize(m, NormalForm::A1A3Zero).first.a_coeff(2, 2) != 0;
  } else {
    one = mod_reduce(2 * std::int64_t{normalize(m, NormalForm::A1A2A3Zero).first.a_coeff(4, 4)}, p) != 0;
  }
  return one ? HeightFlag::One : HeightFlag::AtLeastTwo;
}

Decision supersingularity_decision(const SurfaceReport& report, bool has_pn_torsion) {
  int p = report.model.p();
  // Expand additive fibers over the algebraic closure.
  std::vector<const FiberAnalysis*> additive;
  int good_ss = 0;
  for (const FiberAnalysis& f : report.fibers) {
    for (int i = 0; i < f.place.degree(); ++i) {
      if (f.type.additive()) additive.push_back(&f);
      if (f.reduction_class == ReductionClass::GoodSupersingular) ++good_ss;
    }
  }
  if (additive.size() > 2) {
    throw Error("more than two additive fibers contradicts the bound for surfaces with p-torsion");
  }
  if (p >= 3 || has_pn_torsion) {
    if (additive.size() == 1) return Decision::SupersingularUnirational;
    if (additive.size() == 2) return Decision::Ordinary;
    return Decision::Undecided;
  }

  auto is_type = [](const FiberAnalysis* f, int n, int swan) {
    return f->type.symbol == KodairaType::Symbol::Ins && f->type.n == n && f->type.swan == swan;
  };
  auto pot_ss = [](const FiberAnalysis* f) {
    return f->reduction_class == ReductionClass::AdditivePotSupersingular;
  };
  auto pot_ord = [](const FiberAnalysis* f) { return f->reduction_class == ReductionClass::AdditivePotOrdinary; };

  if (j_invariant(report.model).is_constant()) {
    if (additive.size() == 1 && is_type(additive[0], 12, 6)) return Decision::MixedChar2;
    if (additive.size() == 2 && is_type(additive[0], 4, 2) && is_type(additive[1], 4, 2)) return Decision::Ordinary;
    return Decision::Undecided;
  }
  if (additive.size() == 1 && pot_ss(additive[0])) return Decision::MixedChar2;
  if (additive.empty() && good_ss == 1) return Decision::SupersingularUnirational;
  if (additive.size() == 2) {
    const FiberAnalysis* f = additive[0];
    const FiberAnalysis* g = additive[1];
    if (pot_ss(f) && pot_ss(g)) return Decision::Ordinary;
    if ((pot_ss(f) && pot_ord(g) && is_type(g, 4, 2)) || (pot_ss(g) && pot_ord(f) && is_type(f, 4, 2))) {
      return Decision::Ordinary;
    }
  }
  return Decision::Undecided;
}

}  // namespace ellk3
