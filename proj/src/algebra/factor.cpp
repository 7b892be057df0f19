#include "ellk3/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ellk3 {
namespace {

// g(t) with g^p = f, for f with f' = 0 (so f lies in GF(p)[t^p]).
Poly pth_root(const Poly& f) {
  int p = f.modulus();
  std::vector<int> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p)) v.push_back(f.coeffs()[i]);
  return Poly(p, std::move(v));
}

// Square-free decomposition of a monic f: pairs (g, e) with f = prod g^e.
void squarefree(const Poly& f, int scale, std::vector<std::pair<Poly, int>>& out) {
  int p = f.modulus();
  if (f.is_constant()) return;
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (!fac.is_one()) out.emplace_back(fac, i * scale);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (!c.is_one()) squarefree(pth_root(c), scale * p, out);
}

// Distinct-degree split of a square-free monic f.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  int p = f.modulus();
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::t(p);
  Poly h = x % f;
  int i = 1;
  while (!f.is_one() && f.deg() >= 2 * i) {
    h = pow_mod(h, static_cast<std::uint64_t>(p), f);
    Poly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = exact_div(f, g);
      h = h % f;
    }
    ++i;
  }
  if (!f.is_one()) out.emplace_back(f, f.deg());
  return out;
}

// Equal-degree split (Cantor-Zassenhaus); every factor of f has degree d.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  int p = f.modulus();
  std::uniform_int_distribution<int> coin(0, p - 1);
  for (;;) {
    std::vector<int> a(static_cast<std::size_t>(f.deg()));
    for (int& c : a) c = coin(rng);
    Poly ap(p, a);
    if (ap.is_constant()) continue;
    Poly b(p);
    if (p == 2) {
      // Absolute trace to GF(2): a + a^2 + ... + a^(2^(d-1)).
      Poly s = ap % f;
      b = s;
      for (int k = 1; k < d; ++k) {
        s = (s * s) % f;
        b = b + s;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2).
      Poly s = ap % f;
      Poly norm = s;
      for (int k = 1; k < d; ++k) {
        s = pow_mod(s, static_cast<std::uint64_t>(p), f);
        norm = (norm * s) % f;
      }
      b = pow_mod(norm, static_cast<std::uint64_t>((p - 1) / 2), f) - Poly::constant(p, 1);
    }
    Poly g = gcd(f, b);
    if (g.is_zero() || g.is_one() || g.deg() == f.deg()) continue;
    equal_degree(g, d, rng, out);
    equal_degree(exact_div(f, g), d, rng, out);
    return;
  }
}

}  // namespace

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw Error("cannot factor zero");
  int p = f.modulus();
  Factorization result{f.leading(), {}};
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::map<std::vector<int>, std::pair<Poly, int>> merged;  // key keeps output canonical
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(p));
  for (const auto& [g, e] : sqf) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<Poly> pieces;
      equal_degree(h, d, rng, pieces);
      for (const Poly& q : pieces) {
        auto it = merged.find(q.coeffs());
        if (it == merged.end()) {
          merged.emplace(q.coeffs(), std::make_pair(q, e));
        } else {
          it->second.second += e;
        }
      }
    }
  }
  for (auto& [key, val] : merged) result.factors.push_back({val.first, val.second});
  std::sort(result.factors.begin(), result.factors.end(),
            [](const Factor& a, const Factor& b) { return Poly::less(a.pi, b.pi); });
  return result;
}

std::vector<Poly> distinct_irreducible_factors(const Poly& f) {
  std::vector<Poly> out;
  for (const Factor& fa : factor(f).factors) out.push_back(fa.pi);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  Factorization fa = factor(f);
  return fa.factors.size() == 1 && fa.factors[0].mult == 1;
}

std::vector<Poly> monic_irreducibles(int p, int d) {
  require_prime(p);
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t x = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(p));
      x /= static_cast<std::uint64_t>(p);
    }
    c[static_cast<std::size_t>(d)] = 1;
    Poly f(p, std::move(c));
    if (is_irreducible(f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), Poly::less);
  return out;
}

}  // namespace ellk3
