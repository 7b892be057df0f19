#include "ellk3/algebra.hpp"

#include <numeric>

namespace ellk3 {

RatFunc::RatFunc(int p) : num_(p), den_(Poly::constant(p, 1)) {}

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.modulus(), 1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  int p = den.modulus();
  if (num.is_zero()) {
    num_ = Poly(p);
    den_ = Poly::constant(p, 1);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = g.is_one() ? num : exact_div(num, g);
  Poly d = g.is_one() ? den : exact_div(den, g);
  int inv = mod_inverse(d.leading(), p);
  num_ = n.scaled(inv);
  den_ = d.scaled(inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_polynomial() && o.is_polynomial()) return RatFunc(num_ * o.num_);
  // Cross-cancel first to keep intermediate degrees small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.is_zero() || g1.is_one() ? num_ : exact_div(num_, g1);
  Poly d2 = g1.is_zero() || g1.is_one() ? o.den_ : exact_div(o.den_, g1);
  Poly n2 = g2.is_zero() || g2.is_one() ? o.num_ : exact_div(o.num_, g2);
  Poly d1 = g2.is_zero() || g2.is_one() ? den_ : exact_div(den_, g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  int p = modulus();
  auto eval = [&](const Poly& f) {
    RatFunc acc(p);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * g + RatFunc(Poly::constant(p, f.coeffs()[i]));
    return acc;
  };
  return eval(num_) / eval(den_);
}

std::string RatFunc::to_string(char var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc pow(const RatFunc& f, int e) {
  if (e < 0) return pow(f.inverse(), -e);
  return RatFunc(pow(f.num(), e), pow(f.den(), e));
}

// ---------------------------------------------------------------- places

Place Place::finite(const Poly& pi) {
  if (pi.is_zero() || pi.leading() != 1 || !is_irreducible(pi)) {
    throw Error("place requires a monic irreducible, got " + pi.to_string());
  }
  return Place(Kind::Finite, pi, pi.deg());
}

Place Place::infinity(int p) { return Place(Kind::Infinity, Poly::t(p), 1); }

std::string Place::to_string() const {
  if (is_infinity()) return "inf";
  return pi_.to_string();
}

bool Place::less(const Place& a, const Place& b) {
  if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
  if (a.is_infinity()) return false;
  return Poly::less(a.pi_, b.pi_);
}

int valuation(const Poly& f, const Poly& pi) {
  if (f.is_zero()) return kInfiniteValuation;
  int v = 0;
  Poly g = f;
  for (;;) {
    DivMod d = divmod(g, pi);
    if (!d.rem.is_zero()) return v;
    g = std::move(d.quot);
    ++v;
  }
}

int valuation(const Poly& f, const Place& v) {
  if (f.is_zero()) return kInfiniteValuation;
  if (v.is_infinity()) return -f.deg();
  return valuation(f, v.pi());
}

int valuation(const RatFunc& x, const Place& v) {
  if (x.is_zero()) return kInfiniteValuation;
  return valuation(x.num(), v) - valuation(x.den(), v);
}

// ---------------------------------------------------------------- residues

ResidueField::ResidueField(Poly modulus) : m_(std::move(modulus)) {
  if (m_.is_zero() || m_.is_constant()) throw Error("residue field modulus must have positive degree");
}

std::uint64_t ResidueField::size() const {
  std::uint64_t q = 1;
  for (int i = 0; i < degree(); ++i) q *= static_cast<std::uint64_t>(characteristic());
  return q;
}

Poly ResidueField::inv(const Poly& a) const {
  Xgcd g = xgcd(reduce(a), m_);
  if (g.g.is_zero() || !g.g.is_one()) throw std::domain_error("residue not invertible");
  return reduce(g.s);
}

Poly ResidueField::char_root(const Poly& a, int k) const {
  int p = characteristic();
  int e = 0;
  for (int kk = k; kk > 1; kk /= p) {
    if (kk % p) throw std::logic_error("root order is not a power of the characteristic");
    ++e;
  }
  int d = degree();
  int steps = ((d - e % d) % d);
  Poly x = reduce(a);
  for (int i = 0; i < steps; ++i) x = power(x, static_cast<std::uint64_t>(p));
  return x;
}

Poly residue(const RatFunc& x, const Place& v) {
  int p = x.modulus();
  if (valuation(x, v) < 0) throw Error("pole at place " + v.to_string());
  if (x.is_zero()) return Poly(p);
  if (v.is_infinity()) {
    if (x.num().deg() < x.den().deg()) return Poly(p);
    return Poly::constant(p, static_cast<std::int64_t>(x.num().leading()) * mod_inverse(x.den().leading(), p));
  }
  ResidueField k(v.pi());
  return k.mul(x.num(), k.inv(x.den()));
}

PowerClass power_class_index(const RatFunc& x, int k) {
  if (x.is_zero()) throw Error("power class of zero");
  if (k <= 0) throw Error("power class exponent must be positive");
  int p = x.modulus();
  for (const Poly* part : {&x.num(), &x.den()}) {
    if (part->is_constant()) continue;
    for (const Factor& f : factor(*part).factors) {
      if (f.mult % k != 0) return PowerClass::Nontrivial;
    }
  }
  std::int64_t c = static_cast<std::int64_t>(x.num().leading()) * mod_inverse(x.den().leading(), p) % p;
  // c is a k-th power in GF(p)^x iff c^((p-1)/gcd(k,p-1)) = 1.
  int g = std::gcd(k, p - 1);
  return mod_pow(static_cast<int>(c), (p - 1) / g, p) == 1 ? PowerClass::Trivial : PowerClass::Nontrivial;
}

}  // namespace ellk3
