#include "ellk3/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ellk3 {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  if (p > (1 << 30)) throw Error("modulus " + std::to_string(p) + " is too large");
}

int mod_reduce(std::int64_t v, int p) {
  std::int64_t r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int mod_pow(int a, std::int64_t e, int p) {
  std::int64_t result = 1 % p;
  std::int64_t base = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

int mod_inverse(int a, int p) {
  a = mod_reduce(a, p);
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
  return mod_pow(a, p - 2, p);
}

Fp::Fp(int p, std::int64_t v) : p_(p), v_(0) {
  require_prime(p);
  v_ = mod_reduce(v, p);
}

Fp Fp::operator+(const Fp& o) const { return Fp(p_, static_cast<std::int64_t>(v_) + o.v_); }
Fp Fp::operator-(const Fp& o) const { return Fp(p_, static_cast<std::int64_t>(v_) - o.v_); }
Fp Fp::operator*(const Fp& o) const { return Fp(p_, static_cast<std::int64_t>(v_) * o.v_); }
Fp Fp::operator-() const { return Fp(p_, -static_cast<std::int64_t>(v_)); }
Fp Fp::inverse() const { return Fp(p_, mod_inverse(v_, p_)); }

// ---------------------------------------------------------------- Poly

Poly::Poly(int p) : p_(p) { require_prime(p); }

Poly::Poly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
  require_prime(p);
  for (int& c : c_) c = mod_reduce(c, p);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(int p, std::int64_t c) { return Poly(p, {mod_reduce(c, p)}); }

Poly Poly::monomial(int p, std::int64_t c, int k) {
  std::vector<int> v(static_cast<std::size_t>(k) + 1, 0);
  v[static_cast<std::size_t>(k)] = mod_reduce(c, p);
  return Poly(p, std::move(v));
}

std::optional<int> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

int Poly::deg() const {
  if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

int Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

int Poly::leading() const { return c_.empty() ? 0 : c_.back(); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(mod_inverse(c_.back(), p_));
}

Poly Poly::operator+(const Poly& o) const {
  const Poly& big = c_.size() >= o.c_.size() ? *this : o;
  const Poly& small = c_.size() >= o.c_.size() ? o : *this;
  Poly r = big;
  r.p_ = p_ ? p_ : o.p_;
  for (std::size_t i = 0; i < small.c_.size(); ++i) {
    int v = r.c_[i] + small.c_[i];
    r.c_[i] = v >= r.p_ ? v - r.p_ : v;
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (int& c : r.c_) c = c ? p_ - c : 0;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  int p = p_ ? p_ : o.p_;
  if (c_.empty() || o.c_.empty()) return Poly(p);
  std::size_t n = c_.size() + o.c_.size() - 1;
  std::vector<std::uint64_t> acc(n, 0);
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(p - 1);
  // Reduce only when the accumulator could overflow.
  const std::uint64_t limit = sq == 0 ? n + 1 : (~std::uint64_t{0} - sq) / sq;
  std::size_t shorter = std::min(c_.size(), o.c_.size());
  if (shorter <= limit) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      std::uint64_t a = static_cast<std::uint64_t>(c_[i]);
      for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += a * static_cast<std::uint64_t>(o.c_[j]);
    }
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::uint64_t a = static_cast<std::uint64_t>(c_[i]);
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        acc[i + j] = (acc[i + j] + a * static_cast<std::uint64_t>(o.c_[j])) % static_cast<std::uint64_t>(p);
      }
    }
  }
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<int>(acc[k] % static_cast<std::uint64_t>(p));
  Poly r(p);
  r.c_ = std::move(out);
  r.trim();
  return r;
}

Poly Poly::scaled(std::int64_t c) const {
  int cc = mod_reduce(c, p_);
  Poly r(p_);
  if (cc == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r.c_[i] = static_cast<int>(static_cast<std::int64_t>(c_[i]) * cc % p_);
  }
  return r;
}

bool Poly::less(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

Poly Poly::derivative() const {
  std::vector<int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(static_cast<int>(static_cast<std::int64_t>(c_[i]) * static_cast<std::int64_t>(i % p_) % p_));
  }
  return Poly(p_, std::move(d));
}

int Poly::eval(std::int64_t x) const {
  std::int64_t xv = mod_reduce(x, p_);
  std::int64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * xv + c_[i]) % p_;
  return static_cast<int>(acc);
}

Poly Poly::compose(const Poly& g) const {
  Poly acc(p_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(p_, c_[i]);
  return acc;
}

Poly Poly::inflate(int k) const {
  if (c_.empty()) return *this;
  std::vector<int> v((c_.size() - 1) * static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
  return Poly(p_, std::move(v));
}

Poly Poly::reversed(int n) const {
  if (!degree_at_most(n)) throw std::logic_error("reversal below the degree");
  std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(n) - i] = c_[i];
  return Poly(p_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (c_.empty()) return *this;
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(p_, std::move(v));
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    int c = c_[i];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- division

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  int p = b.modulus();
  int db = b.deg();
  if (a.is_zero() || a.deg() < db) return {Poly(p), a};
  std::vector<std::int64_t> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<int> q(static_cast<std::size_t>(a.deg() - db) + 1, 0);
  std::int64_t inv = mod_inverse(b.leading(), p);
  const auto& bc = b.coeffs();
  for (int k = a.deg() - db; k >= 0; --k) {
    std::int64_t lead = r[static_cast<std::size_t>(k + db)] % p;
    if (lead == 0) continue;
    std::int64_t f = lead * inv % p;
    q[static_cast<std::size_t>(k)] = static_cast<int>(f);
    for (int i = 0; i <= db; ++i) {
      std::size_t idx = static_cast<std::size_t>(k + i);
      r[idx] = (r[idx] - f * bc[static_cast<std::size_t>(i)]) % p;
    }
  }
  std::vector<int> rem(static_cast<std::size_t>(db));
  for (int i = 0; i < db; ++i) rem[static_cast<std::size_t>(i)] = mod_reduce(r[static_cast<std::size_t>(i)], p);
  return {Poly(p, std::move(q)), Poly(p, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

Poly exact_div(const Poly& a, const Poly& b) {
  DivMod d = divmod(a, b);
  if (!d.rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return d.quot;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly pow(const Poly& f, int e) {
  if (e < 0) throw std::domain_error("negative polynomial power");
  Poly result = Poly::constant(f.modulus(), 1);
  Poly base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly pow_mod(const Poly& f, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(m.modulus(), 1) % m;
  Poly base = f % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  int p = a.modulus() ? a.modulus() : b.modulus();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(p, 1), s1(p);
  Poly t0(p), t1 = Poly::constant(p, 1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    r0 = std::exchange(r1, qr.rem);
    s0 = std::exchange(s1, s0 - qr.quot * s1);
    t0 = std::exchange(t1, t0 - qr.quot * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  int inv = mod_inverse(r0.leading(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace ellk3
