#pragma once

// Exact arithmetic over GF(p), GF(p)[t] and GF(p)(t), places of the
// projective line and their residue fields.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ellk3 {

// Base class of everything the library throws on bad mathematical input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that failed to parse; offset is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), reason_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  // The message without the offset, for callers that add context.
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

bool is_prime(int n);

// p must be prime and small enough that products fit in 64 bits.
void require_prime(int p);

int mod_reduce(std::int64_t v, int p);
int mod_inverse(int a, int p);
int mod_pow(int a, std::int64_t e, int p);

class Fp {
 public:
  Fp(int p, std::int64_t v);
  int modulus() const { return p_; }
  int value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const;
  Fp inverse() const;
  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

 private:
  int p_;
  int v_;
};

// Dense univariate polynomial over GF(p), lowest degree first, never with
// trailing zeros. The zero polynomial has no degree (degree() is nullopt).
class Poly {
 public:
  Poly() = default;  // p = 0 placeholder, only for default construction
  explicit Poly(int p);
  Poly(int p, std::vector<int> coeffs);

  static Poly constant(int p, std::int64_t c);
  static Poly monomial(int p, std::int64_t c, int k);
  static Poly t(int p) { return monomial(p, 1, 1); }

  int modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  std::optional<int> degree() const;
  // Degree of a nonzero polynomial; throws on zero.
  int deg() const;
  // True when f = 0 or deg f <= d.
  bool degree_at_most(int d) const { return static_cast<int>(c_.size()) <= d + 1; }
  int coeff(int k) const;
  int leading() const;
  const std::vector<int>& coeffs() const { return c_; }

  Poly monic() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(std::int64_t c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Canonical total order: by degree, then coefficients from the top.
  static bool less(const Poly& a, const Poly& b);

  Poly derivative() const;
  int eval(std::int64_t x) const;
  // f(g(t)).
  Poly compose(const Poly& g) const;
  // f(t^k).
  Poly inflate(int k) const;
  // t^n f(1/t); requires f = 0 or deg f <= n.
  Poly reversed(int n) const;
  // Multiply by t^k.
  Poly shifted(int k) const;
  std::string to_string(char var = 't') const;

 private:
  void trim();
  int p_ = 0;
  std::vector<int> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Exact quotient; throws std::logic_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
Poly pow(const Poly& f, int e);
Poly pow_mod(const Poly& f, std::uint64_t e, const Poly& m);
// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // s*a + t*b = g
};
Xgcd xgcd(const Poly& a, const Poly& b);

// Irreducible factor with multiplicity.
struct Factor {
  Poly pi;
  int mult;
};

struct Factorization {
  int unit;
  std::vector<Factor> factors;  // canonical order (Poly::less)
};

// Complete factorization into monic irreducibles: square-free
// decomposition, distinct-degree splitting, then equal-degree splitting.
Factorization factor(const Poly& f);

// Monic irreducible factors of f without multiplicities.
std::vector<Poly> distinct_irreducible_factors(const Poly& f);

bool is_irreducible(const Poly& f);

// All monic irreducibles of exactly degree d (small d only).
std::vector<Poly> monic_irreducibles(int p, int d);

// Rational function num/den in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(int p);
  RatFunc(const Poly& num);  // NOLINT: polynomials embed implicitly
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc constant(int p, std::int64_t c) { return RatFunc(Poly::constant(p, c)); }

  int modulus() const { return num_.modulus(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // x(g) for a rational function g.
  RatFunc compose(const RatFunc& g) const;
  std::string to_string(char var = 't') const;

 private:
  Poly num_;
  Poly den_;
};

RatFunc pow(const RatFunc& f, int e);

class Place {
 public:
  enum class Kind { Finite, Infinity };

  static Place finite(const Poly& pi);  // pi monic irreducible (checked)
  static Place infinity(int p);

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  const Poly& pi() const { return pi_; }  // t for the infinite place's chart
  int degree() const { return degree_; }
  int modulus() const { return pi_.modulus(); }
  std::string to_string() const;
  bool operator==(const Place& o) const { return kind_ == o.kind_ && pi_ == o.pi_; }
  // Canonical order: finite places by (degree, coefficients), infinity last.
  static bool less(const Place& a, const Place& b);

 private:
  Place(Kind kind, Poly pi, int degree) : kind_(kind), pi_(std::move(pi)), degree_(degree) {}
  Kind kind_;
  Poly pi_;
  int degree_;
};

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

int valuation(const Poly& f, const Poly& pi);
int valuation(const Poly& f, const Place& v);
int valuation(const RatFunc& x, const Place& v);

// GF(p)[t]/(pi) with elements stored as reduced polynomials.
class ResidueField {
 public:
  explicit ResidueField(Poly modulus);
  int characteristic() const { return m_.modulus(); }
  int degree() const { return m_.deg(); }
  std::uint64_t size() const;
  const Poly& modulus() const { return m_; }

  Poly reduce(const Poly& a) const { return a % m_; }
  bool is_zero(const Poly& a) const { return reduce(a).is_zero(); }
  Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly inv(const Poly& a) const;
  Poly power(const Poly& a, std::uint64_t e) const { return pow_mod(a, e, m_); }
  // Unique k-th root where k is a power of the characteristic.
  Poly char_root(const Poly& a, int k) const;

 private:
  Poly m_;
};

// Residue of x at v: for a finite place an element of GF(p)[t]/(pi), for the
// infinite place a constant polynomial.
Poly residue(const RatFunc& x, const Place& v);

enum class PowerClass { Trivial, Nontrivial };

// Class of x in K^x / (K^x)^k for K = GF(p)(t).
PowerClass power_class_index(const RatFunc& x, int k);

// Parse the polynomial grammar: integers, one variable, + - * ^ and
// parentheses; juxtaposition such as 3t or t(t+1) means multiplication.
Poly parse_poly(std::string_view text, int p, char var = 't');

// Either "poly" or "poly / poly".
RatFunc parse_ratfunc(std::string_view text, int p, char var = 't');

}  // namespace ellk3
