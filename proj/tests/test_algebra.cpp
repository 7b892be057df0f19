#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

TEST_CASE("prime field inverses and powers") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int a = 1; a < p; ++a) {
      CHECK(oracle::md(1LL * a * mod_inverse(a, p), p) == 1);
      CHECK(mod_pow(a, p - 1, p) == 1);
    }
  }
  CHECK_THROWS_AS(require_prime(9), Error);
}

TEST_CASE("polynomial ring identities") {
  std::mt19937 rng(11);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 40; ++i) {
      Poly a = oracle::random_poly(rng, p, 6), b = oracle::random_poly(rng, p, 4);
      if (b.is_zero()) continue;
      DivMod qr = divmod(a, b);
      CHECK(qr.quot * b + qr.rem == a);
      CHECK((qr.rem.is_zero() || qr.rem.deg() < b.deg()));
      Xgcd x = xgcd(a, b);
      CHECK(x.s * a + x.t * b == x.g);
      CHECK(divides(x.g, a));
      CHECK(divides(x.g, b));
      CHECK((a * b).compose(Poly::t(p)) == a * b);
    }
  }
}

TEST_CASE("factorization agrees with trial division") {
  std::mt19937 rng(5);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 30; ++i) {
      Poly f = oracle::random_poly(rng, p, 8);
      if (f.is_zero() || f.is_constant()) continue;
      Factorization fz = factor(f);
      Poly prod = Poly::constant(p, fz.unit);
      for (const Factor& fc : fz.factors) {
        CHECK(oracle::irreducible_by_trial_division(fc.pi));
        CHECK(fc.pi.leading() == 1);
        prod = prod * pow(fc.pi, fc.mult);
      }
      CHECK(prod == f);
      CHECK(is_irreducible(f) == oracle::irreducible_by_trial_division(f));
    }
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  // p = 3: degrees 1..4 have 3, 3, 8, 18 monic irreducibles.
  CHECK(monic_irreducibles(3, 1).size() == 3);
  CHECK(monic_irreducibles(3, 2).size() == 3);
  CHECK(monic_irreducibles(3, 3).size() == 8);
  CHECK(monic_irreducibles(3, 4).size() == 18);
  CHECK(monic_irreducibles(2, 4).size() == 3);
  for (const Poly& f : monic_irreducibles(5, 2)) CHECK(oracle::irreducible_by_trial_division(f));
}

TEST_CASE("rational functions stay reduced") {
  int p = 5;
  RatFunc a = parse_ratfunc("(t^2 - 1)/(t - 1)", p);
  CHECK(a == RatFunc(parse_poly("t + 1", p)));
  RatFunc b = parse_ratfunc("1/(t^2+t)", p);
  CHECK((b * RatFunc(parse_poly("t^2+t", p))) == RatFunc::constant(p, 1));
  CHECK(b.inverse().inverse() == b);
  CHECK(b.compose(RatFunc(Poly::t(p))) == b);
  CHECK(parse_ratfunc("t", p).compose(b) == b);
}

TEST_CASE("valuations and power classes") {
  int p = 3;
  Place v = Place::finite(parse_poly("t^2+1", p));
  CHECK(valuation(parse_poly("(t^2+1)^3 * t", p), v) == 3);
  CHECK(valuation(parse_ratfunc("t/(t^2+1)^2", p), v) == -2);
  CHECK(valuation(parse_ratfunc("1/t^4", p), Place::infinity(p)) == 4);
  CHECK(power_class_index(parse_ratfunc("t^2/(t+1)^4", p), 2) == PowerClass::Trivial);
  CHECK(power_class_index(parse_ratfunc("t", p), 2) == PowerClass::Nontrivial);
  CHECK(power_class_index(parse_ratfunc("2", p), 2) == PowerClass::Nontrivial);
}

TEST_CASE("parser reports byte offsets") {
  auto offset = [](const std::string& s) -> long {
    try {
      parse_poly(s, 5);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset("3t^^4") == 3);
  CHECK(offset("t + (1") == 4);
  CHECK(offset("t $ 1") == 2);
  CHECK(offset("") == 0);
  CHECK(parse_poly("3t(t+1)", 5) == parse_poly("3t^2 + 3t", 5));
  CHECK(parse_poly("-t^5", 3) == parse_poly("2t^5", 3));
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    Poly f = oracle::random_poly(rng, 7, 6);
    CHECK(parse_poly(f.to_string(), 7) == f);
  }
}
