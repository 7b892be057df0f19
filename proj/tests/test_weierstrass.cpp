#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

TEST_CASE("invariant identities hold in every characteristic") {
  std::mt19937 rng(17);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 20; ++i) {
      std::array<Poly, 5> a;
      for (auto& c : a) c = oracle::random_poly(rng, p, 3);
      InvariantSet s = invariants(a);
      CHECK(s.b8.scaled(4) == s.b2 * s.b6 - s.b4 * s.b4);
      CHECK(s.delta.scaled(1728) == s.c4 * s.c4 * s.c4 - s.c6 * s.c6);
    }
  }
}

TEST_CASE("coordinate changes preserve j and round-trip") {
  std::mt19937 rng(23);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 15; ++i) {
      auto cw = oracle::random_curve_with_points(rng, p);
      CoordinateChange c = oracle::random_change(rng, p);
      WeierstrassModel m2 = change_coordinates(cw.model, c);
      CHECK(j_invariant(m2) == j_invariant(cw.model));
      WeierstrassModel back = change_coordinates(m2, c.inverse());
      CHECK(back.coeffs() == cw.model.coeffs());
      CHECK(on_curve(m2, transform_point(cw.p1, c)));
    }
  }
}

TEST_CASE("model text form and charts") {
  WeierstrassModel m = model_from_strings(7, {"0", "0", "0", "t", "5t^12"});
  CHECK(m.chi() == 2);
  CHECK(m.a(6) == parse_poly("5t^12", 7));
  CHECK(infinity_chart(infinity_chart(m)).coeffs() == m.coeffs());
  CHECK(m.equation() == "y^2 = x^3 + t*x + 5*t^12");
  CHECK_THROWS_AS(model_from_strings(7, {"0", "0", "0", "0", "0"}), Error);
}

TEST_CASE("normal forms keep the curve") {
  std::mt19937 rng(29);
  for (int p : {5, 7}) {
    auto cw = oracle::random_curve_with_points(rng, p);
    auto [n, c] = normalize(cw.model, NormalForm::A1A2A3Zero);
    CHECK(n.a(1).is_zero());
    CHECK(n.a(2).is_zero());
    CHECK(n.a(3).is_zero());
    CHECK(j_invariant(n) == j_invariant(cw.model));
    CHECK(on_curve(n, transform_point(cw.p1, c)));
  }
  auto [n3, c3] = normalize(model_from_strings(3, {"t", "0", "1", "0", "t"}), NormalForm::A1A3Zero);
  CHECK(n3.a(1).is_zero());
  CHECK(n3.a(3).is_zero());
}

TEST_CASE("rational coefficients are scaled into the polynomial ring") {
  int p = 2;
  std::array<RatFunc, 5> a = {RatFunc(parse_poly("1", p)), parse_ratfunc("1/(t+1)", p), RatFunc(Poly(p)),
                              RatFunc(Poly(p)), RatFunc(parse_poly("t^2", p))};
  WeierstrassModel m = model_from_rational(p, a);
  for (const Poly& c : m.coeffs()) CHECK(c.modulus() == 2);
  // Same j as the rational model.
  RatFunc j = parse_ratfunc("1", p) / RatFunc(parse_poly("t^2", p));
  CHECK(j_invariant(m) == j);
}
