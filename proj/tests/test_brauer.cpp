#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

TEST_CASE("supersingular j-values agree with point counting") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    std::set<int> want = oracle::supersingular_j_by_counting(p);
    SupersingularSet got = supersingular_j(p);
    std::set<int> have;
    for (const Poly& j : got.values) {
      REQUIRE(j.is_constant());
      have.insert(j.is_zero() ? 0 : j.coeff(0));
    }
    CHECK_MESSAGE(have == want, "p = " << p);
    CHECK(supersingular_polynomial(p).deg() == static_cast<int>(want.size()));
    for (int j = 0; j < p; ++j) {
      CHECK(is_supersingular_j(ResidueField(Poly(p, {0, 1})), Poly::constant(p, j)) == (want.count(j) == 1));
    }
  }
}

TEST_CASE("Hasse polynomial of the Legendre family") {
  // y^2 = x(x-1)(x-t): Hasse invariant is sum binom(m,i)^2 t^i, m = (p-1)/2.
  for (int p : {3, 5, 7, 11}) {
    WeierstrassModel m = model_from_strings(p, {"0", "-(1+t)", "0", "t", "0"});
    int half = (p - 1) / 2;
    std::vector<int> c;
    for (int i = 0; i <= half; ++i) {
      long long b = 1;
      for (int k = 0; k < i; ++k) b = b * (half - k) / (k + 1);
      c.push_back(oracle::md(b * b, p));
    }
    Poly want(p, c);
    Poly got = hasse_polynomial(m);
    CHECK((got == want || got == -want));
  }
}

TEST_CASE("Hasse and direct p-torsion tests agree on table surfaces") {
  std::vector<std::pair<WeierstrassModel, bool>> cases = {
      {model_from_strings(7, {"0", "0", "0", "t", "5t^12"}), true},
      {model_from_strings(7, {"0", "0", "0", "t", "t^12"}), false},
      {generate({FamilyKind::P5AlphaBeta, {{"alpha", "0"}, {"beta", "2"}}}).model, true},
      {generate({FamilyKind::P5AlphaBeta, {{"alpha", "2"}, {"beta", "3"}}}).model, true},
      {generate({FamilyKind::IgusaTower, {{"p_power", "3"}, {"k", "1"}, {"phi", "s^4/(s+1)"}}}).model, true},
      {igusa_universal(5).model, false},
  };
  for (const auto& [m, expected] : cases) {
    CHECK(p_torsion_exists(m, 1, TorsionMode::Hasse) == expected);
    CHECK(p_torsion_exists(m, 1, TorsionMode::Direct) == expected);
  }
}

TEST_CASE("height flags and decisions") {
  auto rep = [](const WeierstrassModel& m, int torsion) {
    AnalyzeOptions o;
    o.torsion = torsion;
    return analyze(m, o);
  };
  SurfaceReport ord = rep(generate({FamilyKind::P5AlphaBeta, {{"alpha", "2"}, {"beta", "3"}}}).model, 5);
  CHECK(ord.height_flag == HeightFlag::One);
  CHECK(ord.decision == Decision::Ordinary);
  CHECK(ord.supersingular == false);
  SurfaceReport ss = rep(generate({FamilyKind::P5AlphaBeta, {{"alpha", "0"}, {"beta", "2"}}}).model, 5);
  CHECK(ss.height_flag == HeightFlag::Infinite);
  CHECK(ss.decision == Decision::SupersingularUnirational);
  CHECK(ss.unirational_implied);
  SurfaceReport iso = rep(quadratic_twist_char2(model_from_strings(2, {"1", "0", "0", "0", "1"}),
                              parse_ratfunc("1/(t^2+t)", 2)), 2);
  CHECK(iso.height_flag == HeightFlag::One);
  CHECK(height_flag(model_from_strings(2, {"t^2", "1+t", "t^2", "0", "t"})) == HeightFlag::AtLeastTwo);
  // A rational surface is never decided.
  SurfaceReport rat = rep(igusa_universal(7).model, 7);
  CHECK(rat.decision == Decision::Undecided);
}
