#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

namespace {
std::string fibers_of(const WeierstrassModel& m) {
  return render_multiset(fiber_multiset(analyze(m).fibers), m.p());
}
}  // namespace

TEST_CASE("Frobenius pullback composes j with t^p and multiplies I_n") {
  for (int q : igusa_levels()) {
    IgusaEntry e = igusa_universal(q);
    WeierstrassModel x = frobenius_pullback(e.model);
    RatFunc tp = RatFunc(Poly::monomial(e.p, 1, e.p));
    CHECK(j_invariant(x) == j_invariant(e.model).compose(tp));
    CHECK(fibers_of(x) == render_multiset(e.tower[1].fibers, e.p));
  }
}

TEST_CASE("base change composes j with the classifying map") {
  WeierstrassModel e = igusa_universal(3).model;
  ClassifyingMap phi = ClassifyingMap::parse("s^6/(s^2+1)", 3);
  CHECK(phi.degree() == 6);
  WeierstrassModel y = base_change(e, phi);
  CHECK(j_invariant(y) == j_invariant(e).compose(phi.as_ratfunc()));
  CHECK_THROWS_AS(ClassifyingMap::parse("2", 3), Error);
}

TEST_CASE("Artin-Schreier twists are involutions and keep j") {
  WeierstrassModel base = model_from_strings(2, {"1", "0", "0", "0", "t^2"});
  for (const char* g : {"1/(t+1)", "t^3", "1/(t^2+t)", "t/(t^2+t+1)"}) {
    WeierstrassModel tw = quadratic_twist_char2(base, parse_ratfunc(g, 2));
    CHECK(j_invariant(tw) == j_invariant(base));
    WeierstrassModel back = quadratic_twist_char2(tw, parse_ratfunc(g, 2));
    CHECK(fibers_of(back) == fibers_of(base));
  }
  CHECK_THROWS_AS(quadratic_twist_char2(model_from_strings(3, {"0", "1", "0", "0", "t"}), parse_ratfunc("t", 3)),
                  Error);
}

TEST_CASE("Frobenius descent undoes pullback") {
  for (int q : {3, 4, 5, 7, 8}) {
    WeierstrassModel e = igusa_universal(q).model;
    auto d = frobenius_descent(frobenius_pullback(e));
    REQUIRE(d.has_value());
    CHECK(fibers_of(d->model) == fibers_of(e));
    CHECK(j_invariant(d->model) == j_invariant(e));
  }
  // j = t is not a p-th power, so no descent exists.
  CHECK_FALSE(frobenius_descent(igusa_universal(5).model).has_value());
}

TEST_CASE("Igusa table levels") {
  CHECK(igusa_levels() == std::vector<int>{3, 4, 5, 7, 8, 9, 11});
  CHECK(igusa_universal(8).level == 3);
  CHECK(igusa_universal(8).tower.size() == 4);
  CHECK_THROWS_AS(igusa_universal(6), Error);
}
