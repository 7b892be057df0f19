#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

namespace {

std::string fibers_of(const WeierstrassModel& m) {
  SurfaceReport r = analyze(m);
  return render_multiset(fiber_multiset(r.fibers), m.p());
}

std::vector<WeierstrassModel> samples(int p) {
  std::vector<WeierstrassModel> out;
  for (int q : igusa_levels()) {
    IgusaEntry e = igusa_universal(q);
    if (e.p == p) out.push_back(e.model);
  }
  if (p == 2) {
    out.push_back(model_from_strings(2, {"t^2", "0", "0", "1", "t^4"}));
    out.push_back(model_from_strings(2, {"t^2", "1+t", "t^2", "0", "t"}));
  }
  if (p == 3) out.push_back(generate({FamilyKind::IgusaTower, {{"p_power", "3"}, {"k", "1"}, {"phi", "s^6/(s^2+1)"}}}).model);
  if (p == 5) out.push_back(generate({FamilyKind::P5AlphaBeta, {{"alpha", "0"}, {"beta", "1"}}}).model);
  if (p == 7) out.push_back(model_from_strings(7, {"0", "0", "0", "t", "5t^12"}));
  return out;
}

}  // namespace

TEST_CASE("Kodaira symbols round-trip through text") {
  for (const char* s : {"I_0", "I_7", "II", "III", "IV", "I*_0", "I*_{1,1}", "IV*_1", "III*", "II*_1", "I*_{11,6}"}) {
    KodairaType t = KodairaType::parse(s);
    CHECK(KodairaType::parse(t.render(2)) == t);
  }
  CHECK(KodairaType::parse("I*_{3,3}").n == 3);
  CHECK(KodairaType::parse("I*_{3,3}").swan == 3);
  CHECK(KodairaType::parse("IV*").components() == 7);
  CHECK(KodairaType::parse("I*_4").component_group() == "(Z/2)^2");
  CHECK(KodairaType::parse("I*_3").component_group() == "Z/4");
}

TEST_CASE("Igusa universal curves have the tabulated fibers") {
  for (int q : igusa_levels()) {
    IgusaEntry e = igusa_universal(q);
    CHECK_MESSAGE(fibers_of(e.model) == render_multiset(e.fiber_table, e.p), "Ig(" << q << ")");
  }
}

TEST_CASE("fiber types are invariant under admissible coordinate changes") {
  std::mt19937 rng(101);
  for (int p : {2, 3, 5, 7}) {
    auto models = samples(p);
    int done = 0;
    for (int i = 0; i < 100; ++i) {
      const WeierstrassModel& m = models[static_cast<std::size_t>(i) % models.size()];
      SurfaceReport ref = analyze(m);
      WeierstrassModel moved = change_coordinates(m, oracle::random_change(rng, p));
      SurfaceReport r = analyze(moved);
      CHECK(render_multiset(fiber_multiset(r.fibers), p) == render_multiset(fiber_multiset(ref.fibers), p));
      CHECK(r.c2 == ref.c2);
      CHECK(r.model.chi() == ref.model.chi());
      CHECK(j_invariant(r.model) == j_invariant(ref.model));
      ++done;
    }
    CHECK(done == 100);
  }
}

TEST_CASE("Euler numbers and Ogg's formula") {
  for (int p : {2, 3, 5, 7}) {
    for (const WeierstrassModel& m : samples(p)) {
      SurfaceReport r = analyze(m);
      CHECK(euler_violations(r).empty());
      int sum = 0;
      for (const FiberAnalysis& f : r.fibers) sum += f.v_delta_min * f.place.degree();
      CHECK(sum == 12 * r.model.chi());
    }
  }
}

TEST_CASE("local analysis at single places") {
  // y^2 = x^3 + t x + 5 t^12 over GF(7): III at t = 0.
  WeierstrassModel m = model_from_strings(7, {"0", "0", "0", "t", "5t^12"});
  FiberAnalysis f = tate_local(m, Place::finite(Poly::t(7)));
  CHECK(f.type.render(7) == "III");
  CHECK(f.m == 2);
  CHECK(f.v_delta_min == 3);
  CHECK(f.component_group == "Z/2");
  // Wild conductor in characteristic 2 at the I*_{1,1} fiber of the 8-torsion surface.
  WeierstrassModel x = model_from_strings(2, {"t^2", "0", "0", "1", "t^4"});
  SurfaceReport r = analyze(x);
  bool seen = false;
  for (const FiberAnalysis& g : r.fibers) {
    if (g.type.additive()) {
      CHECK(g.type.render(2) == "I*_{1,1}");
      CHECK(g.v_delta_min == 8);
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("minimal models and surface classes") {
  WeierstrassModel e = igusa_universal(4).model;
  WeierstrassModel big = change_coordinates(e, CoordinateChange::scaling(RatFunc(Poly::constant(2, 1), Poly::t(2))));
  CHECK_FALSE(is_globally_minimal(big));
  auto [m, c] = minimalize_global(big);
  CHECK(is_globally_minimal(m));
  CHECK(m.chi() == e.chi());
  CHECK(classify_surface(m).kind == SurfaceClass::Kind::Rational);
  CHECK(analyze(model_from_strings(7, {"0", "0", "0", "t", "5t^12"})).surface_class.kind == SurfaceClass::Kind::K3);
}
