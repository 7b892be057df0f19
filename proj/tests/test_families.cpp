#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

namespace {
FamilyMember gen(FamilyKind k, std::map<std::string, std::string> params) { return generate({k, std::move(params)}); }
}  // namespace

TEST_CASE("parameter constraints are enforced") {
  CHECK_THROWS_AS(gen(FamilyKind::P5AlphaBeta, {{"alpha", "2"}, {"beta", "2"}}), Error);
  CHECK_THROWS_AS(gen(FamilyKind::P5AlphaBeta, {{"alpha", "2"}}), Error);
  CHECK_THROWS_AS(gen(FamilyKind::P3Deg6, {{"r4", "0"}, {"r3", "0"}, {"r2", "0"}, {"r1", "0"}, {"r0", "1"}}), Error);
  CHECK_THROWS_AS(gen(FamilyKind::P3Deg4, {{"r4", "0"}, {"r3", "0"}, {"r2", "0"}}), Error);
  CHECK_THROWS_AS(gen(FamilyKind::IgusaTower, {{"p_power", "6"}}), Error);
  CHECK_THROWS_AS(gen(FamilyKind::IgusaTower, {{"p_power", "3"}, {"k", "9"}}), Error);
  CHECK_THROWS_AS(parse_family_kind("p4_nothing"), Error);
  CHECK(parse_family_kind(to_string(FamilyKind::P3Deg5)) == FamilyKind::P3Deg5);
}

TEST_CASE("random char-3 members carry sections of order 3") {
  std::mt19937 rng(3);
  for (FamilyKind kind : {FamilyKind::P3Deg6, FamilyKind::P3Deg5, FamilyKind::P3Deg4}) {
    int done = 0;
    for (int i = 0; i < 20; ++i) {
      std::uniform_int_distribution<int> any(0, 2), nz(1, 2);
      std::map<std::string, std::string> params = {{"r4", std::to_string(any(rng))},
                                                   {"r3", std::to_string(any(rng))}};
      if (kind == FamilyKind::P3Deg6) {
        params["r2"] = std::to_string(any(rng));
        params["r1"] = std::to_string(nz(rng));
        params["r0"] = std::to_string(nz(rng));
      } else if (kind == FamilyKind::P3Deg5) {
        params["r2"] = std::to_string(any(rng));
        params["r1"] = std::to_string(nz(rng));
      } else {
        params["r2"] = std::to_string(nz(rng));
      }
      FamilyMember x = gen(kind, params);
      CHECK(x.torsion_order == 3);
      REQUIRE_FALSE(x.sections.empty());
      for (const SectionPoint& P : x.sections) {
        CHECK(on_curve(x.model, P));
        CHECK(order_of(x.model, P, 9) == 3);
      }
      SurfaceReport r = analyze(x.model, AnalyzeOptions{false, false, 3});
      CHECK(euler_violations(r).empty());
      CHECK(r.surface_class.kind == SurfaceClass::Kind::K3);
      ++done;
    }
    CHECK(done == 20);
  }
}

TEST_CASE("p = 5 members: X a K3 with 5-torsion") {
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (a == b) continue;
      FamilyMember x = gen(FamilyKind::P5AlphaBeta, {{"alpha", std::to_string(a)}, {"beta", std::to_string(b)}});
      CHECK(x.torsion_order == 5);
      SurfaceReport r = analyze(x.model, AnalyzeOptions{false, false, 5});
      // Y is rational exactly on the supersingular (IV) branch.
      bool has_iv = render_multiset(fiber_multiset(r.fibers), 5).find("IV") != std::string::npos;
      CHECK((analyze(x.base).surface_class.kind == SurfaceClass::Kind::Rational) == has_iv);
      CHECK(r.surface_class.kind == SurfaceClass::Kind::K3);
      CHECK(r.c2 == 24);
    }
  }
}

TEST_CASE("char-2 E8,4 family and Igusa bounds") {
  for (int code = 0; code < 8; ++code) {
    FamilyMember x = gen(FamilyKind::P2E84,
                         {{"r4", std::to_string(code & 1)}, {"r3", std::to_string((code >> 1) & 1)},
                          {"r2", std::to_string((code >> 2) & 1)}});
    CHECK(euler_violations(analyze(x.model)).empty());
  }
  for (int q : igusa_levels()) {
    IgusaEntry e = igusa_universal(q);
    CHECK_NOTHROW(gen(FamilyKind::IgusaTower, {{"p_power", std::to_string(q)}, {"k", std::to_string(e.level)}}));
    CHECK_THROWS_AS(gen(FamilyKind::IgusaTower, {{"p_power", std::to_string(q)}, {"k", "5"}}), Error);
  }
}
