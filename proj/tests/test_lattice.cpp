#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

TEST_CASE("root lattice determinants") {
  for (int n = 1; n <= 8; ++n) CHECK(root_lattice(RootKind::A, n).det() == n + 1);
  for (int n = 4; n <= 8; ++n) CHECK(root_lattice(RootKind::D, n).det() == 4);
  CHECK(root_lattice(RootKind::E, 6).det() == 3);
  CHECK(root_lattice(RootKind::E, 7).det() == 2);
  CHECK(root_lattice(RootKind::E, 8).det() == 1);
  CHECK(root_lattice(RootKind::U).det() == -1);
  for (RootKind k : {RootKind::L2, RootKind::L3, RootKind::L4}) CHECK(root_lattice(k).det() == 12);
}

TEST_CASE("duals and scalings") {
  for (int n = 1; n <= 6; ++n) {
    Lattice a = root_lattice(RootKind::A, n);
    CHECK(dual(a).det() == Rational(1, n + 1));
    CHECK(dual(dual(a)).det() == a.det());
    Rational k = 1;
    for (int i = 0; i < n; ++i) k *= 3;
    CHECK(scale(a, 3).det() == a.det() * k);
  }
  CHECK(dual_scale(root_lattice(RootKind::A, 1), 7).det() == Rational(7, 2));
  CHECK(overlattice(root_lattice(RootKind::A, 2), 3).det() == Rational(1, 3));
}

TEST_CASE("lattice names parse to the right determinants") {
  CHECK(parse_lattice("E8(3)").det() == 6561);
  CHECK(parse_lattice("A_1^*(7)").det() == Rational(7, 2));
  CHECK(parse_lattice("<5/6>").det() == Rational(5, 6));
  CHECK(parse_lattice("{0}").rank() == 0);
  CHECK(parse_lattice("A2(3)^2 + L4").rank() == 8);
  CHECK(parse_lattice("A2(3)^2 + L4").det() == 9 * 9 * 9 * 12);
  CHECK(parse_lattice("3.(E7*(3))").det() == parse_lattice("E7*(3)").det() / 9);
  CHECK_THROWS_AS(parse_lattice("Q7"), Error);
  MordellWeil mw = parse_mordell_weil("A1*(7) + Z/7");
  CHECK(mw.torsion_order() == 7);
  CHECK(mw.free.det() == Rational(7, 2));
  CHECK(parse_mordell_weil("Z/4").free.rank() == 0);
}

TEST_CASE("rational Mordell-Weil table is unimodular") {
  const auto& table = rational_mordell_weil_table();
  CHECK(table.size() >= 20);
  for (const RationalMordellWeil& row : table) {
    Lattice t = parse_lattice(row.root_type.empty() ? "{0}" : row.root_type);
    MordellWeil full = parse_mordell_weil(row.full);
    Lattice narrow = parse_lattice(row.narrow);
    CHECK_MESSAGE(abs(shioda_tate(t.det(), full.free, full.torsion_order())) == 1, row.root_type);
    CHECK(narrow.rank() + t.rank() == 8);
    CHECK(narrow_index(narrow, full.free) >= 1);
  }
  CHECK(rational_mordell_weil("D4+A3").narrow == "<4>");
}

TEST_CASE("Shioda-Tate and Artin invariants") {
  SurfaceReport r = analyze(model_from_strings(7, {"0", "0", "0", "t", "5t^12"}));
  Lattice triv = trivial_lattice(r.fibers);
  CHECK(triv.rank() == 2 + 1 + 3 * 6);
  Rational ns = shioda_tate(triv.det(), parse_lattice("A1*(7)"), 7);
  CHECK(abs(ns) == 49);
  CHECK(artin_invariant(49, 7) == 1);
  CHECK(artin_invariant(Rational(5 * 5 * 5 * 5), 5) == 2);
  CHECK_THROWS_AS(artin_invariant(12, 7), Error);
  CHECK(mw_rank(22, r.fibers) == 1);
  CHECK(sigma0_from_mw(r, "A1*(7) + Z/7") == 1);
  CHECK(root_type(r.fibers) == "A6^3+A1");
}
