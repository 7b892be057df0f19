// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace ellk3;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool run(int n, const std::string& name, double limit, const std::function<void(Check&)>& body) {
  Check c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  double s = seconds_since(start);
  if (limit > 0 && s >= limit) {
    std::ostringstream os;
    os << "took " << s << " s, limit " << limit << " s";
    c.problems.push_back(os.str());
  }
  bool ok = c.problems.empty();
  std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", n, name.c_str(), s);
  for (std::size_t i = 0; i < c.problems.size() && i < 10; ++i) std::printf("    %s\n", c.problems[i].c_str());
  std::fflush(stdout);
  return ok;
}

void table_passes(Check& c, const std::string& id) {
  TableResult r = verify_table(id);
  for (const RowResult& row : r.rows) {
    if (row.status != RowResult::Status::Fail) continue;
    std::string d = id + " / " + row.label + ":";
    for (const std::string& s : row.diffs) d += " " + s;
    c.expect(false, d);
  }
  c.expect(r.checked() > 0, id + ": no rows checked");
}

std::string fibers(const SurfaceReport& r) { return render_multiset(fiber_multiset(r.fibers), r.model.p()); }

// Canonical form of a hand-written multiset.
std::string canon(const std::string& text, int p) { return render_multiset(parse_multiset(text), p); }

SurfaceReport analyze_member(const FamilyMember& x) {
  AnalyzeOptions o;
  if (x.torsion_order > 0) o.torsion = x.torsion_order;
  return analyze(x.model, o);
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "Igusa towers: exact fiber multisets", 10.0, [](Check& c) { table_passes(c, "igusa-tower"); });

  all &= run(2, "Euler bookkeeping on every golden row", 0, [](Check& c) {
    int rows = 0;
    for (const GoldenTable& t : golden_tables()) {
      for (const GoldenRow& row : t.rows) {
        if (!row.realizable) continue;
        SurfaceReport r = analyze_member(row.build());
        for (const std::string& v : euler_violations(r)) c.expect(false, t.id + " / " + row.label + ": " + v);
        if (r.surface_class.kind == SurfaceClass::Kind::K3) c.expect(r.c2 == 24, t.id + " / " + row.label + ": c2");
        ++rows;
      }
    }
    c.expect(rows >= 90, "too few rows: " + std::to_string(rows));
  });

  all &= run(3, "char 7: III + 3xI_7, |det NS| = 49, sigma0 = 1, 7-torsion", 30.0, [](Check& c) {
    for (const char* a6 : {"t^12", "5t^12"}) {
      WeierstrassModel m = model_from_strings(7, {"0", "0", "0", "t", a6});
      SurfaceReport r = analyze(m);
      c.expect(fibers(r) == canon("III, 3xI_7", 7), std::string(a6) + ": fibers " + fibers(r));
      Rational ns = shioda_tate(trivial_lattice(r.fibers).det(), parse_lattice("A1*(7)"), 7);
      c.expect(abs(ns) == 49, std::string(a6) + ": det NS " + to_string(ns));
      c.expect(artin_invariant(abs(ns), 7) == 1, std::string(a6) + ": sigma0");
    }
    WeierstrassModel x = model_from_strings(7, {"0", "0", "0", "t", "5t^12"});
    auto pts = torsion_search(x, 7, 4);
    c.expect(!pts.empty(), "no 7-torsion section found");
    for (const SectionPoint& P : pts) c.expect(order_of(x, P, 7) == 7, "order is not 7");
    table_passes(c, "char7");
  });

  all &= run(4, "char 5: five configurations, IV rows supersingular, 2xII rows ordinary", 0, [](Check& c) {
    table_passes(c, "char5-family");
    const GoldenTable& t = golden_table("char5-family");
    std::vector<int> ss_sigma;
    int ordinary = 0;
    for (const GoldenRow& row : t.rows) {
      FamilyMember x = row.build();
      SurfaceReport r = analyze_member(x);
      bool has_iv = fibers(r).find("IV") != std::string::npos;
      bool has_2ii = fibers(r).find("2xII") != std::string::npos;
      if (has_iv) {
        c.expect(r.supersingular == true, row.label + ": not supersingular");
        c.expect(r.height_flag == HeightFlag::Infinite, row.label + ": height");
        ss_sigma.push_back(sigma0_from_mw(r, row.expect.mw));
      }
      if (has_2ii) {
        c.expect(r.height_flag == HeightFlag::One, row.label + ": height");
        c.expect(r.decision == Decision::Ordinary, row.label + ": decision");
        ++ordinary;
      }
    }
    c.expect(ss_sigma == std::vector<int>{2, 1}, "sigma0 of IV rows");
    c.expect(ordinary >= 2, "2xII rows: " + std::to_string(ordinary));
  });

  all &= run(5, "char 3: supersingular table sweep, sections of order 3", 0, [](Check& c) {
    table_passes(c, "char3-family");
    std::set<int> sigmas;
    for (const GoldenRow& row : golden_table("char3-family").rows) {
      if (row.expect.sigma0) sigmas.insert(*row.expect.sigma0);
    }
    c.expect(sigmas == std::set<int>{1, 2, 3, 4, 5, 6}, "sigma0 values do not span 1..6");
    std::mt19937 rng(2024);
    std::map<FamilyKind, int> per;
    while (per[FamilyKind::P3Deg6] < 20 || per[FamilyKind::P3Deg5] < 20 || per[FamilyKind::P3Deg4] < 20) {
      FamilySpec s = oracle::random_family_member(rng);
      if (s.family == FamilyKind::P5AlphaBeta) continue;
      FamilyMember x = generate(s);
      c.expect(!x.sections.empty(), s.describe() + ": no section");
      for (const SectionPoint& P : x.sections) {
        c.expect(on_curve(x.model, P) && order_of(x.model, P, 9) == 3, s.describe() + ": order");
      }
      ++per[s.family];
    }
  });

  all &= run(6, "char 2: chain, iso-trivial, twist, torsion tables, 8-torsion search", 60.0, [](Check& c) {
    for (const char* id : {"char2-chain", "char2-isotrivial", "char2-twist", "torsion8", "torsion4", "torsion4-sigma"}) {
      table_passes(c, id);
    }
    // All five descents have a1 with zero linear term and h >= 2.
    for (const GoldenRow& row : golden_table("char2-chain").rows) {
      SurfaceReport r = analyze_member(row.build());
      c.expect(r.model.a_coeff(1, 1) == 0, row.label + ": a11");
      c.expect(height_flag(r.model) == HeightFlag::AtLeastTwo, row.label + ": height");
    }
    WeierstrassModel x8 = model_from_strings(2, {"t^2", "0", "0", "1", "t^4"});
    c.expect(fibers(analyze(x8)) == canon("I*_{1,1}, 2xI_8", 2), "8-torsion surface fibers");
    bool found = false;
    for (int bound = 0; bound <= 8 && !found; ++bound) {
      for (const SectionPoint& P : torsion_search(x8, 8, bound)) found |= order_of(x8, P, 8) == 8;
    }
    c.expect(found, "no section of order 8");
  });

  all &= run(7, "property suites", 0, [](Check& c) {
    std::mt19937 rng(77);
    // Tate types under coordinate changes.
    for (int p : {2, 3, 5, 7}) {
      std::vector<WeierstrassModel> models;
      for (int q : igusa_levels()) {
        if (igusa_universal(q).p == p) models.push_back(frobenius_pullback(igusa_universal(q).model));
      }
      for (int i = 0; i < 100; ++i) {
        const WeierstrassModel& m = models[static_cast<std::size_t>(i) % models.size()];
        std::string ref = fibers(analyze(m));
        std::string got = fibers(analyze(change_coordinates(m, oracle::random_change(rng, p))));
        c.expect(got == ref, "p=" + std::to_string(p) + ": " + got + " vs " + ref);
      }
    }
    // Group law.
    for (int i = 0; i < 50; ++i) {
      int p = std::array<int, 4>{2, 3, 5, 7}[static_cast<std::size_t>(i % 4)];
      auto cw = oracle::random_curve_with_points(rng, p);
      const WeierstrassModel& m = cw.model;
      SectionPoint R = add(m, cw.p1, multiply(m, cw.p2, 2));
      c.expect(add(m, cw.p1, cw.p2) == add(m, cw.p2, cw.p1), "commutativity");
      c.expect(add(m, add(m, cw.p1, cw.p2), R) == add(m, cw.p1, add(m, cw.p2, R)), "associativity");
      c.expect(add(m, cw.p1, negate(m, cw.p1)).zero, "inverse");
      c.expect(on_curve(m, R), "closure");
    }
    // Supersingular j-values.
    for (int p : {2, 3, 5, 7, 11, 13}) {
      std::set<int> have;
      for (const Poly& j : supersingular_j(p).values) have.insert(j.is_zero() ? 0 : j.coeff(0));
      c.expect(have == oracle::supersingular_j_by_counting(p), "supersingular j, p=" + std::to_string(p));
    }
    // Fixed loci, exhaustively.
    using S = KodairaType::Symbol;
    for (int p : {2, 3, 5, 7}) {
      for (S sym : {S::I0, S::In, S::II, S::III, S::IV, S::I0s, S::Ins, S::IVs, S::IIIs, S::IIs}) {
        for (int n : {0, 1, 2, 3, 4}) {
          for (bool ss : {false, true}) {
            for (bool meets : {false, true}) {
              for (Specialization sp : {Specialization::Identity, Specialization::ComponentGroup,
                                        Specialization::Theta1, Specialization::Theta2, Specialization::Theta3}) {
                if ((sym == S::In && n == 0) || (sym != S::In && sym != S::Ins && n != 0)) continue;
                if (ss && sym != S::I0) continue;
                FiberAnalysis f{Place::finite(Poly::t(p)), KodairaType{sym, n, 0}, 1, 0, "",
                                ss ? ReductionClass::GoodSupersingular : ReductionClass::GoodOrdinary};
                auto want = oracle::fixed_locus_rule(sym, n, ss, p, meets, sp);
                try {
                  auto got = fixed_locus(f, p, meets, sp).kind;
                  c.expect(want && *want == got, "fixed locus mismatch");
                } catch (const Error&) {
                  c.expect(!want, "fixed locus rejected a valid input");
                }
              }
            }
          }
        }
      }
    }
    for (const GoldenTable& t : golden_tables()) {
      for (const GoldenRow& row : t.rows) {
        if (!row.realizable) continue;
        FamilyMember x = row.build();
        if (x.torsion_order == 0 || x.torsion_order % x.model.p() != 0) continue;
        SurfaceReport r = analyze_member(x);
        if (r.surface_class.kind != SurfaceClass::Kind::K3) continue;
        c.expect(isolated_fixed_fiber_count(r) <= 2, t.id + " / " + row.label + ": fixed fibers");
      }
    }
    // Height identity, semi-stable char 2.
    SurfaceReport r = analyze(oracle::semistable_char2());
    std::vector<FiberAnalysis> mult;
    for (const FiberAnalysis& f : r.fibers) {
      if (f.type.multiplicative()) mult.push_back(f);
    }
    HeightIdentity h = torsion_height_identity(mult, std::vector<int>(mult.size(), 1), 2, 1);
    c.expect(h.holds(), "height identity");
  });

  all &= run(8, "dichotomy over 200 random family members", 0, [](Check& c) {
    std::mt19937 rng(8);
    int seen[3] = {0, 0, 0};
    for (int i = 0; i < 200; ++i) {
      FamilySpec s = oracle::random_family_member(rng);
      FamilyMember x = generate(s);
      SurfaceReport r = analyze_member(x);
      int count = r.geometric_pot_supersingular_count();
      bool h1 = r.height_flag == HeightFlag::One;
      bool ord = r.decision == Decision::Ordinary;
      bool ss = r.supersingular == true;
      std::string who = s.describe() + ": ";
      c.expect(count == 1 || count == 2, who + "count " + std::to_string(count));
      c.expect((count == 2) == h1 && h1 == ord, who + "count 2 / h=1 / ordinary disagree");
      c.expect((count == 1) == ss, who + "count 1 / supersingular disagree");
      ++seen[std::clamp(count, 0, 2)];
    }
    c.expect(seen[1] > 0 && seen[2] > 0, "only one branch of the dichotomy occurred");
    std::printf("    %d supersingular, %d ordinary\n", seen[1], seen[2]);
  });

  std::printf("%s\n", all ? "ALL PASS" : "SOME FAILED");
  return all ? 0 : 1;
}
