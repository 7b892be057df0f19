#pragma once

// Embedded classification tables and the harness that regenerates every
// row's representative and compares fibers, Euler numbers, height flags and
// Artin invariants.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ellk3/families.hpp"
#include "ellk3/serialize.hpp"

namespace ellk3 {

struct RowExpectation {
  std::string fibers;        // multiset text, e.g. "IV_2, 6xI_3"
  std::string surface;       // "K3", "rational" or empty
  std::string height;        // "1", ">=2", "inf" or empty
  std::optional<int> sigma0;
  std::string narrow;        // narrow Mordell-Weil lattice
  std::string mw;            // full Mordell-Weil group, "L + Z/n"
  std::string base_fibers;   // fibers of the quotient Y, when tabulated
  std::string base_surface;  // "K3" / "rational" for Y, when tabulated
  std::string j;             // j-invariant, when tabulated
};

struct GoldenRow {
  std::string label;
  std::string source;  // how the representative is built
  std::function<FamilyMember()> build;
  RowExpectation expect;
  // Printed equation of the same surface, compared by fibers and j.
  std::optional<WeierstrassModel> printed;
  // Run torsion_search for this order with the given degree bound.
  int search_order = 0;
  int search_bound = 0;
  // Rows that need more rational points than the prime field has.
  bool realizable = true;
  std::string note;
};

struct GoldenTable {
  std::string id;
  std::string title;
  int p;
  bool index_check;  // narrow-index divisibility against the rational quotient
  std::vector<GoldenRow> rows;
};

const std::vector<GoldenTable>& golden_tables();
const GoldenTable& golden_table(const std::string& id);

struct RowResult {
  std::string label;
  enum class Status { Pass, Fail, Skipped } status = Status::Pass;
  std::vector<std::string> diffs;
  Json detail;
};

struct TableResult {
  std::string id;
  std::vector<RowResult> rows;
  double seconds = 0;
  bool pass() const;
  int checked() const;
};

TableResult verify_table(const std::string& id);
Json to_json(const TableResult& r);

// Cumulative checks reused by the acceptance driver.
// Ogg and Euler bookkeeping; returns the violations.
std::vector<std::string> euler_violations(const SurfaceReport& r);
// Fibers whose fixed locus under a p-torsion translation can be non-empty.
int isolated_fixed_fiber_count(const SurfaceReport& r);
// sigma_0 from the trivial lattice and a Mordell-Weil description.
int sigma0_from_mw(const SurfaceReport& r, const std::string& mw);
// Root type key of a trivial lattice, e.g. "D4+A1^2"; empty for U alone.
std::string root_type(const std::vector<FiberAnalysis>& fibers);

}  // namespace ellk3
