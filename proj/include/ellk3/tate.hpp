#pragma once

// Local fiber analysis with Tate's algorithm (all characteristics), Swan
// conductors from Ogg's formula, global minimal models and surface reports.

#include <optional>
#include <string>
#include <vector>

#include "ellk3/weierstrass.hpp"

namespace ellk3 {

struct KodairaType {
  enum class Symbol { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };

  Symbol symbol = Symbol::I0;
  int n = 0;     // index of I_n and I_n*
  int swan = 0;  // wild part of the conductor

  bool additive() const;
  bool multiplicative() const { return symbol == Symbol::In; }
  // Number of geometric components of the special fiber.
  int components() const;
  // Group of components of the Neron model's special fiber.
  std::string component_group() const;
  // Display form: I*_{n,d} in characteristic 2 and 3, a "_d" suffix on
  // other additive types only when d > 0.
  std::string render(int p) const;
  bool operator==(const KodairaType& o) const { return symbol == o.symbol && n == o.n && swan == o.swan; }
  bool operator<(const KodairaType& o) const;

  // Inverse of render(); accepts both I*_n and I*_{n,d}.
  static KodairaType parse(const std::string& text);
};

enum class ReductionClass {
  GoodOrdinary,
  GoodSupersingular,
  Multiplicative,
  AdditivePotMultiplicative,
  AdditivePotOrdinary,
  AdditivePotSupersingular,
};

std::string to_string(ReductionClass c);
bool is_additive(ReductionClass c);

struct FiberAnalysis {
  Place place;
  KodairaType type;
  int m = 1;
  int v_delta_min = 0;
  std::string component_group;
  ReductionClass reduction_class = ReductionClass::GoodOrdinary;
};

// Fiber at v; the model is made minimal at v internally.
FiberAnalysis tate_local(const WeierstrassModel& m, const Place& v);

// True when no place admits a smaller integral model.
bool is_globally_minimal(const WeierstrassModel& m);

std::pair<WeierstrassModel, CoordinateChange> minimalize_global(const WeierstrassModel& m);

enum class HeightFlag { One, AtLeastTwo, Infinite, Undetermined };
std::string to_string(HeightFlag h);

enum class Decision { SupersingularUnirational, Ordinary, MixedChar2, Undecided };
std::string to_string(Decision d);

struct SurfaceReport {
  SurfaceReport(WeierstrassModel m, CoordinateChange c) : model(std::move(m)), change(std::move(c)) {}

  WeierstrassModel model;
  CoordinateChange change;  // input coordinates -> model
  std::vector<FiberAnalysis> fibers;
  int c2 = 0;
  SurfaceClass surface_class{SurfaceClass::Kind::Other, 0};
  HeightFlag height_flag = HeightFlag::Undetermined;
  std::optional<bool> supersingular;
  bool unirational_implied = false;
  std::optional<Decision> decision;
  std::optional<int> sigma0;
  std::optional<int> mw_rank;

  // Additive fibers counted with residue degree.
  int geometric_additive_count() const;
  // Additive or good supersingular, counted with residue degree.
  int geometric_pot_supersingular_count() const;
};

struct AnalyzeOptions {
  bool raw = false;            // skip minimalization
  bool brauer_flags = false;   // height flag even without declared torsion
  std::optional<int> torsion;  // declared p-power torsion order p^n
};

SurfaceReport analyze(const WeierstrassModel& m, const AnalyzeOptions& options = {});

// Multiset of (type, geometric multiplicity) with canonical ordering.
struct FiberCount {
  KodairaType type;
  int count;
  bool operator==(const FiberCount& o) const { return type == o.type && count == o.count; }
};
std::vector<FiberCount> fiber_multiset(const std::vector<FiberAnalysis>& fibers);
std::string render_multiset(const std::vector<FiberCount>& fibers, int p);
// Inverse of render_multiset.
std::vector<FiberCount> parse_multiset(const std::string& text);

}  // namespace ellk3
