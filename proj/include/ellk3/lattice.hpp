#pragma once

// Exact lattice arithmetic: root lattices, duals, scalings, the rank 2-4
// lattices of determinant 12, trivial lattices of elliptic surfaces and the
// determinant bookkeeping that leads to Artin invariants.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellk3/tate.hpp"

namespace ellk3 {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);
// "3", "-5/6"; whitespace is not allowed.
Rational parse_rational(const std::string& text);

class Lattice {
 public:
  using Gram = std::vector<std::vector<Rational>>;

  // `index` > 1 denotes an overlattice containing the Gram lattice with
  // that index; only its determinant is tracked.
  Lattice(std::string name, Gram gram, int index = 1);
  static Lattice zero();

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  const Gram& gram() const { return gram_; }
  int index() const { return index_; }
  // det(gram) / index^2, exact.
  Rational det() const;

 private:
  std::string name_;
  Gram gram_;
  int index_;
};

// Determinant by fraction-free elimination after clearing denominators.
Rational determinant(const Lattice::Gram& g);

enum class RootKind { A, D, E, U, L2, L3, L4 };
// A(n >= 1), D(n >= 4), E(6|7|8); n is ignored for U and the L lattices.
Lattice root_lattice(RootKind kind, int n = 0);

Lattice dual(const Lattice& l);
Lattice scale(const Lattice& l, const Rational& k);
// L*(k): the dual scaled by k.
Lattice dual_scale(const Lattice& l, const Rational& k);
Lattice direct_sum(const std::vector<Lattice>& parts, std::string name = "");
// The "k.L" notation: an overlattice of index k.
Lattice overlattice(const Lattice& l, int k);

// Names such as "E8(3)", "A_1^*(7)", "3.(E7*(3))", "A2(3)^2 + L4",
// "<5/6>", "{0}".
Lattice parse_lattice(const std::string& text);

// A lattice together with a finite group, e.g. "A1*(7) + Z/7".
struct MordellWeil {
  Lattice free;
  std::vector<int> torsion;  // cyclic factor orders
  int torsion_order() const;
  std::string torsion_text() const;
};
MordellWeil parse_mordell_weil(const std::string& text);

// U + the root lattice of every reducible fiber.
Lattice trivial_lattice(const std::vector<FiberAnalysis>& fibers);
Lattice fiber_root_lattice(const KodairaType& t);

// |det NS| = |det MW_free| |det T| / |MW_tors|^2.
Rational shioda_tate(const Rational& det_t, const Lattice& mw_free, int torsion_order);

// sigma_0 with |det NS| = p^(2 sigma_0).
int artin_invariant(const Rational& det_ns, int p);

// rho - 2 - sum (m_v - 1).
int mw_rank(int rho, const std::vector<FiberAnalysis>& fibers);

// Mordell-Weil lattices of rational elliptic surfaces, keyed by the root
// type of the trivial lattice (e.g. "D4+A1^2"); narrow and full lattice.
struct RationalMordellWeil {
  std::string root_type;
  std::string narrow;
  std::string full;
};
const std::vector<RationalMordellWeil>& rational_mordell_weil_table();
const RationalMordellWeil& rational_mordell_weil(const std::string& root_type);

// Index of `narrow` in the free part of `full`, from the determinants.
int narrow_index(const Lattice& narrow, const Lattice& full_free);

}  // namespace ellk3
