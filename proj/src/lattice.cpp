#include "ellk3/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace ellk3 {

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  auto parse_int = [&text](const std::string& s) {
    if (s.empty()) throw ParseError("empty integer in rational '" + text + "'", 0);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer in rational '" + text + "'", 0);
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        throw ParseError("bad digit in rational '" + text + "'", k);
      }
    }
    return Integer(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer d = parse_int(text.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", slash + 1);
  return Rational(parse_int(text.substr(0, slash)), d);
}

Lattice::Lattice(std::string name, Gram gram, int index) : name_(std::move(name)), gram_(std::move(gram)), index_(index) {
  if (index_ < 1) throw Error("overlattice index must be positive");
  for (const auto& row : gram_) {
    if (row.size() != gram_.size()) throw Error("Gram matrix of " + name_ + " is not square");
  }
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw Error("Gram matrix of " + name_ + " is not symmetric");
    }
  }
}

Lattice Lattice::zero() { return Lattice("{0}", {}); }

Rational Lattice::det() const { return determinant(gram_) / (Rational(index_) * index_); }

Rational determinant(const Lattice::Gram& g) {
  const std::size_t n = g.size();
  if (n == 0) return 1;
  Integer common = 1;
  for (const auto& row : g) {
    for (const Rational& q : row) common = boost::multiprecision::lcm(common, Integer(denominator(q)));
  }
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Integer(numerator(Rational(g[i][j] * common)));
  }
  // Bareiss: every division below is exact.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= common;
  return Rational(a[n - 1][n - 1] * sign, scale);
}

namespace {

Lattice::Gram zeros(std::size_t n) { return Lattice::Gram(n, std::vector<Rational>(n, Rational(0))); }

Lattice from_edges(std::string name, int n, const std::vector<std::pair<int, int>>& edges) {
  Lattice::Gram g = zeros(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (auto [i, j] : edges) g[i][j] = g[j][i] = -1;
  return Lattice(std::move(name), std::move(g));
}

Lattice::Gram integer_gram(std::initializer_list<std::initializer_list<int>> rows) {
  Lattice::Gram g;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (int v : r) row.emplace_back(v);
    g.push_back(std::move(row));
  }
  return g;
}

// Wraps composite names before a suffix is attached.
std::string atomic(const std::string& name) {
  bool simple = std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*'; });
  return simple ? name : "(" + name + ")";
}

}  // namespace

Lattice root_lattice(RootKind kind, int n) {
  switch (kind) {
    case RootKind::A: {
      if (n < 1) throw Error("A_n needs n >= 1");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return from_edges("A" + std::to_string(n), n, e);
    }
    case RootKind::D: {
      if (n < 4) throw Error("D_n needs n >= 4");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 1);
      return from_edges("D" + std::to_string(n), n, e);
    }
    case RootKind::E: {
      if (n < 6 || n > 8) throw Error("E_n needs n in {6, 7, 8}");
      // Chain 0-2-3-...-(n-1) with node 1 attached to node 3.
      std::vector<std::pair<int, int>> e = {{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return from_edges("E" + std::to_string(n), n, e);
    }
    case RootKind::U:
      return Lattice("U", integer_gram({{0, 1}, {1, 0}}));
    case RootKind::L2:
      return Lattice("L2", integer_gram({{4, -2}, {-2, 4}}));
    case RootKind::L3:
      return Lattice("L3", integer_gram({{2, 0, -1}, {0, 2, -1}, {-1, -1, 4}}));
    case RootKind::L4:
      return Lattice("L4", integer_gram({{4, -1, 0, 1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {1, 0, -1, 2}}));
  }
  throw std::logic_error("unknown root kind");
}

Lattice dual(const Lattice& l) {
  if (l.index() != 1) throw Error("dual of an overlattice given only by its index");
  const std::size_t n = static_cast<std::size_t>(l.rank());
  if (n == 0) return Lattice::zero();
  // Gauss-Jordan on [G | I].
  Lattice::Gram a = l.gram();
  Lattice::Gram inv = zeros(n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw Error("singular Gram matrix of " + l.name());
    std::swap(a[k], a[piv]);
    std::swap(inv[k], inv[piv]);
    Rational d = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= d;
      inv[k][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  std::string name = l.name();
  if (name.size() > 1 && name.back() == '*') {
    name.pop_back();
  } else {
    name = atomic(name) + "*";
  }
  return Lattice(name, std::move(inv));
}

Lattice scale(const Lattice& l, const Rational& k) {
  if (k == 0) throw Error("scaling by zero");
  Lattice::Gram g = l.gram();
  for (auto& row : g) {
    for (Rational& v : row) v *= k;
  }
  return Lattice(atomic(l.name()) + "(" + to_string(k) + ")", std::move(g), l.index());
}

Lattice dual_scale(const Lattice& l, const Rational& k) { return scale(dual(l), k); }

Lattice direct_sum(const std::vector<Lattice>& parts, std::string name) {
  std::size_t n = 0;
  int index = 1;
  for (const Lattice& l : parts) {
    n += static_cast<std::size_t>(l.rank());
    index *= l.index();
  }
  Lattice::Gram g = zeros(n);
  std::size_t off = 0;
  std::vector<std::string> names;
  for (const Lattice& l : parts) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(l.rank()); ++i) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(l.rank()); ++j) g[off + i][off + j] = l.gram()[i][j];
    }
    off += static_cast<std::size_t>(l.rank());
    if (l.rank() > 0 || parts.size() == 1) names.push_back(l.name());
  }
  if (name.empty()) {
    // Collapse runs of equal summands into powers.
    for (std::size_t i = 0; i < names.size();) {
      std::size_t j = i;
      while (j < names.size() && names[j] == names[i]) ++j;
      if (!name.empty()) name += "+";
      name += j - i > 1 ? atomic(names[i]) + "^" + std::to_string(j - i) : names[i];
      i = j;
    }
    if (name.empty()) name = "{0}";
  }
  return Lattice(name, std::move(g), index);
}

Lattice overlattice(const Lattice& l, int k) {
  if (k < 1) throw Error("overlattice index must be positive");
  if (k == 1) return l;
  return Lattice(std::to_string(k) + ".(" + l.name() + ")", l.gram(), l.index() * k);
}

namespace {

class LatticeParser {
 public:
  explicit LatticeParser(const std::string& s) : s_(s) {}

  Lattice parse() {
    Lattice l = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in lattice '" + s_ + "'", pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  Rational rational() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected rational");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  Lattice sum() {
    std::vector<Lattice> parts = {term()};
    while (eat('+')) parts.push_back(term());
    return parts.size() == 1 ? parts[0] : direct_sum(parts);
  }

  // [k.] factor [^n]
  Lattice term() {
    skip();
    std::size_t save = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int k = integer();
      if (eat('.')) return overlattice(factor(), k);
      pos_ = save;
    }
    Lattice l = factor();
    skip();
    // "^*" is a dual marker, "^n" a power.
    if (pos_ + 1 < s_.size() && s_[pos_] == '^' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      int n = integer();
      if (n < 1) fail("power must be positive");
      return direct_sum(std::vector<Lattice>(static_cast<std::size_t>(n), l));
    }
    return l;
  }

  // atom [*] [(k)] with further [*] / (k) suffixes allowed.
  Lattice factor() {
    Lattice l = atom();
    for (;;) {
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '*') {
        pos_ += 2;
        l = dual(l);
      } else if (eat('*')) {
        l = dual(l);
      } else if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        Rational k = rational();
        if (!eat(')')) fail("expected ')'");
        l = scale(l, k);
      } else {
        return l;
      }
    }
  }

  Lattice atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Lattice l = sum();
      if (!eat(')')) fail("expected ')'");
      return l;
    }
    if (c == '<') {
      ++pos_;
      Rational v = rational();
      if (!eat('>')) fail("expected '>'");
      return Lattice("<" + to_string(v) + ">", {{v}});
    }
    if (c == '{') {
      ++pos_;
      if (!eat('0') || !eat('}')) fail("expected '{0}'");
      return Lattice::zero();
    }
    ++pos_;
    auto index = [this]() {
      eat('_');
      return integer();
    };
    switch (c) {
      case 'A':
        return root_lattice(RootKind::A, index());
      case 'D':
        return root_lattice(RootKind::D, index());
      case 'E':
        return root_lattice(RootKind::E, index());
      case 'U':
        return root_lattice(RootKind::U);
      case 'L': {
        int n = index();
        if (n == 2) return root_lattice(RootKind::L2);
        if (n == 3) return root_lattice(RootKind::L3);
        if (n == 4) return root_lattice(RootKind::L4);
        --pos_;
        fail("unknown lattice L" + std::to_string(n));
      }
      default:
        --pos_;
        fail("unknown lattice symbol");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Lattice parse_lattice(const std::string& text) { return LatticeParser(text).parse(); }

int MordellWeil::torsion_order() const {
  int n = 1;
  for (int k : torsion) n *= k;
  return n;
}

std::string MordellWeil::torsion_text() const {
  std::string out;
  for (int k : torsion) out += (out.empty() ? "" : "+") + std::string("Z/") + std::to_string(k);
  return out.empty() ? "0" : out;
}

MordellWeil parse_mordell_weil(const std::string& text) {
  // Split at top-level '+' and peel off the Z/n summands.
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '<' || c == '{') ++depth;
    if (c == ')' || c == '>' || c == '}') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  MordellWeil mw{Lattice::zero(), {}};
  std::string free;
  for (std::string part : parts) {
    part.erase(std::remove_if(part.begin(), part.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               part.end());
    if (part.rfind("Z/", 0) == 0) {
      int k = std::stoi(part.substr(2));
      if (k < 1) throw ParseError("bad torsion summand in '" + text + "'", 0);
      mw.torsion.push_back(k);
    } else {
      free += (free.empty() ? "" : "+") + part;
    }
  }
  if (!free.empty()) mw.free = parse_lattice(free);
  return mw;
}

Lattice fiber_root_lattice(const KodairaType& t) {
  using S = KodairaType::Symbol;
  switch (t.symbol) {
    case S::I0:
    case S::II:
      return Lattice::zero();
    case S::In:
      return t.n >= 2 ? root_lattice(RootKind::A, t.n - 1) : Lattice::zero();
    case S::III:
      return root_lattice(RootKind::A, 1);
    case S::IV:
      return root_lattice(RootKind::A, 2);
    case S::I0s:
      return root_lattice(RootKind::D, 4);
    case S::Ins:
      return root_lattice(RootKind::D, 4 + t.n);
    case S::IVs:
      return root_lattice(RootKind::E, 6);
    case S::IIIs:
      return root_lattice(RootKind::E, 7);
    case S::IIs:
      return root_lattice(RootKind::E, 8);
  }
  throw std::logic_error("unknown Kodaira symbol");
}

Lattice trivial_lattice(const std::vector<FiberAnalysis>& fibers) {
  std::vector<Lattice> parts = {root_lattice(RootKind::U)};
  std::vector<Lattice> roots;
  for (const FiberAnalysis& f : fibers) {
    Lattice r = fiber_root_lattice(f.type);
    if (r.rank() == 0) continue;
    for (int i = 0; i < f.place.degree(); ++i) roots.push_back(r);
  }
  // Canonical order so equal summands collapse in the name.
  std::stable_sort(roots.begin(), roots.end(), [](const Lattice& a, const Lattice& b) {
    if (a.name()[0] != b.name()[0]) return a.name()[0] > b.name()[0];
    return a.rank() > b.rank();
  });
  parts.insert(parts.end(), roots.begin(), roots.end());
  return direct_sum(parts);
}

Rational shioda_tate(const Rational& det_t, const Lattice& mw_free, int torsion_order) {
  if (torsion_order < 1) throw Error("torsion order must be positive");
  Rational d = abs(det_t) * abs(mw_free.det()) / (Rational(torsion_order) * torsion_order);
  return d;
}

int artin_invariant(const Rational& det_ns, int p) {
  require_prime(p);
  Rational d = abs(det_ns);
  if (denominator(d) != 1) throw Error("not supersingular-shaped determinant: " + to_string(det_ns));
  Integer n = numerator(d);
  int e = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1 || e % 2 != 0 || e == 0) throw Error("not supersingular-shaped determinant: " + to_string(det_ns));
  return e / 2;
}

int mw_rank(int rho, const std::vector<FiberAnalysis>& fibers) {
  int r = rho - 2;
  for (const FiberAnalysis& f : fibers) r -= (f.type.components() - 1) * f.place.degree();
  if (r < 0) throw Error("rho inconsistent with fibers");
  return r;
}

const std::vector<RationalMordellWeil>& rational_mordell_weil_table() {
  // Oguiso-Shioda entries for the configurations that occur as Frobenius
  // quotients of the supersingular tables.
  static const std::vector<RationalMordellWeil> table = {
      {"", "E8", "E8"},
      {"A1", "E7", "E7*"},
      {"A2", "E6", "E6*"},
      {"A1^2", "D6", "D6*"},
      {"A3", "D5", "D5*"},
      {"A1^3", "D4+A1", "D4*+A1*"},
      {"A2+A1", "A5", "A5*"},
      {"A4", "A4", "A4*"},
      {"A3+A1", "A3+A1", "A3*+A1*"},
      {"A2^2", "A2^2", "A2*^2"},
      {"A2+A1^2", "L4", "L4*"},
      {"A3+A2", "L3", "L3*"},
      {"A2+A1^3", "A1+L2", "A1*+L2*"},
      {"D4", "D4", "D4*"},
      {"D4+A1", "A1^3", "A1*^3"},
      {"D4+A1^2", "A1^2", "A1*^2+Z/2"},
      {"D4+A2", "L2", "L2*"},
      {"D4+A1^3", "A1", "A1*+Z/2+Z/2"},
      {"D4+A3", "<4>", "<1/4>+Z/2"},
      {"A2^3", "A2", "A2*+Z/3"},
      {"A5+A2", "<2>", "<1/2>+Z/3"},
      {"E6", "A2", "A2*"},
      {"E6+A1", "<6>", "<1/6>"},
      {"E7", "A1", "A1*"},
  };
  return table;
}

const RationalMordellWeil& rational_mordell_weil(const std::string& root_type) {
  for (const auto& e : rational_mordell_weil_table()) {
    if (e.root_type == root_type) return e;
  }
  throw Error("no rational Mordell-Weil entry for root type '" + root_type + "'");
}

int narrow_index(const Lattice& narrow, const Lattice& full_free) {
  if (narrow.rank() != full_free.rank()) throw Error("narrow and full lattices differ in rank");
  Rational q = abs(narrow.det() / full_free.det());
  if (denominator(q) != 1) throw Error("narrow lattice is not of finite index");
  Integer n = numerator(q);
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) throw Error("determinant ratio is not a square");
  return static_cast<int>(r);
}

}  // namespace ellk3
