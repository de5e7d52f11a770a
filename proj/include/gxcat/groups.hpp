#pragma once

// Finite groups given by multiplication tables: presets, validation,
// conjugacy data, linear characters, and (projective) character tables.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gxcat/errors.hpp"
#include "gxcat/numbers.hpp"

namespace gxcat {

inline constexpr int kMaxPresetOrder = 24;
inline constexpr int kMaxExplicitOrder = 64;

/// A finite group as a multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  struct Trusted {};

  FiniteGroup() : FiniteGroup("Z1", 1, {0}, {"e"}, Trusted{}) {}

  /// Validates the table (associativity, identity at index 0, inverses).
  FiniteGroup(std::string name, int order, std::vector<int> table, std::vector<std::string> names = {})
      : name_(std::move(name)), order_(order), mul_(std::move(table)), names_(std::move(names)) {
    if (order_ < 1) fail(ErrorKind::validation, "group order must be positive");
    if (order_ > kMaxExplicitOrder)
      fail(ErrorKind::resource, "group order " + std::to_string(order_) + " exceeds the explicit-table limit " +
                                    std::to_string(kMaxExplicitOrder));
    validate();
    finish();
  }

  /// Skips the O(n^3) associativity check; used for tables built by construction.
  FiniteGroup(std::string name, int order, std::vector<int> table, std::vector<std::string> names, Trusted)
      : name_(std::move(name)), order_(order), mul_(std::move(table)), names_(std::move(names)) {
    finish();
  }

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  const std::vector<int>& table() const { return mul_; }
  const std::string& element_name(int a) const { return names_[a]; }
  const std::vector<std::string>& element_names() const { return names_; }

  std::optional<int> find(const std::string& label) const {
    for (int i = 0; i < order_; ++i)
      if (names_[i] == label) return i;
    return std::nullopt;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
    return x.order_ == y.order_ && x.mul_ == y.mul_;
  }

 private:
  void validate() {
    const std::size_t n = static_cast<std::size_t>(order_);
    if (mul_.size() != n * n) fail(ErrorKind::validation, "multiplication table has wrong size");
    for (int v : mul_)
      if (v < 0 || v >= order_) fail(ErrorKind::validation, "table entry " + std::to_string(v) + " out of range");
    for (int a = 0; a < order_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a)
        fail(ErrorKind::validation, "element 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
    for (int a = 0; a < order_; ++a) {
      bool found = false;
      for (int b = 0; b < order_ && !found; ++b) found = mul(a, b) == 0 && mul(b, a) == 0;
      if (!found) fail(ErrorKind::validation, "element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail(ErrorKind::validation, "table is not associative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
  }

  void finish() {
    inv_.assign(order_, 0);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == 0) inv_[a] = b;
    if (names_.empty()) {
      names_.reserve(order_);
      names_.push_back("e");
      for (int a = 1; a < order_; ++a) names_.push_back(std::to_string(a));
    }
    if (static_cast<int>(names_.size()) != order_) fail(ErrorKind::validation, "element name count mismatch");
  }

  std::string name_;
  int order_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// ---------------------------------------------------------------------------
// Presets

inline FiniteGroup product_of_cyclics(const std::vector<int>& factors) {
  int order = 1;
  for (int f : factors) {
    if (f < 1) fail(ErrorKind::usage, "cyclic factor must be positive");
    order *= f;
  }
  if (order > kMaxPresetOrder) fail(ErrorKind::resource, "preset order exceeds " + std::to_string(kMaxPresetOrder));
  // mixed radix, first factor fastest
  auto digits = [&](int x) {
    std::vector<int> d(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      d[i] = x % factors[i];
      x /= factors[i];
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int x = 0;
    for (std::size_t i = factors.size(); i-- > 0;) x = x * factors[i] + d[i];
    return x;
  };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  const bool single = factors.size() == 1;
  for (int a = 0; a < order; ++a) {
    auto da = digits(a);
    std::string nm;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (da[i] == 0) continue;
      nm += single ? std::string("g") : std::string(1, static_cast<char>('a' + i));
      if (da[i] > 1) nm += "^" + std::to_string(da[i]);
    }
    names[a] = nm.empty() ? "e" : nm;
    for (int b = 0; b < order; ++b) {
      auto db = digits(b);
      for (std::size_t i = 0; i < factors.size(); ++i) db[i] = (da[i] + db[i]) % factors[i];
      table[static_cast<std::size_t>(a) * order + b] = index(db);
    }
  }
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + ("Z" + std::to_string(factors[i]));
  return FiniteGroup(name, order, std::move(table), std::move(names), FiniteGroup::Trusted{});
}

inline FiniteGroup cyclic(int n) { return product_of_cyclics({n}); }

/// Dihedral group of order 2n; element r^i s^j has index i + n*j.
inline FiniteGroup dihedral(int n) {
  if (n < 1 || 2 * n > kMaxPresetOrder) fail(ErrorKind::resource, "dihedral preset out of range");
  const int order = 2 * n;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int a = 0; a < order; ++a) {
    int i = a % n, j = a / n;
    std::string nm;
    if (i == 1) nm = "r";
    if (i > 1) nm = "r^" + std::to_string(i);
    if (j == 1) nm += "s";
    names[a] = nm.empty() ? "e" : nm;
    for (int b = 0; b < order; ++b) {
      int k = b % n, l = b / n;
      int ni = static_cast<int>(mod(i + (j ? -k : k), n));
      table[static_cast<std::size_t>(a) * order + b] = ni + n * ((j + l) % 2);
    }
  }
  return FiniteGroup("D" + std::to_string(n), order, std::move(table), std::move(names), FiniteGroup::Trusted{});
}

namespace detail {

inline std::string cycle_notation(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

}  // namespace detail

/// A finite group realized as permutations of {0..degree-1}; perms[g] is the image of element g.
struct PermutationGroup {
  FiniteGroup group;
  int degree = 0;
  std::vector<std::vector<int>> perms;
};

/// Closure of the given generators in S_degree; elements in lexicographic order (identity first).
inline PermutationGroup permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                                          std::string name = {}) {
  if (degree < 1 || degree > 8) fail(ErrorKind::usage, "permutation degree must be in 1..8");
  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : generators) {
    auto s = g;
    std::sort(s.begin(), s.end());
    if (s != id) fail(ErrorKind::usage, "generator is not a permutation of 0.." + std::to_string(degree - 1));
  }
  std::set<std::vector<int>> elems{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = detail::compose(g, x);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());
  const int order = static_cast<int>(list.size());
  if (order > kMaxExplicitOrder) fail(ErrorKind::resource, "permutation group too large");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[list[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int a = 0; a < order; ++a) {
    names[a] = detail::cycle_notation(list[a]);
    for (int b = 0; b < order; ++b) table[static_cast<std::size_t>(a) * order + b] = index[detail::compose(list[a], list[b])];
  }
  if (name.empty()) name = "Perm" + std::to_string(degree) + "_" + std::to_string(order);
  return {FiniteGroup(std::move(name), order, std::move(table), std::move(names), FiniteGroup::Trusted{}), degree,
          std::move(list)};
}

inline FiniteGroup symmetric(int n) {
  if (n < 1 || n > 4) fail(ErrorKind::resource, "symmetric preset supports n <= 4");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  return permutation_group(n, gens, "S" + std::to_string(n)).group;
}

inline FiniteGroup quaternion8() {
  // index = 2*u + s with u in {1,i,j,k} and s the sign bit
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2 + b % 2 + unit_sign[ua][ub]) % 2;
      table[static_cast<std::size_t>(a) * 8 + b] = 2 * unit_mul[ua][ub] + s;
    }
  return FiniteGroup("Q8", 8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                     FiniteGroup::Trusted{});
}

/// Parses "Z<n>", "Z<a>xZ<b>...", "D<n>", "S<n>", "Q8".
inline FiniteGroup build_group(const std::string& spec) {
  auto number = [&](const std::string& s) -> int {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), ::isdigit))
      fail(ErrorKind::usage, "cannot parse group preset '" + spec + "'");
    return std::stoi(s);
  };
  if (spec == "Q8") return quaternion8();
  if (spec.size() > 1 && spec[0] == 'S' && spec.find('x') == std::string::npos) return symmetric(number(spec.substr(1)));
  if (spec.size() > 1 && spec[0] == 'D') return dihedral(number(spec.substr(1)));
  if (spec.size() > 1 && spec[0] == 'Z') {
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t x = spec.find('x', pos);
      std::string part = spec.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
      if (part.size() < 2 || part[0] != 'Z') fail(ErrorKind::usage, "cannot parse group preset '" + spec + "'");
      factors.push_back(number(part.substr(1)));
      if (x == std::string::npos) break;
      pos = x + 1;
    }
    return product_of_cyclics(factors);
  }
  fail(ErrorKind::usage, "unknown group preset '" + spec + "'");
}

/// The bundled preset list.
inline std::vector<std::string> preset_names() {
  return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "Q8", "S4"};
}

// ---------------------------------------------------------------------------
// Subgroups and generation

inline std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  in[0] = true;
  std::vector<int> elems{0};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Greedy generating set: scan elements in index order, keep those outside the current span.
inline std::vector<int> generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int x = 1; x < g.order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

/// A subgroup re-indexed as a group in its own right (identity first, parent order preserved).
struct Subgroup {
  FiniteGroup group;
  std::vector<int> to_parent;
  int to_local(int parent_element) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_element);
    if (it == to_parent.end() || *it != parent_element) return -1;
    return static_cast<int>(it - to_parent.begin());
  }
};

inline Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements, std::string name = {}) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != 0) fail(ErrorKind::validation, "subgroup must contain the identity");
  const int n = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = g.element_name(elements[a]);
    for (int b = 0; b < n; ++b) {
      int p = g.mul(elements[a], elements[b]);
      auto it = std::lower_bound(elements.begin(), elements.end(), p);
      if (it == elements.end() || *it != p) fail(ErrorKind::validation, "element subset is not closed under multiplication");
      table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(it - elements.begin());
    }
  }
  if (name.empty()) name = g.name() + "_sub" + std::to_string(n);
  return {FiniteGroup(std::move(name), n, std::move(table), std::move(names), FiniteGroup::Trusted{}),
          std::move(elements)};
}

// ---------------------------------------------------------------------------
// Conjugacy

struct ConjugacyData {
  std::vector<std::vector<int>> classes;       // sorted; classes ordered by least member
  std::vector<int> reps;                       // least member of each class
  std::vector<int> class_of;                   // per element
  std::vector<std::vector<int>> centralizers;  // per class, centralizer of the representative
};

inline std::vector<int> centralizer(const FiniteGroup& g, int x) {
  std::vector<int> c;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h)) c.push_back(h);
  return c;
}

inline ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData d;
  d.class_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (d.class_of[x] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < g.order(); ++h) cls.insert(g.conj(h, x));
    const int id = static_cast<int>(d.classes.size());
    for (int y : cls) d.class_of[y] = id;
    d.classes.emplace_back(cls.begin(), cls.end());
    d.reps.push_back(x);
    d.centralizers.push_back(centralizer(g, x));
  }
  for (std::size_t i = 0; i < d.classes.size(); ++i)
    check_internal(d.classes[i].size() * d.centralizers[i].size() == static_cast<std::size_t>(g.order()),
                   "class-centralizer identity failed");
  return d;
}

// ---------------------------------------------------------------------------
// Linear characters

/// A homomorphism G -> Z/N, values[g] additive (the scalar is exp(2 pi i v / N)).
struct LinearCharacter {
  std::vector<std::int64_t> values;
  std::int64_t N = 1;
  friend bool operator==(const LinearCharacter&, const LinearCharacter&) = default;
  friend bool operator<(const LinearCharacter& a, const LinearCharacter& b) { return a.values < b.values; }
};

inline std::vector<int> commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generated_subgroup(g, comms);
}

/// Exponent of G/[G,G].
inline int abelianization_exponent(const FiniteGroup& g) {
  auto k = commutator_subgroup(g);
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (int x : k) in[x] = true;
  int e = 1;
  for (int x = 0; x < g.order(); ++x) {
    int n = 1;
    for (int y = x; !in[y]; y = g.mul(y, x)) ++n;
    e = static_cast<int>(lcm64(e, n));
  }
  return e;
}

/// All homomorphisms G -> Z/N, sorted; exactly |G/[G,G]| of them when N is a multiple of the exponent.
inline std::vector<LinearCharacter> abelian_characters(const FiniteGroup& g, std::int64_t N) {
  if (N < 1) fail(ErrorKind::usage, "N must be positive");
  const int e = abelianization_exponent(g);
  if (N % e != 0)
    fail(ErrorKind::validation, "N=" + std::to_string(N) + " is not a multiple of the abelianization exponent " +
                                    std::to_string(e));
  const auto gens = generators(g);
  std::vector<LinearCharacter> out;
  std::vector<std::int64_t> assign(gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> val(static_cast<std::size_t>(g.order()), -1);
    val[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int x = queue[qi];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        int y = g.mul(x, gens[i]);
        std::int64_t v = mod(val[x] + assign[i], N);
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back({val, N});
    std::size_t i = 0;
    for (; i < assign.size(); ++i) {
      if (++assign[i] < N) break;
      assign[i] = 0;
    }
    if (i == assign.size()) break;
  }
  std::sort(out.begin(), out.end());
  const int expected = g.order() / static_cast<int>(commutator_subgroup(g).size());
  check_internal(static_cast<int>(out.size()) == expected, "character count differs from |G/[G,G]|");
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms

/// All automorphisms as element permutations, sorted; the identity comes first.
inline std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  const auto gens = generators(g);
  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size(), 0);
  while (true) {
    std::vector<int> phi(static_cast<std::size_t>(g.order()), -1);
    phi[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int x = queue[qi];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        int y = g.mul(x, gens[i]);
        int v = g.mul(phi[x], images[i]);
        if (phi[y] < 0) {
          phi[y] = v;
          queue.push_back(y);
        } else if (phi[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
      for (int v : phi) hit[v] = true;
      ok = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
    if (ok) out.push_back(phi);
    std::size_t i = 0;
    for (; i < images.size(); ++i) {
      if (++images[i] < g.order()) break;
      images[i] = 0;
    }
    if (i == images.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Character tables (Burnside/Dixon: simultaneous eigenvectors of class matrices)

struct CharacterTable {
  ConjugacyData conj;
  std::vector<int> dims;                                    // per irrep
  std::vector<std::vector<std::complex<double>>> values;    // [irrep][class]

  std::complex<double> value(int irrep, int element) const { return values[irrep][conj.class_of[element]]; }
};

namespace detail {

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-6) { return std::abs(a - b) < tol; }

// Ordering key: dimension first, then character values quantized.
inline std::vector<long long> irrep_key(int dim, const std::vector<std::complex<double>>& vals) {
  std::vector<long long> key{dim};
  for (auto v : vals) {
    key.push_back(std::llround(v.real() * 1e6));
    key.push_back(std::llround(v.imag() * 1e6));
  }
  return key;
}

}  // namespace detail

inline CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable ct;
  ct.conj = conjugacy_data(g);
  const auto& cd = ct.conj;
  const int k = static_cast<int>(cd.classes.size());
  const int n = g.order();
  // a[i](j,l) = #{(x in C_i, y in C_j) : xy = rep_l}
  std::vector<Eigen::MatrixXd> a(static_cast<std::size_t>(k), Eigen::MatrixXd::Zero(k, k));
  for (int i = 0; i < k; ++i)
    for (int x : cd.classes[i])
      for (int j = 0; j < k; ++j)
        for (int y : cd.classes[j]) a[i](j, cd.class_of[g.mul(x, y)]) += 1.0;
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) a[i].col(l) /= static_cast<double>(cd.classes[l].size());

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) m += unif(rng) * a[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) continue;
    auto evals = es.eigenvalues();
    bool distinct = true;
    for (int i = 0; i < k && distinct; ++i)
      for (int j = 0; j < i && distinct; ++j) distinct = std::abs(evals(i) - evals(j)) > 1e-6;
    if (!distinct) continue;
    auto vecs = es.eigenvectors();
    std::vector<std::pair<std::vector<long long>, std::pair<int, std::vector<std::complex<double>>>>> rows;
    bool ok = true;
    double sumsq = 0.0;
    for (int c = 0; c < k && ok; ++c) {
      std::complex<double> v0 = vecs(0, c);
      if (std::abs(v0) < 1e-12) {
        ok = false;
        break;
      }
      std::vector<std::complex<double>> omega(static_cast<std::size_t>(k));
      double denom = 0.0;
      for (int l = 0; l < k; ++l) {
        omega[l] = vecs(l, c) / v0;
        denom += std::norm(omega[l]) / static_cast<double>(cd.classes[l].size());
      }
      double d2 = n / denom;
      double d = std::sqrt(d2);
      int di = static_cast<int>(std::lround(d));
      if (di < 1 || std::abs(d - di) > 1e-6) {
        ok = false;
        break;
      }
      std::vector<std::complex<double>> chi(static_cast<std::size_t>(k));
      for (int l = 0; l < k; ++l) chi[l] = omega[l] * static_cast<double>(di) / static_cast<double>(cd.classes[l].size());
      sumsq += static_cast<double>(di) * di;
      auto key = detail::irrep_key(di, chi);
      // trivial character first
      bool trivial = true;
      for (auto v : chi) trivial = trivial && detail::close(v, 1.0);
      key.insert(key.begin(), trivial ? 0 : 1);
      rows.push_back({key, {di, chi}});
    }
    if (!ok || std::abs(sumsq - n) > 1e-6) continue;
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& r : rows) {
      ct.dims.push_back(r.second.first);
      ct.values.push_back(std::move(r.second.second));
    }
    // row orthogonality
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::complex<double> s = 0;
        for (int l = 0; l < k; ++l)
          s += static_cast<double>(cd.classes[l].size()) * ct.values[i][l] * std::conj(ct.values[j][l]);
        check_internal(detail::close(s / static_cast<double>(n), i == j ? 1.0 : 0.0), "character orthogonality failed");
      }
    return ct;
  }
  fail(ErrorKind::internal, "character table computation did not converge for " + g.name());
}

// ---------------------------------------------------------------------------
// Projective representations via the central extension by Z/N

inline constexpr int kMaxExtensionOrder = 4096;

/// The central extension of h by Z/N with cocycle alpha (full |h|x|h| table, normalized).
/// Element (s, x) has index s*|h| + x.
inline FiniteGroup central_extension(const FiniteGroup& h, const std::vector<std::int64_t>& alpha, std::int64_t N) {
  const int n = h.order();
  const std::int64_t order = N * n;
  if (order > kMaxExtensionOrder)
    fail(ErrorKind::resource, "central extension of order " + std::to_string(order) + " exceeds " +
                                  std::to_string(kMaxExtensionOrder));
  const int m = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    int s = a / n, x = a % n;
    names[a] = a == 0 ? "e" : "(" + std::to_string(s) + "," + h.element_name(x) + ")";
    for (int b = 0; b < m; ++b) {
      int t = b / n, y = b % n;
      std::int64_t u = mod(s + t + alpha[static_cast<std::size_t>(x) * n + y], N);
      table[static_cast<std::size_t>(a) * m + b] = static_cast<int>(u) * n + h.mul(x, y);
    }
  }
  return FiniteGroup(h.name() + "~", m, std::move(table), std::move(names), FiniteGroup::Trusted{});
}

struct ProjectiveIrreps {
  std::vector<int> dims;
  std::vector<std::vector<std::complex<double>>> characters;  // [irrep][element of h], on the lift (0,x)
};

/// Irreducible alpha-projective representations of h: irreps of the central extension on
/// which the central generator acts by exp(2 pi i / N). The caller guarantees alpha is a
/// normalized 2-cocycle.
inline ProjectiveIrreps projective_irreps_from_table(const FiniteGroup& h, const std::vector<std::int64_t>& alpha,
                                                     std::int64_t N) {
  const FiniteGroup ext = central_extension(h, alpha, N);
  const CharacterTable ct = character_table(ext);
  const int n = h.order();
  const int z = static_cast<int>(1 % N) * n;  // (1, e)
  const std::complex<double> zeta = std::polar(1.0, 2.0 * M_PI / static_cast<double>(N));
  ProjectiveIrreps out;
  for (std::size_t i = 0; i < ct.dims.size(); ++i) {
    auto ratio = ct.value(static_cast<int>(i), z) / static_cast<double>(ct.dims[i]);
    if (!detail::close(ratio, zeta)) continue;
    out.dims.push_back(ct.dims[i]);
    std::vector<std::complex<double>> chi(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) chi[x] = ct.value(static_cast<int>(i), x);
    out.characters.push_back(std::move(chi));
  }
  long sum = 0;
  for (int d : out.dims) sum += static_cast<long>(d) * d;
  check_internal(sum == n, "projective irreducible dimensions do not satisfy sum d^2 = |H|");
  return out;
}

}  // namespace gxcat
