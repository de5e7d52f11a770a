#pragma once

// Normalized bar-complex cohomology of finite groups with coefficients in Z/N.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "gxcat/errors.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/linalg.hpp"
#include "gxcat/numbers.hpp"

namespace gxcat {

inline constexpr std::int64_t kMaxCoefficientOrder = 360;

/// A normalized cochain G^n -> Z/N. Values are stored for tuples of non-identity
/// elements, in lexicographic order; tuples containing the identity are 0.
class TorsionCocycle {
 public:
  TorsionCocycle() = default;
  TorsionCocycle(GroupPtr group, int degree, std::int64_t N) : group_(std::move(group)), degree_(degree), N_(N) {
    if (!group_) fail(ErrorKind::usage, "cochain needs a group");
    if (degree_ < 0) fail(ErrorKind::usage, "cochain degree must be non-negative");
    if (N_ < 1) fail(ErrorKind::usage, "coefficient order N must be positive");
    std::int64_t size = 1;
    for (int i = 0; i < degree_; ++i) {
      size *= base();
      if (size > kMaxMatrixEntries) fail(ErrorKind::resource, "cochain space too large");
    }
    values_.assign(static_cast<std::size_t>(size), 0);
  }

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  int degree() const { return degree_; }
  std::int64_t N() const { return N_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::int32_t>& values() const { return values_; }
  int base() const { return group_->order() - 1; }

  /// Index of a tuple, or -1 if it contains the identity.
  long index(const int* tuple) const {
    long idx = 0;
    for (int i = 0; i < degree_; ++i) {
      if (tuple[i] == 0) return -1;
      idx = idx * base() + (tuple[i] - 1);
    }
    return idx;
  }

  std::vector<int> tuple(std::size_t index) const {
    std::vector<int> t(static_cast<std::size_t>(degree_));
    for (int i = degree_; i-- > 0;) {
      t[i] = static_cast<int>(index % base()) + 1;
      index /= base();
    }
    return t;
  }

  std::int64_t value(const int* tuple) const {
    long i = index(tuple);
    return i < 0 ? 0 : values_[static_cast<std::size_t>(i)];
  }
  std::int64_t value(const std::vector<int>& tuple) const {
    check_size(tuple);
    return value(tuple.data());
  }
  std::int64_t operator()(int a, int b) const {
    int t[2] = {a, b};
    return value(t);
  }
  std::int64_t operator()(int a, int b, int c) const {
    int t[3] = {a, b, c};
    return value(t);
  }

  void set(const std::vector<int>& tuple, std::int64_t v) {
    check_size(tuple);
    long i = index(tuple.data());
    if (i < 0) {
      if (mod(v, N_) != 0) fail(ErrorKind::validation, "normalized cochain must vanish on tuples containing the identity");
      return;
    }
    values_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(mod(v, N_));
  }
  void set_index(std::size_t i, std::int64_t v) { values_[i] = static_cast<std::int32_t>(mod(v, N_)); }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int32_t v) { return v == 0; });
  }

  friend TorsionCocycle operator+(TorsionCocycle x, const TorsionCocycle& y) {
    x.require_same(y);
    for (std::size_t i = 0; i < x.values_.size(); ++i)
      x.values_[i] = static_cast<std::int32_t>(mod(x.values_[i] + y.values_[i], x.N_));
    return x;
  }
  friend TorsionCocycle operator-(TorsionCocycle x, const TorsionCocycle& y) {
    x.require_same(y);
    for (std::size_t i = 0; i < x.values_.size(); ++i)
      x.values_[i] = static_cast<std::int32_t>(mod(x.values_[i] - y.values_[i], x.N_));
    return x;
  }
  friend TorsionCocycle operator*(std::int64_t s, TorsionCocycle x) {
    for (auto& v : x.values_) v = static_cast<std::int32_t>(mod(s * v, x.N_));
    return x;
  }
  friend bool operator==(const TorsionCocycle& x, const TorsionCocycle& y) {
    return x.degree_ == y.degree_ && x.N_ == y.N_ && x.values_ == y.values_ && *x.group_ == *y.group_;
  }

  /// Same class of values viewed in Z/M for a multiple M of N (v -> v*M/N).
  TorsionCocycle inflate(std::int64_t M) const {
    if (M % N_ != 0) fail(ErrorKind::usage, "inflation target must be a multiple of N");
    TorsionCocycle out(group_, degree_, M);
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = static_cast<std::int32_t>(values_[i] * (M / N_));
    return out;
  }

 private:
  void check_size(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != degree_) fail(ErrorKind::usage, "tuple length differs from cochain degree");
    for (int g : tuple)
      if (g < 0 || g >= group_->order()) fail(ErrorKind::usage, "tuple entry out of range");
  }
  void require_same(const TorsionCocycle& y) const {
    if (degree_ != y.degree_ || N_ != y.N_ || !(*group_ == *y.group_))
      fail(ErrorKind::usage, "cochains live in different spaces");
  }

  GroupPtr group_;
  int degree_ = 0;
  std::int64_t N_ = 1;
  std::vector<std::int32_t> values_;
};

inline TorsionCocycle random_cochain(GroupPtr g, int degree, std::int64_t N, std::mt19937_64& rng) {
  TorsionCocycle c(std::move(g), degree, N);
  std::uniform_int_distribution<std::int64_t> dist(0, N - 1);
  for (std::size_t i = 0; i < c.size(); ++i) c.set_index(i, dist(rng));
  return c;
}

namespace detail {

// Calls f(tuple) for every tuple of non-identity elements of length n, in lexicographic order.
template <class F>
void for_each_tuple(int order, int n, F&& f) {
  if (order < 2 && n > 0) return;
  std::vector<int> t(static_cast<std::size_t>(n), 1);
  while (true) {
    f(t);
    int i = n - 1;
    while (i >= 0 && t[i] == order - 1) t[i--] = 1;
    if (i < 0) return;
    ++t[i];
  }
}

// Coefficient list of (delta c)(g_1..g_{n+1}) as (sign, n-tuple) pairs.
template <class F>
void coboundary_terms(const FiniteGroup& g, const std::vector<int>& t, F&& f) {
  const int n1 = static_cast<int>(t.size());
  const int n = n1 - 1;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) s[j] = t[j + 1];
  f(1, s);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0, k = 0; j < n1; ++j) {
      if (j == i) continue;
      s[k++] = j == i - 1 ? g.mul(t[i - 1], t[i]) : t[j];
    }
    f(i % 2 ? -1 : 1, s);
  }
  for (int j = 0; j < n; ++j) s[j] = t[j];
  f((n + 1) % 2 ? -1 : 1, s);
}

}  // namespace detail

inline TorsionCocycle coboundary(const TorsionCocycle& c) {
  TorsionCocycle out(c.group_ptr(), c.degree() + 1, c.N());
  const FiniteGroup& g = c.group();
  std::size_t idx = 0;
  detail::for_each_tuple(g.order(), c.degree() + 1, [&](const std::vector<int>& t) {
    std::int64_t v = 0;
    detail::coboundary_terms(g, t, [&](int sign, const std::vector<int>& s) { v += sign * c.value(s.data()); });
    out.set_index(idx++, v);
  });
  return out;
}

struct CocycleCheck {
  bool ok = true;
  std::optional<std::vector<int>> witness;  // lexicographically least violating tuple
};

inline CocycleCheck is_cocycle(const TorsionCocycle& c) {
  TorsionCocycle d = coboundary(c);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.values()[i] != 0) return {false, d.tuple(i)};
  return {};
}

/// Integer matrix of delta: C^k -> C^{k+1} on normalized cochains (rows = (k+1)-tuples).
inline ModMatrix coboundary_matrix(const FiniteGroup& g, int k) {
  const int m = g.order() - 1;
  std::int64_t rows = 1, cols = 1;
  for (int i = 0; i < k; ++i) cols *= m;
  rows = cols * m;
  if (rows * cols > kMaxMatrixEntries)
    fail(ErrorKind::resource, "coboundary matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                  " exceeds the limit of " + std::to_string(kMaxMatrixEntries) + " entries");
  ModMatrix a(static_cast<int>(rows), static_cast<int>(cols));
  if (rows == 0 || cols == 0) return a;
  int row = 0;
  detail::for_each_tuple(g.order(), k + 1, [&](const std::vector<int>& t) {
    detail::coboundary_terms(g, t, [&](int sign, const std::vector<int>& s) {
      long col = 0;
      for (int x : s) {
        if (x == 0) return;
        col = col * m + (x - 1);
      }
      a(row, static_cast<int>(col)) += sign;
    });
    ++row;
  });
  return a;
}

// ---------------------------------------------------------------------------
// Cohomology groups

/// Factorization data for H^k(G, Z/N), shared through the cache.
struct CohomologyData {
  GroupPtr group;
  int k = 0;
  std::int64_t N = 1;
  ModDiagonalization upper;          // delta_k, with V and V^-1
  ModDiagonalization lower;          // delta_{k-1}, with U
  std::vector<std::int64_t> kernel_order;  // g_i: y_i ranges over (N/g_i) Z/N
  ModDiagonalization relations;      // presentation of Z^k / B^k, with U and U^-1
  std::vector<std::int64_t> raw_orders;
  InvariantFactorBasis basis;
};

struct CohomologyGroup {
  std::vector<std::int64_t> invariant_factors;  // ascending, each divides the next
  std::vector<TorsionCocycle> representatives;  // one per invariant factor
  std::shared_ptr<const CohomologyData> data;   // null for u1_cohomology

  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto f : invariant_factors) o *= f;
    return o;
  }
};

namespace detail {

inline std::shared_ptr<const CohomologyData> build_cohomology(const GroupPtr& g, int k, std::int64_t N) {
  auto data = std::make_shared<CohomologyData>();
  data->group = g;
  data->k = k;
  data->N = N;
  data->upper = diagonalize_mod(coboundary_matrix(*g, k), N, {.v = true, .v_inv = true});
  data->lower = diagonalize_mod(coboundary_matrix(*g, k - 1), N, {.u = true, .v = true});
  const int n = data->upper.cols;
  data->kernel_order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) data->kernel_order[i] = data->upper.ideal(static_cast<std::size_t>(i));
  // relations: g_i e_i and the z-coordinates of the image of delta_{k-1}
  const ModMatrix lower_matrix = coboundary_matrix(*g, k - 1);
  const int images = lower_matrix.cols;
  ModMatrix rel(n, n + images);
  for (int i = 0; i < n; ++i) rel(i, i) = static_cast<std::int32_t>(data->kernel_order[i] % N);
  for (int j = 0; j < images; ++j) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b[i] = mod(lower_matrix(i, j), N);
    auto y = mat_vec(data->upper.V_inv, b, N);
    for (int i = 0; i < n; ++i) {
      std::int64_t m = N / data->kernel_order[i];
      check_internal(y[i] % m == 0, "image of delta_{k-1} is not closed");
      rel(i, n + j) = static_cast<std::int32_t>(y[i] / m);
    }
  }
  data->relations = diagonalize_mod(rel, N, {.u = true, .u_inv = true});
  data->raw_orders.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) data->raw_orders[i] = data->relations.ideal(static_cast<std::size_t>(i));
  data->basis = invariant_factors(data->raw_orders);
  return data;
}

class CohomologyCache {
 public:
  using Key = std::tuple<std::vector<int>, int, std::int64_t>;

  std::shared_ptr<const CohomologyData> get(const GroupPtr& g, int k, std::int64_t N) {
    Key key{g->table(), k, N};
    {
      std::shared_lock lock(mutex_);
      auto it = store_.find(key);
      if (it != store_.end()) return it->second;
    }
    auto built = build_cohomology(g, k, N);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = store_.emplace(std::move(key), built);
    return it->second;  // first insert wins; concurrent builders agree
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const CohomologyData>> store_;
};

inline CohomologyCache& cohomology_cache() {
  static CohomologyCache cache;
  return cache;
}

inline void check_cohomology_args(int k, std::int64_t N) {
  if (k < 1 || k > 4) fail(ErrorKind::usage, "cohomology degree must be in 1..4");
  if (N < 1 || N > kMaxCoefficientOrder)
    fail(ErrorKind::usage, "coefficient order N must be in 1.." + std::to_string(kMaxCoefficientOrder));
}

}  // namespace detail

/// Raw coordinates of the class of a cocycle: one residue per cyclic summand of the
/// internal presentation. Two cocycles are cohomologous iff their labels agree.
inline std::vector<std::int64_t> class_label(const CohomologyData& data, const TorsionCocycle& c) {
  if (c.degree() != data.k || c.N() != data.N) fail(ErrorKind::usage, "cocycle does not match cohomology data");
  const std::int64_t N = data.N;
  std::vector<std::int64_t> x(c.values().begin(), c.values().end());
  auto y = mat_vec(data.upper.V_inv, x, N);
  std::vector<std::int64_t> z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::int64_t m = N / data.kernel_order[i];
    if (y[i] % m != 0) fail(ErrorKind::validation, "cochain is not closed");
    z[i] = y[i] / m;
  }
  auto w = mat_vec(data.relations.U, z, N);
  std::vector<std::int64_t> label;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (data.raw_orders[i] > 1) label.push_back(w[i] % data.raw_orders[i]);
  return label;
}

/// Membership in the image of delta_{k-1}, solved through the stored diagonalization U D V = diag.
inline bool is_coboundary(const CohomologyData& data, const TorsionCocycle& c) {
  if (c.degree() != data.k || c.N() != data.N) fail(ErrorKind::usage, "cocycle does not match cohomology data");
  const std::int64_t N = data.N;
  std::vector<std::int64_t> x(c.values().begin(), c.values().end());
  auto b = mat_vec(data.lower.U, x, N);
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::int64_t ideal = data.lower.ideal(i);
    if (b[i] % ideal != 0) return false;
  }
  return true;
}

/// A (k-1)-cochain b with delta b = c, when c is exact.
inline std::optional<TorsionCocycle> coboundary_preimage(const CohomologyData& data, const TorsionCocycle& c) {
  if (!is_coboundary(data, c)) return std::nullopt;
  const std::int64_t N = data.N;
  std::vector<std::int64_t> x(c.values().begin(), c.values().end());
  auto b = mat_vec(data.lower.U, x, N);
  std::vector<std::int64_t> y(static_cast<std::size_t>(data.lower.cols), 0);
  for (std::size_t i = 0; i < data.lower.diag.size(); ++i) {
    const std::int64_t g = data.lower.ideal(i);
    if (g == N) continue;
    const std::int64_t n = N / g;
    const std::int64_t unit = mod(data.lower.diag[i] / g, n);
    y[i] = n == 1 ? 0 : mod((b[i] / g) * detail::inverse_mod(unit, n), n);
  }
  auto v = mat_vec(data.lower.V, y, N);
  TorsionCocycle out(data.group, data.k - 1, N);
  for (std::size_t i = 0; i < v.size(); ++i) out.set_index(i, v[i]);
  check_internal(coboundary(out) == c, "coboundary preimage does not reproduce the cocycle");
  return out;
}

inline CohomologyGroup cohomology_group(const GroupPtr& g, int k, std::int64_t N) {
  detail::check_cohomology_args(k, N);
  CohomologyGroup out;
  if (g->order() == 1) return out;
  auto data = detail::cohomology_cache().get(g, k, N);
  out.data = data;
  out.invariant_factors = data->basis.factors;
  const int n = data->upper.cols;
  for (const auto& combo : data->basis.combos) {
    std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
    for (auto [idx, mult] : combo)
      for (int i = 0; i < n; ++i) z[i] = (z[i] + mult * data->relations.U_inv(i, static_cast<int>(idx))) % N;
    std::vector<std::int64_t> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[i] = (N / data->kernel_order[i]) * z[i] % N;
    auto x = mat_vec(data->upper.V, y, N);
    TorsionCocycle rep(g, k, N);
    for (int i = 0; i < n; ++i) rep.set_index(static_cast<std::size_t>(i), x[i]);
    check_internal(is_cocycle(rep).ok, "cohomology representative is not closed");
    check_internal(!is_coboundary(*data, rep), "cohomology representative is exact");
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

inline CohomologyGroup cohomology_group(const FiniteGroup& g, int k, std::int64_t N) {
  return cohomology_group(std::make_shared<const FiniteGroup>(g), k, N);
}

inline bool is_coboundary(const TorsionCocycle& c) {
  if (c.group().order() == 1 || c.degree() == 0) return c.is_zero();
  detail::check_cohomology_args(c.degree(), c.N());
  return is_coboundary(*detail::cohomology_cache().get(c.group_ptr(), c.degree(), c.N()), c);
}

/// H^k(G, U(1)) = H^{k+1}(G, Z): torsion invariant factors of the integer delta_k,
/// read off from a diagonalization modulo |G|^2 (all torsion divides |G|).
inline CohomologyGroup u1_cohomology(const FiniteGroup& g, int k) {
  if (k < 1 || k > 3) fail(ErrorKind::usage, "u1_cohomology supports degrees 1..3");
  CohomologyGroup out;
  if (g.order() == 1) return out;
  const std::int64_t M = static_cast<std::int64_t>(g.order()) * g.order();
  auto d = diagonalize_mod(coboundary_matrix(g, k), M);
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < d.diag.size(); ++i) {
    std::int64_t f = d.ideal(i);
    if (f > 1 && f < M) orders.push_back(f);
  }
  out.invariant_factors = invariant_factors(orders).factors;
  return out;
}

// ---------------------------------------------------------------------------
// Transgression and projective representations

struct Transgression {
  Subgroup centralizer;
  TorsionCocycle cocycle;  // degree 2 on centralizer.group
};

inline Transgression transgress(const TorsionCocycle& omega, int g) {
  if (omega.degree() != 3) fail(ErrorKind::usage, "transgression needs a 3-cocycle");
  if (auto chk = is_cocycle(omega); !chk.ok) fail(ErrorKind::validation, "omega is not closed");
  const FiniteGroup& G = omega.group();
  if (g < 0 || g >= G.order()) fail(ErrorKind::usage, "element out of range");
  Subgroup z = make_subgroup(G, centralizer(G, g), G.name() + "_C(" + G.element_name(g) + ")");
  auto zg = std::make_shared<const FiniteGroup>(z.group);
  TorsionCocycle tau(zg, 2, omega.N());
  const int n = z.group.order();
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      int h = z.to_parent[a], k = z.to_parent[b];
      int hk = G.mul(h, k);
      std::int64_t v = omega(g, h, k) - omega(h, G.mul(G.mul(G.inv(h), g), h), k) +
                       omega(h, k, G.mul(G.mul(G.inv(hk), g), hk));
      tau.set({a, b}, v);
    }
  if (auto chk = is_cocycle(tau); !chk.ok) fail(ErrorKind::internal, "transgression is not closed");
  return {std::move(z), std::move(tau)};
}

inline std::vector<std::int64_t> full_table(const TorsionCocycle& alpha) {
  const int n = alpha.group().order();
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = alpha(a, b);
  return t;
}

inline ProjectiveIrreps projective_irreps(const TorsionCocycle& alpha) {
  if (alpha.degree() != 2) fail(ErrorKind::usage, "projective representations need a 2-cocycle");
  if (auto chk = is_cocycle(alpha); !chk.ok) {
    std::string w;
    for (int x : *chk.witness) w += (w.empty() ? "" : ",") + alpha.group().element_name(x);
    fail(ErrorKind::validation, "alpha is not a 2-cocycle; violated at (" + w + ")");
  }
  return projective_irreps_from_table(alpha.group(), full_table(alpha), alpha.N());
}

/// Dimensions of the irreducible alpha-projective representations, sorted ascending.
inline std::vector<int> projective_irrep_dims(const TorsionCocycle& alpha) {
  auto dims = projective_irreps(alpha).dims;
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace gxcat
