#pragma once

// Graded fusion rings with group actions.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "gxcat/errors.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/numbers.hpp"
#include "gxcat/parallel.hpp"
#include "gxcat/report.hpp"

namespace gxcat {

inline constexpr int kMaxRingSize = 256;

/// Simple objects, fusion coefficients (dense, N(i,j,k) = N_{ij}^k), duals and a grading.
struct GradedFusionRing {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  std::vector<int> coeffs;  // size n^3
  GroupPtr group = std::make_shared<const FiniteGroup>();
  std::vector<int> grading;                  // label -> element of group
  std::optional<std::vector<Real>> dims;     // declared dimensions, when supplied
  std::optional<std::vector<Turn>> twists;   // topological spins, when supplied

  int size() const { return static_cast<int>(labels.size()); }
  int N(int i, int j, int k) const {
    const std::size_t n = labels.size();
    return coeffs[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  int& N(int i, int j, int k) {
    const std::size_t n = labels.size();
    return coeffs[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  std::optional<int> find(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == label) return i;
    return std::nullopt;
  }
  int index(const std::string& label) const {
    auto i = find(label);
    if (!i) fail(ErrorKind::usage, "unknown label '" + label + "'");
    return *i;
  }
  /// Summands of i (x) j with multiplicities.
  std::vector<std::pair<int, int>> fuse(int i, int j) const {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < size(); ++k)
      if (int m = N(i, j, k)) out.push_back({k, m});
    return out;
  }
};

/// Builds a ring from sparse fusion data (i, j, k, multiplicity). Duals are inferred from N_{ij}^unit
/// when `dual` is empty. The grading defaults to trivial.
inline GradedFusionRing make_ring(std::vector<std::string> labels, const std::string& unit,
                                  const std::vector<std::tuple<std::string, std::string, std::string, int>>& rules,
                                  std::vector<std::string> dual = {}) {
  GradedFusionRing r;
  const int n = static_cast<int>(labels.size());
  if (n < 1) fail(ErrorKind::validation, "ring needs at least one simple");
  if (n > kMaxRingSize) fail(ErrorKind::resource, "ring has more than " + std::to_string(kMaxRingSize) + " simples");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    fail(ErrorKind::validation, "duplicate simple labels");
  r.labels = std::move(labels);
  r.unit = r.index(unit);
  r.coeffs.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (const auto& [a, b, c, m] : rules) r.N(r.index(a), r.index(b), r.index(c)) = m;
  r.dual.assign(static_cast<std::size_t>(n), -1);
  if (dual.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r.N(i, j, r.unit) > 0 && r.dual[i] < 0) r.dual[i] = j;
    for (int i = 0; i < n; ++i)
      if (r.dual[i] < 0) fail(ErrorKind::validation, "simple '" + r.labels[i] + "' has no dual");
  } else {
    if (static_cast<int>(dual.size()) != n) fail(ErrorKind::validation, "dual table has wrong size");
    for (int i = 0; i < n; ++i) r.dual[i] = r.index(dual[i]);
  }
  r.grading.assign(static_cast<std::size_t>(n), 0);
  return r;
}

/// Pointed ring of a finite group (fusion = group law), trivially graded unless `graded`.
inline GradedFusionRing pointed_ring(const FiniteGroup& g, bool graded = false) {
  std::vector<std::tuple<std::string, std::string, std::string, int>> rules;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) rules.emplace_back(g.element_name(a), g.element_name(b), g.element_name(g.mul(a, b)), 1);
  auto r = make_ring(g.element_names(), g.element_name(0), rules);
  if (graded) {
    r.group = std::make_shared<const FiniteGroup>(g);
    std::iota(r.grading.begin(), r.grading.end(), 0);
  }
  r.dims = std::vector<Real>(static_cast<std::size_t>(g.order()), Real(1));
  return r;
}

// ---------------------------------------------------------------------------
// Perron-Frobenius dimensions

namespace detail {

inline Eigen::MatrixXd fusion_matrix(const GradedFusionRing& r, int i) {
  const int n = r.size();
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = r.N(i, j, k);
  return m;
}

// Candidate exact forms of an algebraic integer x that is an eigenvalue of the integer matrix m.
inline std::vector<QuadraticNumber> quadratic_candidates(double x, const Eigen::MatrixXd& m) {
  std::vector<QuadraticNumber> out;
  double r = std::round(x);
  if (std::abs(x - r) < 1e-9) {
    out.emplace_back(static_cast<std::int64_t>(r));
    return out;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    auto y = es.eigenvalues()(k);
    if (std::abs(y.imag()) > 1e-8 || std::abs(y.real() - x) < 1e-8) continue;
    double t = x + y.real(), p = x * y.real();
    double tr = std::round(t), pr = std::round(p);
    if (std::abs(t - tr) > 1e-7 || std::abs(p - pr) > 1e-7) continue;
    auto ti = static_cast<std::int64_t>(tr), pi = static_cast<std::int64_t>(pr);
    std::int64_t disc = ti * ti - 4 * pi;
    if (disc <= 0) continue;
    QuadraticNumber q(ti, x > y.real() ? 1 : -1, disc, 2);
    if (std::abs(q.to_double() - x) < 1e-8) out.push_back(q);
  }
  return out;
}

// Exact check of N_i d = d_i d for every i.
inline bool is_exact_eigenvector(const GradedFusionRing& r, const std::vector<QuadraticNumber>& d) {
  const int n = r.size();
  try {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QuadraticNumber s(0);
        for (int k = 0; k < n; ++k)
          if (int c = r.N(i, j, k)) s = s + QuadraticNumber(c) * d[k];
        if (!(s == d[i] * d[j])) return false;
      }
  } catch (const std::domain_error&) {
    return false;
  } catch (const std::overflow_error&) {
    return false;
  }
  return true;
}

}  // namespace detail

/// Perron-Frobenius dimensions normalized to d_unit = 1; exact when all lie in one quadratic field.
inline std::vector<Real> pf_dims(const GradedFusionRing& r) {
  const int n = r.size();
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) total += detail::fusion_matrix(r, i);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (total(j, k) <= 0) fail(ErrorKind::validation, "total fusion matrix is not positive; ring is invalid or reducible");
  // power iteration on a positive matrix converges to the PF vector
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double lambda = 0.0;
  for (int it = 0; it < 100000; ++it) {
    Eigen::VectorXd w = total * v;
    double nl = w.norm() / v.norm();
    w /= w.norm();
    double diff = (w - v).norm();
    v = w;
    if (std::abs(nl - lambda) < 1e-15 * nl && diff < 1e-14) break;
    lambda = nl;
  }
  v /= v(r.unit);
  Eigen::VectorXd residual = total * v - (total * v)(r.unit) * v;
  const double err = std::max(1e-13, 10.0 * residual.lpNorm<Eigen::Infinity>() / std::max(1.0, lambda));

  // exact recognition
  std::map<long long, std::vector<QuadraticNumber>> cache;
  std::vector<std::vector<QuadraticNumber>> candidates(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long long key = std::llround(v(i) * 1e8);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::quadratic_candidates(v(i), detail::fusion_matrix(r, i))).first;
    candidates[i] = it->second;
  }
  bool exact = std::all_of(candidates.begin(), candidates.end(), [](const auto& c) { return !c.empty(); });
  if (exact) {
    std::vector<QuadraticNumber> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[i] = candidates[i].front();
    if (detail::is_exact_eigenvector(r, d)) {
      std::vector<Real> out;
      for (const auto& q : d) out.emplace_back(q);
      return out;
    }
  }
  std::vector<Real> out;
  for (int i = 0; i < n; ++i) out.push_back(Real::approx(v(i), err * std::max(1.0, v(i))));
  return out;
}

/// Declared dimensions when present, else Perron-Frobenius dimensions.
inline std::vector<Real> dims_of(const GradedFusionRing& r) { return r.dims ? *r.dims : pf_dims(r); }

inline Real global_dim(const std::vector<Real>& d) {
  Real s(0);
  for (const auto& x : d) s += x * x;
  return s;
}

inline Real global_dim(const GradedFusionRing& r) { return global_dim(dims_of(r)); }

// ---------------------------------------------------------------------------
// Validation

inline Report validate_ring(const GradedFusionRing& r) {
  Report rep;
  const int n = r.size();
  auto L = [&](int i) { return r.labels[i]; };
  if (n < 1) {
    rep.add("shape", "ring has no simples");
    return rep;
  }
  if (r.coeffs.size() != static_cast<std::size_t>(n) * n * n || r.dual.size() != static_cast<std::size_t>(n) ||
      r.grading.size() != static_cast<std::size_t>(n) || r.unit < 0 || r.unit >= n) {
    rep.add("shape", "inconsistent table sizes");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (r.dual[i] < 0 || r.dual[i] >= n || r.dual[r.dual[i]] != i) {
      rep.add("dual", "dual is not an involution", {L(i)});
      return rep;
    }
    if (r.grading[i] < 0 || r.grading[i] >= r.group->order()) {
      rep.add("grading", "degree out of range", {L(i)});
      return rep;
    }
  }
  for (int v : r.coeffs)
    if (v < 0) {
      rep.add("nonnegative", "negative fusion coefficient");
      break;
    }
  // unit
  for (int j = 0; j < n && !rep.has("unit"); ++j)
    for (int k = 0; k < n; ++k) {
      int want = j == k ? 1 : 0;
      if (r.N(r.unit, j, k) != want || r.N(j, r.unit, k) != want) {
        rep.add("unit", "unit does not act as identity", {L(j), L(k)});
        break;
      }
    }
  // duality: N_{ij}^1 = delta_{j, dual i}
  for (int i = 0; i < n && !rep.has("duality"); ++i)
    for (int j = 0; j < n; ++j)
      if (r.N(i, j, r.unit) != (j == r.dual[i] ? 1 : 0)) {
        rep.add("duality", "N_{ij}^1 differs from delta_{j,dual(i)}", {L(i), L(j)});
        break;
      }
  // associativity, one slab per i
  std::vector<std::optional<std::vector<int>>> bad(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    std::vector<long> lhs(static_cast<std::size_t>(n) * n * n, 0), rhs(lhs.size(), 0);
    auto at = [n](int j, int k, int l) { return (static_cast<std::size_t>(j) * n + k) * n + l; };
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        if (int c = r.N(i, j, m))
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              if (int e = r.N(m, k, l)) lhs[at(j, k, l)] += static_cast<long>(c) * e;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
          if (int c = r.N(j, k, m))
            for (int l = 0; l < n; ++l)
              if (int e = r.N(i, m, l)) rhs[at(j, k, l)] += static_cast<long>(c) * e;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (lhs[at(j, k, l)] != rhs[at(j, k, l)]) {
            bad[ii] = std::vector<int>{i, j, k, l};
            return;
          }
  });
  for (const auto& b : bad)
    if (b) {
      rep.add("associativity", "(i j) k and i (j k) differ in the multiplicity of l",
              {L((*b)[0]), L((*b)[1]), L((*b)[2]), L((*b)[3])});
      break;
    }
  // grading multiplicativity
  const FiniteGroup& G = *r.group;
  for (int i = 0; i < n && !rep.has("grading"); ++i)
    for (int j = 0; j < n && !rep.has("grading"); ++j)
      for (int k = 0; k < n; ++k)
        if (r.N(i, j, k) && r.grading[k] != G.mul(r.grading[i], r.grading[j])) {
          rep.add("grading", "deg(k) != deg(i) deg(j) for a summand k of i(x)j", {L(i), L(j), L(k)});
          break;
        }
  // dimensions
  if (rep.ok() || r.dims) {
    std::vector<Real> d;
    try {
      d = dims_of(r);
    } catch (const Error& e) {
      rep.add("dimensions", e.what());
      return rep;
    }
    if (static_cast<int>(d.size()) != n) {
      rep.add("dimensions", "declared dimension list has wrong size");
      return rep;
    }
    for (int i = 0; i < n; ++i)
      if (d[i].to_double() < 1.0 - kTolerance - d[i].error_bound()) {
        rep.add("dimensions", "dimension below 1", {L(i)});
        break;
      }
    for (int i = 0; i < n && !rep.has("dimension-relation"); ++i)
      for (int j = 0; j < n; ++j) {
        Real s(0);
        for (int k = 0; k < n; ++k)
          if (int c = r.N(i, j, k)) s += Real(c) * d[k];
        if (!approx_equal(s, d[i] * d[j])) {
          rep.add("dimension-relation", "d_i d_j != sum_k N_ij^k d_k", {L(i), L(j)});
          break;
        }
      }
  }
  if (r.twists && static_cast<int>(r.twists->size()) != n) rep.add("twists", "twist list has wrong size");
  return rep;
}

// ---------------------------------------------------------------------------
// Sectors

struct SectorReport {
  std::vector<Real> sector;  // per group element
  bool full_spectrum = false;
  bool homogeneous = false;
  Real global;
};

inline SectorReport sector_dims(const GradedFusionRing& r) {
  SectorReport s;
  const auto d = dims_of(r);
  s.sector.assign(static_cast<std::size_t>(r.group->order()), Real(0));
  std::vector<bool> seen(static_cast<std::size_t>(r.group->order()), false);
  for (int i = 0; i < r.size(); ++i) {
    s.sector[r.grading[i]] += d[i] * d[i];
    seen[r.grading[i]] = true;
  }
  s.full_spectrum = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  s.homogeneous = true;
  for (const auto& x : s.sector) s.homogeneous = s.homogeneous && approx_equal(x, s.sector[0]);
  s.global = Real(0);
  for (const auto& x : s.sector) s.global += x;
  return s;
}

// ---------------------------------------------------------------------------
// Group actions

/// Optional description of an action that permutes tensor slots of a product ring;
/// lets callers evaluate traces on multiplicity spaces.
struct SlotModel {
  std::vector<int> base_coeffs;  // base ring N, dense
  int base_size = 0;
  int slots = 0;
  std::vector<std::vector<int>> tuples;      // label -> base indices
  std::vector<std::vector<int>> slot_perms;  // per group element
};

struct RingGAction {
  GroupPtr group = std::make_shared<const FiniteGroup>();
  std::vector<std::vector<int>> perms;  // per group element, a permutation of labels
  std::optional<SlotModel> slots;

  int apply(int g, int label) const { return perms[g][label]; }
};

inline RingGAction trivial_action(const GradedFusionRing& r, GroupPtr g) {
  RingGAction a;
  a.group = std::move(g);
  std::vector<int> id(static_cast<std::size_t>(r.size()));
  std::iota(id.begin(), id.end(), 0);
  a.perms.assign(static_cast<std::size_t>(a.group->order()), id);
  return a;
}

inline Report validate_action(const GradedFusionRing& r, const RingGAction& a) {
  Report rep;
  const int n = r.size();
  const FiniteGroup& G = *a.group;
  auto L = [&](int i) { return r.labels[i]; };
  if (static_cast<int>(a.perms.size()) != G.order()) {
    rep.add("shape", "one permutation per group element is required");
    return rep;
  }
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> s = a.perms[g];
    std::sort(s.begin(), s.end());
    bool perm = static_cast<int>(s.size()) == n;
    for (int i = 0; perm && i < n; ++i) perm = s[i] == i;
    if (!perm) {
      rep.add("permutation", "not a permutation of the labels", {G.element_name(g)});
      return rep;
    }
  }
  for (int i = 0; i < n; ++i)
    if (a.perms[0][i] != i) {
      rep.add("homomorphism", "identity element acts nontrivially", {L(i)});
      break;
    }
  for (int g = 0; g < G.order() && !rep.has("homomorphism"); ++g)
    for (int h = 0; h < G.order() && !rep.has("homomorphism"); ++h)
      for (int i = 0; i < n; ++i)
        if (a.perms[g][a.perms[h][i]] != a.perms[G.mul(g, h)][i]) {
          rep.add("homomorphism", "pi_g pi_h != pi_gh", {G.element_name(g), G.element_name(h), L(i)});
          break;
        }
  for (int g = 0; g < G.order() && !rep.has("fusion"); ++g) {
    const auto& p = a.perms[g];
    if (p[r.unit] != r.unit) {
      rep.add("fusion", "unit not fixed", {G.element_name(g)});
      break;
    }
    for (int i = 0; i < n && !rep.has("fusion"); ++i) {
      if (p[r.dual[i]] != r.dual[p[i]]) {
        rep.add("fusion", "duals not intertwined", {G.element_name(g), L(i)});
        break;
      }
      for (int j = 0; j < n && !rep.has("fusion"); ++j)
        for (int k = 0; k < n; ++k)
          if (r.N(p[i], p[j], p[k]) != r.N(i, j, k)) {
            rep.add("fusion", "N_{pi(i) pi(j)}^{pi(k)} != N_{ij}^k", {G.element_name(g), L(i), L(j), L(k)});
            break;
          }
    }
  }
  const bool trivially_graded = r.group->order() == 1;
  if (!trivially_graded && !(*r.group == G)) {
    rep.add("grading", "action group differs from the grading group");
  } else if (!trivially_graded) {
    for (int g = 0; g < G.order() && !rep.has("grading"); ++g)
      for (int i = 0; i < n; ++i)
        if (r.grading[a.perms[g][i]] != G.conj(g, r.grading[i])) {
          rep.add("grading", "deg(pi_g(i)) != g deg(i) g^-1", {G.element_name(g), L(i)});
          break;
        }
  }
  if (r.twists)
    for (int g = 0; g < G.order() && !rep.has("twists"); ++g)
      for (int i = 0; i < n; ++i)
        if (!((*r.twists)[a.perms[g][i]] == (*r.twists)[i])) {
          rep.add("twists", "action does not preserve twists", {G.element_name(g), L(i)});
          break;
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor powers

/// n-fold tensor power of a trivially graded ring, with G acting by permuting slots.
inline std::pair<GradedFusionRing, RingGAction> tensor_power(const GradedFusionRing& b, int n, const PermutationGroup& pg) {
  if (b.group->order() != 1) fail(ErrorKind::validation, "tensor_power needs a trivially graded ring");
  if (n < 1 || n > 4) fail(ErrorKind::usage, "tensor power must be between 1 and 4");
  if (pg.degree != n) fail(ErrorKind::validation, "permutation group acts on the wrong number of slots");
  // faithful homomorphism into S_n
  for (int g = 0; g < pg.group.order(); ++g)
    for (int h = 0; h < pg.group.order(); ++h)
      if (detail::compose(pg.perms[g], pg.perms[h]) != pg.perms[pg.group.mul(g, h)])
        fail(ErrorKind::validation, "slot permutations do not form a homomorphism");
  for (int g = 1; g < pg.group.order(); ++g)
    if (pg.perms[g] == pg.perms[0]) fail(ErrorKind::validation, "slot permutation embedding is not faithful");
  const int m = b.size();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  if (total > kMaxRingSize) fail(ErrorKind::resource, "tensor power has more than " + std::to_string(kMaxRingSize) + " simples");
  const int t = static_cast<int>(total);
  auto digits = [&](int x) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int s = n; s-- > 0;) {
      d[s] = x % m;
      x /= m;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int x = 0;
    for (int s = 0; s < n; ++s) x = x * m + d[s];
    return x;
  };
  GradedFusionRing r;
  SlotModel model;
  model.base_coeffs = b.coeffs;
  model.base_size = m;
  model.slots = n;
  model.slot_perms = pg.perms;
  for (int x = 0; x < t; ++x) {
    auto d = digits(x);
    std::string label = "(";
    for (int s = 0; s < n; ++s) label += (s ? "," : "") + b.labels[d[s]];
    r.labels.push_back(label + ")");
    model.tuples.push_back(d);
  }
  r.unit = index(std::vector<int>(static_cast<std::size_t>(n), b.unit));
  r.dual.resize(static_cast<std::size_t>(t));
  r.coeffs.assign(static_cast<std::size_t>(t) * t * t, 0);
  for (int x = 0; x < t; ++x) {
    auto dx = model.tuples[x];
    std::vector<int> dd(dx.size());
    for (int s = 0; s < n; ++s) dd[s] = b.dual[dx[s]];
    r.dual[x] = index(dd);
    for (int y = 0; y < t; ++y) {
      const auto& dy = model.tuples[y];
      for (int z = 0; z < t; ++z) {
        const auto& dz = model.tuples[z];
        int c = 1;
        for (int s = 0; s < n && c; ++s) c *= b.N(dx[s], dy[s], dz[s]);
        if (c) r.N(x, y, z) = c;
      }
    }
  }
  r.grading.assign(static_cast<std::size_t>(t), 0);
  const auto bd = dims_of(b);
  std::vector<Real> dims;
  for (int x = 0; x < t; ++x) {
    Real p(1);
    for (int s = 0; s < n; ++s) p *= bd[model.tuples[x][s]];
    dims.push_back(p);
  }
  r.dims = dims;
  if (b.twists) {
    std::vector<Turn> tw;
    for (int x = 0; x < t; ++x) {
      Turn s;
      for (int k = 0; k < n; ++k) s = s + (*b.twists)[model.tuples[x][k]];
      tw.push_back(s);
    }
    r.twists = tw;
  }
  RingGAction a;
  a.group = std::make_shared<const FiniteGroup>(pg.group);
  for (int g = 0; g < pg.group.order(); ++g) {
    std::vector<int> p(static_cast<std::size_t>(t));
    for (int x = 0; x < t; ++x) {
      std::vector<int> y(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) y[pg.perms[g][s]] = model.tuples[x][s];
      p[x] = index(y);
    }
    a.perms.push_back(std::move(p));
  }
  a.slots = std::move(model);
  return {std::move(r), std::move(a)};
}

// ---------------------------------------------------------------------------
// Obstruction and Picard group

/// The least degree-zero label not fixed by pi_g, if any.
inline std::optional<int> invertible_sector_obstruction(const GradedFusionRing& r, const RingGAction& a, int g) {
  if (g < 0 || g >= a.group->order()) fail(ErrorKind::usage, "group element out of range");
  for (int i = 0; i < r.size(); ++i)
    if (r.grading[i] == 0 && a.perms[g][i] != i) return i;
  return std::nullopt;
}

struct PicardGroup {
  std::vector<int> labels;        // invertible labels in index order
  std::vector<int> table;         // positions into `labels`, size k*k
  int size() const { return static_cast<int>(labels.size()); }
};

/// Invertible simples, decided on integers: X (x) dual(X) = 1 with a single summand.
inline PicardGroup picard(const GradedFusionRing& r) {
  PicardGroup p;
  for (int i = 0; i < r.size(); ++i) {
    int total = 0;
    for (int k = 0; k < r.size(); ++k) total += r.N(i, r.dual[i], k);
    if (total == 1 && r.N(i, r.dual[i], r.unit) == 1) p.labels.push_back(i);
  }
  const int k = p.size();
  p.table.assign(static_cast<std::size_t>(k) * k, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto f = r.fuse(p.labels[a], p.labels[b]);
      check_internal(f.size() == 1 && f[0].second == 1, "product of invertibles is not simple");
      auto it = std::find(p.labels.begin(), p.labels.end(), f[0].first);
      check_internal(it != p.labels.end(), "product of invertibles is not invertible");
      p.table[static_cast<std::size_t>(a) * k + b] = static_cast<int>(it - p.labels.begin());
    }
  return p;
}

// ---------------------------------------------------------------------------
// Rep(G)

/// Representation ring of G from its character table; labels "triv", "chi1", ...
inline GradedFusionRing rep_ring(const FiniteGroup& g, const CharacterTable& ct) {
  const int n = static_cast<int>(ct.dims.size());
  const auto& cd = ct.conj;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "triv" : "chi" + std::to_string(i));
  GradedFusionRing r;
  r.labels = labels;
  r.unit = 0;
  r.coeffs.assign(static_cast<std::size_t>(n) * n * n, 0);
  r.dual.assign(static_cast<std::size_t>(n), -1);
  auto inner = [&](auto f) {
    std::complex<double> s = 0;
    for (std::size_t l = 0; l < cd.classes.size(); ++l) s += static_cast<double>(cd.classes[l].size()) * f(l);
    return s / static_cast<double>(g.order());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        auto v = inner([&](std::size_t l) { return ct.values[i][l] * ct.values[j][l] * std::conj(ct.values[k][l]); });
        long m = std::lround(v.real());
        check_internal(std::abs(v - std::complex<double>(static_cast<double>(m), 0)) < 1e-6, "non-integral multiplicity");
        r.N(i, j, k) = static_cast<int>(m);
      }
      if (r.N(i, j, 0) == 1) r.dual[i] = j;
    }
  r.grading.assign(static_cast<std::size_t>(n), 0);
  std::vector<Real> dims;
  for (int d : ct.dims) dims.emplace_back(d);
  r.dims = dims;
  r.twists = std::vector<Turn>(static_cast<std::size_t>(n));
  return r;
}

inline GradedFusionRing rep_ring(const FiniteGroup& g) { return rep_ring(g, character_table(g)); }

}  // namespace gxcat
