#pragma once

// Equivariantization and de-equivariantization (crossed product by Rep(G)) at ring level.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gxcat/cohomology.hpp"
#include "gxcat/errors.hpp"
#include "gxcat/fusion.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/numbers.hpp"

namespace gxcat {

// ---------------------------------------------------------------------------
// Equivariantization

struct EquivariantSimple {
  std::string label;
  std::vector<int> orbit;  // input labels, sorted; orbit[0] is the representative
  Subgroup stabilizer;     // of orbit[0]
  std::string cocycle_class;
  int irrep = 0;           // index among the projective irreps of the stabilizer
  int irrep_dim = 1;
  Real dim;                // |orbit| * d(rep) * irrep_dim
  std::vector<std::complex<double>> character;  // on stabilizer elements (local indices)
};

struct EquivariantizationResult {
  std::vector<EquivariantSimple> simples;
  Real global_dim;
  bool assumed_trivial = true;  // some stabilizer cocycle was not supplied
};

/// Orbits of the action, each listed from its least label.
inline std::vector<std::vector<int>> orbits(const RingGAction& a, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<int> o;
    for (int g = 0; g < a.group->order(); ++g) o.insert(a.apply(g, x));
    for (int y : o) seen[y] = true;
    out.emplace_back(o.begin(), o.end());
  }
  return out;
}

/// `cocycles` maps an orbit representative (least label) to a 2-cocycle on its stabilizer.
inline EquivariantizationResult equivariantize(const GradedFusionRing& r, const RingGAction& a,
                                               const std::map<int, TorsionCocycle>& cocycles = {}) {
  if (r.group->order() != 1) fail(ErrorKind::validation, "equivariantize needs a trivially graded ring");
  if (auto rep = validate_action(r, a); !rep.ok())
    fail(ErrorKind::validation, "invalid action: " + rep.failures[0].check + ": " + rep.failures[0].detail);
  const FiniteGroup& G = *a.group;
  const auto d = dims_of(r);
  EquivariantizationResult out;
  bool any_default = false;
  for (const auto& orbit : orbits(a, r.size())) {
    const int x0 = orbit[0];
    std::vector<int> stab;
    for (int g = 0; g < G.order(); ++g)
      if (a.apply(g, x0) == x0) stab.push_back(g);
    Subgroup H = make_subgroup(G, stab);
    ProjectiveIrreps irreps;
    std::string cls;
    auto it = cocycles.find(x0);
    if (it != cocycles.end()) {
      if (!(it->second.group() == H.group))
        fail(ErrorKind::validation, "cocycle for orbit of '" + r.labels[x0] + "' is not on its stabilizer");
      irreps = projective_irreps(it->second);
      cls = H.group.order() == 1 || is_coboundary(it->second) ? "trivial" : "supplied";
    } else {
      std::vector<std::int64_t> zero(static_cast<std::size_t>(H.group.order()) * H.group.order(), 0);
      irreps = projective_irreps_from_table(H.group, zero, 1);
      cls = "assumed-trivial";
      any_default = any_default || H.group.order() > 1;
    }
    long sum = 0;
    for (std::size_t k = 0; k < irreps.dims.size(); ++k) {
      EquivariantSimple s;
      s.orbit = orbit;
      s.stabilizer = H;
      s.cocycle_class = cls;
      s.irrep = static_cast<int>(k);
      s.irrep_dim = irreps.dims[k];
      s.dim = Real(static_cast<std::int64_t>(orbit.size()) * irreps.dims[k]) * d[x0];
      s.character = irreps.characters[k];
      s.label = "[" + r.labels[x0] + "]" + (irreps.dims.size() > 1 ? ":" + std::to_string(k) : "");
      sum += static_cast<long>(irreps.dims[k]) * irreps.dims[k];
      out.simples.push_back(std::move(s));
    }
    check_internal(sum == H.group.order(), "projective irrep dimensions do not fill the stabilizer");
  }
  out.assumed_trivial = any_default;
  out.global_dim = Real(0);
  for (const auto& s : out.simples) out.global_dim += s.dim * s.dim;
  check_internal(approx_equal(out.global_dim, Real(G.order()) * global_dim(d)),
                 "equivariantization dimension identity failed");
  return out;
}

/// Fusion ring of C^G for trivial stabilizer cocycles: N = dim of G-invariants in
/// Hom(X (x) Y, Z), computed by averaging traces. Traces on multiplicity spaces use the
/// slot model when present; otherwise G is taken to act trivially on them.
struct EquivariantRing {
  GradedFusionRing ring;
  EquivariantizationResult simples;
  std::vector<int> rep_embedding;  // irreps of G (character-table order) -> labels of `ring`
};

inline EquivariantRing equivariant_ring(const GradedFusionRing& r, const RingGAction& a) {
  EquivariantRing out;
  out.simples = equivariantize(r, a);
  const auto& S = out.simples.simples;
  const FiniteGroup& G = *a.group;
  const int m = static_cast<int>(S.size());
  const int n = r.size();
  // per simple: for each input label x in the orbit, the chosen h_x with h_x x0 = x
  std::vector<std::vector<int>> transporter(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < m; ++s)
    for (int g = 0; g < G.order(); ++g) {
      int x = a.apply(g, S[s].orbit[0]);
      if (transporter[s][x] < 0) transporter[s][x] = g;
    }
  // chi_x(g) for g fixing x
  auto chi = [&](int s, int x, int g) {
    int h = transporter[s][x];
    int local = S[s].stabilizer.to_local(G.mul(G.mul(G.inv(h), g), h));
    check_internal(local >= 0, "element does not stabilize the orbit point");
    return S[s].character[local];
  };
  auto trace = [&](int g, int x, int y, int z) -> double {
    if (!a.slots) return r.N(x, y, z);
    const auto& sm = *a.slots;
    const auto& p = sm.slot_perms[g];
    std::vector<bool> seen(static_cast<std::size_t>(sm.slots), false);
    double t = 1.0;
    for (int s = 0; s < sm.slots; ++s) {
      if (seen[s]) continue;
      for (int u = s; !seen[u]; u = p[u]) seen[u] = true;
      const auto b = static_cast<std::size_t>(sm.base_size);
      t *= sm.base_coeffs[(sm.tuples[x][s] * b + sm.tuples[y][s]) * b + sm.tuples[z][s]];
    }
    return t;
  };
  GradedFusionRing& R = out.ring;
  for (const auto& s : S) R.labels.push_back(s.label);
  R.coeffs.assign(static_cast<std::size_t>(m) * m * m, 0);
  std::vector<int> triples(static_cast<std::size_t>(m) * m * m, 0);
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        std::complex<double> acc = 0;
        for (int g = 0; g < G.order(); ++g)
          for (int x : S[i].orbit) {
            if (a.apply(g, x) != x) continue;
            for (int y : S[j].orbit) {
              if (a.apply(g, y) != y) continue;
              for (int z : S[k].orbit) {
                if (a.apply(g, z) != z || r.N(x, y, z) == 0) continue;
                acc += trace(g, x, y, z) * std::conj(chi(i, x, g)) * std::conj(chi(j, y, g)) * chi(k, z, g);
              }
            }
          }
        acc /= static_cast<double>(G.order());
        long v = std::lround(acc.real());
        check_internal(std::abs(acc - std::complex<double>(static_cast<double>(v), 0)) < 1e-6 && v >= 0,
                       "non-integral equivariant multiplicity");
        triples[(static_cast<std::size_t>(i) * m + j) * m + k] = static_cast<int>(v);
      }
  });
  R.coeffs = std::move(triples);
  R.unit = -1;
  for (int s = 0; s < m; ++s)
    if (S[s].orbit[0] == r.unit && S[s].irrep == 0) R.unit = s;
  R.dual.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (R.N(i, j, R.unit) == 1) R.dual[i] = j;
  R.grading.assign(static_cast<std::size_t>(m), 0);
  std::vector<Real> dims;
  for (const auto& s : S) dims.push_back(s.dim);
  R.dims = dims;
  if (r.twists) {
    std::vector<Turn> tw;
    for (const auto& s : S) tw.push_back((*r.twists)[s.orbit[0]]);
    R.twists = tw;
  }
  for (int s = 0; s < m; ++s)
    if (S[s].orbit[0] == r.unit) out.rep_embedding.push_back(s);
  if (auto rep = validate_ring(R); !rep.ok())
    fail(ErrorKind::internal, "equivariant ring failed validation: " + rep.failures[0].check);
  return out;
}

// ---------------------------------------------------------------------------
// Crossed product by Rep(G)

struct CrossedComponent {
  std::vector<int> members;  // input labels
  Real budget;               // sum of d^2 over members / |G|
  bool resolved = false;
  int solutions = 0;         // number of Gram factorizations found (capped at 2)
  std::vector<std::vector<int>> multiplicity;  // [member][output simple], when resolved
  std::optional<Real> simple_dim;              // common dimension of the output simples
  std::optional<int> degree;                   // element of G, when twists and abelian G allow it
  std::vector<int> stabilizer;                 // irreps i with s_i (x) rho = rho (abelian G)
};

struct CrossedProductResult {
  std::vector<int> embedding;               // irreps of G -> input labels
  std::vector<std::vector<int>> hom;        // hom_dim(rho, sigma)
  std::vector<int> end_dim;
  std::vector<CrossedComponent> components;
  std::vector<std::string> output_labels;   // resolved output simples
  std::vector<Real> output_dims;
  std::vector<int> output_component;
  std::vector<std::optional<int>> output_degrees;
  Real global_dim;                          // sum of budgets
  bool fully_resolved = false;
  int group_order = 1;
};

namespace detail {

// All multisets of nonnegative integer columns v with sum v v^T = H (up to `cap` solutions).
inline void gram_factorizations(const std::vector<std::vector<int>>& H, int cap,
                                std::vector<std::vector<std::vector<int>>>& sols) {
  const int k = static_cast<int>(H.size());
  std::vector<int> bound(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) bound[i] = static_cast<int>(std::floor(std::sqrt(static_cast<double>(H[i][i])) + 1e-9));
  std::vector<std::vector<int>> cols;
  auto rest = H;
  std::function<void(const std::vector<int>*)> rec = [&](const std::vector<int>* prev) {
    if (static_cast<int>(sols.size()) >= cap) return;
    int row = -1;
    for (int i = 0; i < k && row < 0; ++i)
      if (rest[i][i] > 0) row = i;
    if (row < 0) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (rest[i][j] != 0) return;
      sols.push_back(cols);
      return;
    }
    // the next column covers `row`; columns are emitted in non-increasing lexicographic order
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    std::function<void(int)> build = [&](int i) {
      if (static_cast<int>(sols.size()) >= cap) return;
      if (i == k) {
        if (v[row] == 0) return;
        if (prev && v > *prev) return;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if (rest[a][b] < v[a] * v[b]) return;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) rest[a][b] -= v[a] * v[b];
        cols.push_back(v);
        auto copy = v;
        rec(&copy);
        cols.pop_back();
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) rest[a][b] += v[a] * v[b];
        return;
      }
      if (i < row) {  // rows before `row` are exhausted
        v[i] = 0;
        build(i + 1);
        return;
      }
      for (int x = bound[i]; x >= 0; --x) {
        if (x * x > rest[i][i]) continue;
        bool ok = true;
        for (int a = 0; a < i && ok; ++a) ok = v[a] * x <= rest[a][i];
        if (!ok) continue;
        v[i] = x;
        build(i + 1);
      }
      v[i] = 0;
    };
    build(0);
  };
  rec(nullptr);
}

}  // namespace detail

/// De-equivariantization C -> C x| S for S = image of Rep(G) under `embedding`
/// (irreps in character-table order -> labels of r).
inline CrossedProductResult crossed_product(const GradedFusionRing& r, const std::vector<int>& embedding,
                                            const FiniteGroup& G) {
  const CharacterTable ct = character_table(G);
  const GradedFusionRing rep = rep_ring(G, ct);
  const int q = rep.size();
  const int n = r.size();
  if (static_cast<int>(embedding.size()) != q)
    fail(ErrorKind::validation, "embedding must list one label per irreducible representation");
  const auto d = dims_of(r);
  for (int i = 0; i < q; ++i) {
    int x = embedding[i];
    if (x < 0 || x >= n) fail(ErrorKind::validation, "embedding label out of range");
    if (r.grading[x] != 0) fail(ErrorKind::validation, "embedded label '" + r.labels[x] + "' is not of degree e");
    if (!approx_equal(d[x], Real(ct.dims[i])))
      fail(ErrorKind::validation, "dimension of '" + r.labels[x] + "' differs from the irrep dimension");
    for (int j = 0; j < i; ++j)
      if (embedding[j] == x) fail(ErrorKind::validation, "embedding is not injective");
  }
  if (embedding[0] != r.unit) fail(ErrorKind::validation, "trivial representation must map to the unit");
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int covered = 0;
      for (int k = 0; k < q; ++k) {
        int got = r.N(embedding[i], embedding[j], embedding[k]);
        if (got != rep.N(i, j, k))
          fail(ErrorKind::validation, "fusion of embedded labels differs from Rep(G) at (" + r.labels[embedding[i]] +
                                          "," + r.labels[embedding[j]] + "," + r.labels[embedding[k]] + ")");
        covered += got;
      }
      int total = 0;
      for (int k = 0; k < n; ++k) total += r.N(embedding[i], embedding[j], k);
      if (total != covered) fail(ErrorKind::validation, "embedded labels are not closed under fusion");
    }

  CrossedProductResult out;
  out.embedding = embedding;
  out.group_order = G.order();
  out.hom.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < q; ++i) out.hom[a][b] += ct.dims[i] * r.N(embedding[i], a, b);
  for (int a = 0; a < n; ++a) {
    out.end_dim.push_back(out.hom[a][a]);
    check_internal(out.hom[a][a] >= 1, "end_dim below 1");
  }
  // components: rho ~ sigma iff hom(rho, sigma) > 0
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (comp_of[a] >= 0) continue;
    CrossedComponent c;
    for (int b = 0; b < n; ++b)
      if (out.hom[a][b] > 0) {
        c.members.push_back(b);
        comp_of[b] = static_cast<int>(out.components.size());
      }
    out.components.push_back(std::move(c));
  }
  const bool abelian = G.is_abelian();
  const bool degrees = abelian && r.twists.has_value();
  out.fully_resolved = true;
  out.global_dim = Real(0);
  for (auto& c : out.components) {
    Real sum(0);
    for (int x : c.members) sum += d[x] * d[x];
    c.budget = sum / Real(G.order());
    out.global_dim += c.budget;
    // collapse rows forced to be equal (H_aa = H_bb = H_ab)
    std::vector<int> reps, row_of(c.members.size());
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      int x = c.members[i];
      row_of[i] = -1;
      for (std::size_t t = 0; t < reps.size(); ++t) {
        int y = c.members[reps[t]];
        if (out.hom[x][x] == out.hom[y][y] && out.hom[x][y] == out.hom[x][x]) row_of[i] = static_cast<int>(t);
      }
      if (row_of[i] < 0) {
        row_of[i] = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
      }
    }
    std::vector<std::vector<int>> H(reps.size(), std::vector<int>(reps.size()));
    for (std::size_t s = 0; s < reps.size(); ++s)
      for (std::size_t t = 0; t < reps.size(); ++t) H[s][t] = out.hom[c.members[reps[s]]][c.members[reps[t]]];
    std::vector<std::vector<std::vector<int>>> sols;
    detail::gram_factorizations(H, 2, sols);
    c.solutions = static_cast<int>(sols.size());
    if (abelian) {
      for (int i = 0; i < q; ++i)
        if (r.N(embedding[i], c.members[0], c.members[0]) > 0) c.stabilizer.push_back(i);
    }
    if (degrees) {
      // monodromy of each invertible s_i around rho; matched against the characters of G
      const int x = c.members[0];
      std::vector<Turn> mono;
      for (int i = 0; i < q; ++i) {
        int y = r.fuse(embedding[i], x).front().first;
        mono.push_back((*r.twists)[y] - (*r.twists)[embedding[i]] - (*r.twists)[x]);
      }
      for (int g = 0; g < G.order() && !c.degree; ++g) {
        bool match = true;
        for (int i = 0; i < q && match; ++i) {
          auto want = Turn::recognize(ct.value(i, g), 2 * G.order());
          match = want && *want == mono[i];
        }
        if (match) c.degree = g;
      }
    }
    if (sols.size() != 1) {
      out.fully_resolved = false;
      continue;
    }
    const auto& cols = sols[0];
    c.multiplicity.assign(c.members.size(), std::vector<int>(cols.size()));
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t y = 0; y < cols.size(); ++y) c.multiplicity[i][y] = cols[y][row_of[i]];
    // common dimension d_Y = d_rho / sum_Y n_{rho Y}
    std::optional<Real> dy;
    bool consistent = true;
    for (std::size_t i = 0; i < c.members.size() && consistent; ++i) {
      int total = 0;
      for (int v : c.multiplicity[i]) total += v;
      Real cand = d[c.members[i]] / Real(total);
      if (dy && !approx_equal(*dy, cand)) consistent = false;
      if (!dy) dy = cand;
    }
    if (!consistent) {
      out.fully_resolved = false;
      continue;
    }
    c.resolved = true;
    c.simple_dim = dy;
  }
  for (std::size_t ci = 0; ci < out.components.size(); ++ci) {
    const auto& c = out.components[ci];
    if (!c.resolved) continue;
    for (std::size_t y = 0; y < c.multiplicity[0].size(); ++y) {
      out.output_labels.push_back("[" + r.labels[c.members[0]] + "]" +
                                  (c.multiplicity[0].size() > 1 ? "#" + std::to_string(y) : ""));
      out.output_dims.push_back(*c.simple_dim);
      out.output_component.push_back(static_cast<int>(ci));
      out.output_degrees.push_back(c.degree);
    }
  }
  if (out.fully_resolved) {
    Real check(0);
    for (const auto& x : out.output_dims) check += x * x;
    check_internal(approx_equal(check, out.global_dim), "resolved simples do not exhaust the dimension budget");
  }
  return out;
}

/// Action of an abelian G on the resolved output simples: within a component the simples
/// form one orbit, with stabilizer the annihilator of {i : s_i (x) rho = rho}.
inline RingGAction crossed_product_action(const CrossedProductResult& cp, const FiniteGroup& G) {
  if (!G.is_abelian()) fail(ErrorKind::usage, "the output action is only modeled for abelian G");
  if (!cp.fully_resolved) fail(ErrorKind::validation, "crossed product has unresolved blocks");
  const CharacterTable ct = character_table(G);
  RingGAction a;
  a.group = std::make_shared<const FiniteGroup>(G);
  const int m = static_cast<int>(cp.output_labels.size());
  a.perms.assign(static_cast<std::size_t>(G.order()), std::vector<int>(static_cast<std::size_t>(m)));
  int first = 0;
  for (std::size_t ci = 0; ci < cp.components.size(); ++ci) {
    const auto& c = cp.components[ci];
    const int k = static_cast<int>(c.multiplicity[0].size());
    std::vector<int> annihilator;
    for (int g = 0; g < G.order(); ++g) {
      bool fixes = true;
      for (int i : c.stabilizer) fixes = fixes && detail::close(ct.value(i, g), 1.0);
      if (fixes) annihilator.push_back(g);
    }
    check_internal(static_cast<int>(annihilator.size()) * k == G.order(), "orbit size differs from |G|/|annihilator|");
    // cosets of the annihilator, in order of least element, label the output simples
    std::vector<int> coset_of(static_cast<std::size_t>(G.order()), -1);
    int next = 0;
    for (int g = 0; g < G.order(); ++g) {
      if (coset_of[g] >= 0) continue;
      for (int h : annihilator) coset_of[G.mul(g, h)] = next;
      ++next;
    }
    std::vector<int> coset_rep(static_cast<std::size_t>(k), -1);
    for (int g = G.order(); g-- > 0;) coset_rep[coset_of[g]] = g;
    for (int g = 0; g < G.order(); ++g)
      for (int y = 0; y < k; ++y) a.perms[g][first + y] = first + coset_of[G.mul(g, coset_rep[y])];
    first += k;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Round trip

struct RoundtripReport {
  Real input_global;
  Real crossed_global;
  Real regauged_global;
  bool global_ok = false;
  std::optional<int> input_simples;
  std::optional<int> regauged_simples;  // only for abelian G with a resolved crossed product
  bool count_ok = true;
  bool ok() const { return global_ok && count_ok; }
};

inline RoundtripReport roundtrip_check(const GradedFusionRing& r, const std::vector<int>& embedding, const FiniteGroup& G) {
  RoundtripReport rep;
  rep.input_global = global_dim(r);
  auto cp = crossed_product(r, embedding, G);
  rep.crossed_global = cp.global_dim;
  if (G.is_abelian() && cp.fully_resolved) {
    // equivariantize the output: orbits are components, stabilizers are the annihilators
    auto act = crossed_product_action(cp, G);
    Real total(0);
    int count = 0;
    std::vector<bool> seen(cp.output_labels.size(), false);
    for (std::size_t y = 0; y < cp.output_labels.size(); ++y) {
      if (seen[y]) continue;
      std::set<int> orbit;
      for (int g = 0; g < G.order(); ++g) orbit.insert(act.apply(g, static_cast<int>(y)));
      for (int z : orbit) seen[z] = true;
      const int stab = G.order() / static_cast<int>(orbit.size());
      Real dim = Real(static_cast<std::int64_t>(orbit.size())) * cp.output_dims[y];
      total += Real(stab) * dim * dim;  // stab one-dimensional irreps of an abelian stabilizer
      count += stab;
    }
    rep.regauged_global = total;
    rep.input_simples = r.size();
    rep.regauged_simples = count;
    rep.count_ok = count == r.size();
  } else {
    rep.regauged_global = Real(G.order()) * cp.global_dim;
  }
  rep.global_ok = approx_equal(rep.regauged_global, rep.input_global) &&
                  approx_equal(Real(G.order()) * rep.crossed_global, rep.input_global);
  return rep;
}

// ---------------------------------------------------------------------------
// Permutation orbifold Picard groups

struct PermPicardResult {
  std::vector<std::pair<int, LinearCharacter>> pairs;  // (invertible label of b, character of G)
  int brute_force = 0;  // dim-1 simples of the equivariantized tensor power
};

inline PermPicardResult perm_orbifold_picard(const GradedFusionRing& b, int n, const PermutationGroup& pg) {
  // transitivity
  std::set<int> orbit0;
  for (const auto& p : pg.perms) orbit0.insert(p[0]);
  if (static_cast<int>(orbit0.size()) != n)
    fail(ErrorKind::validation, "the permutation group must act transitively on the tensor slots");
  PermPicardResult out;
  const auto pic = picard(b);
  const auto chars = abelian_characters(pg.group, abelianization_exponent(pg.group));
  for (int x : pic.labels)
    for (const auto& c : chars) out.pairs.push_back({x, c});
  auto [ring, action] = tensor_power(b, n, pg);
  auto eq = equivariantize(ring, action);
  for (const auto& s : eq.simples)
    if (approx_equal(s.dim, Real(1))) ++out.brute_force;
  return out;
}

}  // namespace gxcat
