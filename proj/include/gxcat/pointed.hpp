#pragma once

// Braided crossed G-categories whose simples are all invertible.
//
// Scalars are additive residues mod N. With ^x y = action_{deg x}(y), the crossed
// hexagons used everywhere in this file read
//   b(x, yz) = b(x, y) + b(x, z) + a(^x y, x, z) - a(^x y, ^x z, x) - a(x, y, z)
//   b(xy, z) = b(y, z) + b(x, ^y z) + a(x, y, z) + a(^{xy} z, x, y) - a(x, ^y z, y)
// and a gauge change a -> a + dc moves the braiding by c(^x y, x) - c(x, y).

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gxcat/cohomology.hpp"
#include "gxcat/errors.hpp"
#include "gxcat/fusion.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/parallel.hpp"
#include "gxcat/report.hpp"

namespace gxcat {

struct PointedGXData {
  GroupPtr gamma = std::make_shared<const FiniteGroup>();
  GroupPtr G = std::make_shared<const FiniteGroup>();
  std::vector<int> deg;                  // Gamma -> G
  std::vector<std::vector<int>> action;  // action[g][x]
  std::int64_t N = 1;
  TorsionCocycle assoc;
  std::vector<std::int64_t> braid;  // |Gamma| x |Gamma|, row-major

  int size() const { return gamma->order(); }
  std::int64_t b(int x, int y) const { return braid[static_cast<std::size_t>(x) * size() + y]; }
  std::int64_t& b(int x, int y) { return braid[static_cast<std::size_t>(x) * size() + y]; }
  int left(int x, int y) const { return action[deg[x]][y]; }  // ^x y
};

/// Trivial grading and action; assoc zero; braid zero.
inline PointedGXData pointed_skeleton(GroupPtr gamma, GroupPtr G, std::int64_t N) {
  PointedGXData d;
  const int n = gamma->order();
  d.gamma = gamma;
  d.G = G;
  d.N = N;
  d.deg.assign(static_cast<std::size_t>(n), 0);
  d.action.assign(static_cast<std::size_t>(G->order()), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : d.action) std::iota(row.begin(), row.end(), 0);
  d.assoc = TorsionCocycle(gamma, 3, N);
  d.braid.assign(static_cast<std::size_t>(n) * n, 0);
  return d;
}

namespace detail {

inline std::int64_t hexagon1_defect(const PointedGXData& d, int x, int y, int z) {
  const FiniteGroup& T = *d.gamma;
  const auto& a = d.assoc;
  const int xy = d.left(x, y), xz = d.left(x, z);
  std::int64_t v = d.b(x, T.mul(y, z)) - d.b(x, y) - d.b(x, z) - a(xy, x, z) + a(xy, xz, x) + a(x, y, z);
  return mod(v, d.N);
}

inline std::int64_t hexagon2_defect(const PointedGXData& d, int x, int y, int z) {
  const FiniteGroup& T = *d.gamma;
  const auto& a = d.assoc;
  const int yz = d.left(y, z);
  const int xyz = d.left(T.mul(x, y), z);
  std::int64_t v = d.b(T.mul(x, y), z) - d.b(y, z) - d.b(x, yz) - a(x, y, z) - a(xyz, x, y) + a(x, yz, y);
  return mod(v, d.N);
}

inline bool hexagons_hold(const PointedGXData& d) {
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (hexagon1_defect(d, x, y, z) != 0 || hexagon2_defect(d, x, y, z) != 0) return false;
  return true;
}

inline std::vector<std::string> names(const FiniteGroup& g, std::initializer_list<int> xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(g.element_name(x));
  return out;
}

// Braiding shift induced by the 2-cochain c under a -> a + dc.
inline std::vector<std::int64_t> gauge_shift(const PointedGXData& d, const TorsionCocycle& c) {
  const int n = d.size();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[static_cast<std::size_t>(x) * n + y] = mod(c(d.left(x, y), x) - c(x, y), d.N);
  return out;
}

}  // namespace detail

inline Report validate_pointed(const PointedGXData& d) {
  Report rep;
  const FiniteGroup& T = *d.gamma;
  const FiniteGroup& G = *d.G;
  const int n = T.order();
  const int m = G.order();
  if (d.N < 1) {
    rep.add("shape", "N must be positive");
    return rep;
  }
  if (static_cast<int>(d.deg.size()) != n || static_cast<int>(d.action.size()) != m ||
      d.braid.size() != static_cast<std::size_t>(n) * n || d.assoc.degree() != 3 || d.assoc.N() != d.N ||
      d.assoc.group().table() != T.table()) {
    rep.add("shape", "table sizes do not match |Gamma| = " + std::to_string(n) + ", |G| = " + std::to_string(m));
    return rep;
  }
  for (int x = 0; x < n; ++x)
    if (d.deg[x] < 0 || d.deg[x] >= m) {
      rep.add("shape", "degree out of range", {T.element_name(x)});
      return rep;
    }
  for (int g = 0; g < m; ++g) {
    if (static_cast<int>(d.action[g].size()) != n) {
      rep.add("shape", "action row has the wrong length", {G.element_name(g)});
      return rep;
    }
    for (int x : d.action[g])
      if (x < 0 || x >= n) {
        rep.add("shape", "action value out of range", {G.element_name(g)});
        return rep;
      }
  }
  for (auto v : d.braid)
    if (v < 0 || v >= d.N) {
      rep.add("shape", "braid values must lie in 0..N-1");
      return rep;
    }

  for (int x = 0, found = 0; x < n && !found; ++x)
    for (int y = 0; y < n && !found; ++y)
      if (d.deg[T.mul(x, y)] != G.mul(d.deg[x], d.deg[y])) {
        rep.add("degree_homomorphism", "deg(xy) differs from deg(x) deg(y)", detail::names(T, {x, y}));
        found = 1;
      }
  for (int g = 0; g < m; ++g) {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) seen[d.action[g][x]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n) {
      rep.add("action_automorphism", "action is not a permutation", {G.element_name(g)});
      continue;
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (d.action[g][T.mul(x, y)] != T.mul(d.action[g][x], d.action[g][y])) {
          rep.add("action_automorphism", "action does not respect fusion", {G.element_name(g), T.element_name(x), T.element_name(y)});
          ok = false;
        }
    for (int x = 0; x < n; ++x)
      if (d.deg[d.action[g][x]] != G.conj(g, d.deg[x])) {
        rep.add("action_degree", "deg(action_g x) differs from g deg(x) g^-1", {G.element_name(g), T.element_name(x)});
        break;
      }
  }
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int x = 0; x < n; ++x)
        if (d.action[G.mul(g, h)][x] != d.action[g][d.action[h][x]]) {
          rep.add("action_homomorphism", "action_{gh} differs from action_g action_h",
                  {G.element_name(g), G.element_name(h), T.element_name(x)});
          g = m;
          h = m;
          break;
        }
  if (!rep.ok()) return rep;  // the remaining identities assume a well-formed action

  if (auto chk = is_cocycle(d.assoc); !chk.ok) {
    std::vector<std::string> w;
    if (chk.witness)
      for (int x : *chk.witness) w.push_back(T.element_name(x));
    rep.add("assoc_closed", "associator is not a 3-cocycle", w);
  }
  for (int x = 0; x < n; ++x)
    if (d.b(x, 0) != 0 || d.b(0, x) != 0) {
      rep.add("braid_unit", "braiding with the unit must be trivial", {T.element_name(x)});
      break;
    }
  bool h1 = true, h2 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (h1 && detail::hexagon1_defect(d, x, y, z) != 0) {
          rep.add("hexagon1", "b(x,yz) violates the first crossed hexagon", detail::names(T, {x, y, z}));
          h1 = false;
        }
        if (h2 && detail::hexagon2_defect(d, x, y, z) != 0) {
          rep.add("hexagon2", "b(xy,z) violates the second crossed hexagon", detail::names(T, {x, y, z}));
          h2 = false;
        }
      }
  for (int k = 0; k < m; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (d.b(d.action[k][x], d.action[k][y]) != d.b(x, y)) {
          rep.add("covariance", "braid is not invariant under the action",
                  {G.element_name(k), T.element_name(x), T.element_name(y)});
          k = m;
          x = n;
          break;
        }
  return rep;
}

/// The underlying graded fusion ring: group law on Gamma, graded by deg, all dims 1.
inline GradedFusionRing pointed_as_ring(const PointedGXData& d) {
  GradedFusionRing r = pointed_ring(*d.gamma);
  r.group = d.G;
  r.grading = d.deg;
  return r;
}

// ---------------------------------------------------------------------------
// Braiding search

namespace detail {

// Fill row x of b from its values on the generators via the first hexagon.
inline bool propagate_row(PointedGXData& d, int x, const std::vector<int>& gens, std::vector<char>& known) {
  const FiniteGroup& T = *d.gamma;
  const int n = d.size();
  std::fill(known.begin(), known.end(), 0);
  known[0] = 1;
  for (int s : gens) known[s] = 1;
  std::vector<int> queue(gens.begin(), gens.end());
  queue.insert(queue.begin(), 0);
  const auto& a = d.assoc;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int y = queue[qi];
    for (int z : gens) {
      const int yz = T.mul(y, z);
      const int xy = d.left(x, y), xz = d.left(x, z);
      std::int64_t v = mod(d.b(x, y) + d.b(x, z) + a(xy, x, z) - a(xy, xz, x) - a(x, y, z), d.N);
      if (known[yz]) {
        if (d.b(x, yz) != v) return false;
      } else {
        d.b(x, yz) = v;
        known[yz] = 1;
        queue.push_back(yz);
      }
    }
  }
  return std::all_of(known.begin(), known.end(), [](char c) { return c; });
}

// Fill all rows from the generator rows via the second hexagon.
inline bool propagate_columns(PointedGXData& d, const std::vector<int>& gens) {
  const FiniteGroup& T = *d.gamma;
  const int n = d.size();
  std::vector<char> known(static_cast<std::size_t>(n), 0);
  known[0] = 1;
  for (int s : gens) known[s] = 1;
  std::vector<int> queue(gens.begin(), gens.end());
  const auto& a = d.assoc;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int y = queue[qi];
    for (int s : gens) {
      const int sy = T.mul(s, y);
      for (int z = 0; z < n; ++z) {
        const int yz = d.left(y, z);
        const int xyz = d.left(sy, z);
        std::int64_t v = mod(d.b(y, z) + d.b(s, yz) + a(s, y, z) + a(xyz, s, y) - a(s, yz, y), d.N);
        if (known[sy]) {
          if (d.b(sy, z) != v) return false;
        } else {
          d.b(sy, z) = v;
        }
      }
      if (!known[sy]) {
        known[sy] = 1;
        queue.push_back(sy);
      }
    }
  }
  return std::all_of(known.begin(), known.end(), [](char c) { return c; });
}

}  // namespace detail

inline constexpr std::int64_t kMaxBraidSearch = 1 << 22;

/// Every braiding compatible with the given deg, action and assoc, sorted.
/// Free values are b(s, t) for generators s, t; everything else follows from the hexagons.
inline std::vector<std::vector<std::int64_t>> solve_braidings(const PointedGXData& skeleton, bool reverse_order = false) {
  const int n = skeleton.size();
  if (n == 1) return {std::vector<std::int64_t>(1, 0)};
  const std::vector<int> gens = generators(*skeleton.gamma);
  const std::size_t free = gens.size() * gens.size();
  std::int64_t total = 1;
  for (std::size_t i = 0; i < free; ++i) {
    total *= skeleton.N;
    if (total > kMaxBraidSearch) fail(ErrorKind::resource, "braiding search space exceeds " + std::to_string(kMaxBraidSearch));
  }
  // partition on the value of the first free variable
  std::vector<std::vector<std::vector<std::int64_t>>> found(static_cast<std::size_t>(skeleton.N));
  const std::int64_t per = total / skeleton.N;
  parallel_for(static_cast<std::size_t>(skeleton.N), [&](std::size_t first) {
    PointedGXData d = skeleton;
    std::vector<char> known(static_cast<std::size_t>(n));
    for (std::int64_t step = 0; step < per; ++step) {
      std::int64_t code = step;
      std::vector<std::int64_t> vals(free);
      vals[0] = static_cast<std::int64_t>(first);
      for (std::size_t i = 1; i < free; ++i) {
        vals[i] = code % d.N;
        code /= d.N;
      }
      if (reverse_order)
        for (auto& v : vals) v = d.N - 1 - v;
      std::fill(d.braid.begin(), d.braid.end(), 0);
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) d.b(gens[i], gens[j]) = vals[i * gens.size() + j];
      bool ok = true;
      for (int s : gens)
        if (ok && !detail::propagate_row(d, s, gens, known)) ok = false;
      if (!ok || !detail::propagate_columns(d, gens)) continue;
      if (!detail::hexagons_hold(d)) continue;
      bool covariant = true;
      for (std::size_t k = 0; k < d.action.size() && covariant; ++k)
        for (int x = 0; x < n && covariant; ++x)
          for (int y = 0; y < n && covariant; ++y)
            if (d.b(d.action[k][x], d.action[k][y]) != d.b(x, y)) covariant = false;
      if (covariant) found[first].push_back(d.braid);
    }
  });
  std::vector<std::vector<std::int64_t>> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Holomorphic crossed categories

inline constexpr std::int64_t kMaxRootOrder = 16;

inline PointedGXData holomorphic_skeleton(const TorsionCocycle& omega) {
  const GroupPtr g = omega.group_ptr();
  PointedGXData d = pointed_skeleton(g, g, omega.N());
  std::iota(d.deg.begin(), d.deg.end(), 0);
  for (int h = 0; h < g->order(); ++h)
    for (int x = 0; x < g->order(); ++x) d.action[h][x] = g->conj(h, x);
  d.assoc = omega;
  return d;
}

struct HolomorphicResult {
  PointedGXData datum;  // lexicographically least braiding
  std::size_t solutions = 0;
};

/// One object per degree, conjugation action, assoc = omega. While no braiding exists, N is
/// multiplied by the exponent of G (twists of odd order need roots of order exp(G)^2).
inline HolomorphicResult holomorphic_crossed(const TorsionCocycle& omega) {
  if (omega.degree() != 3) fail(ErrorKind::usage, "holomorphic_crossed needs a 3-cocycle");
  if (auto chk = is_cocycle(omega); !chk.ok) fail(ErrorKind::validation, "omega is not closed");
  const FiniteGroup& g = omega.group();
  std::int64_t step = 1;
  for (int x = 0; x < g.order(); ++x) step = lcm64(step, g.element_order(x));
  if (step == 1) step = 2;
  TorsionCocycle w = omega;
  while (true) {
    PointedGXData d = holomorphic_skeleton(w);
    auto sols = solve_braidings(d);
    if (!sols.empty()) {
      d.braid = sols.front();
      return {std::move(d), sols.size()};
    }
    if (step * w.N() > kMaxRootOrder)
      fail(ErrorKind::resource, "no consistent braiding with N up to " + std::to_string(w.N()) +
                                    " (retries stop at " + std::to_string(kMaxRootOrder) + ")");
    w = w.inflate(step * w.N());
  }
}

struct HolomorphicEnumeration {
  std::vector<PointedGXData> raw;        // every solution, grouped by assoc class
  std::vector<int> orbit_of;             // raw index -> orbit id
  std::vector<int> representatives;      // least raw index per orbit
  std::vector<std::size_t> orbit_sizes;  // aligned with representatives
};

inline constexpr int kMaxEnumerateOrder = 6;
inline constexpr std::int64_t kMaxEnumerateN = 8;

/// Orbits are taken under: braid shifts by 2-cocycles, and relabelling by automorphisms of G
/// (followed by the coboundary that returns the associator to its class representative).
inline HolomorphicEnumeration enumerate_holomorphic(const GroupPtr& g, std::int64_t N, bool permuted = false) {
  if (g->order() > kMaxEnumerateOrder || N > kMaxEnumerateN || N < 1)
    fail(ErrorKind::resource, "enumerate_holomorphic supports |G| <= " + std::to_string(kMaxEnumerateOrder) +
                                  " and N <= " + std::to_string(kMaxEnumerateN));
  HolomorphicEnumeration out;
  const int n = g->order();
  // assoc class representatives
  std::vector<TorsionCocycle> classes;
  std::shared_ptr<const CohomologyData> h3, h2;
  if (n == 1) {
    classes.emplace_back(g, 3, N);
  } else {
    auto H = cohomology_group(g, 3, N);
    h3 = H.data;
    h2 = detail::cohomology_cache().get(g, 2, N);
    std::vector<std::int64_t> digits(H.invariant_factors.size(), 0);
    while (true) {
      TorsionCocycle a(g, 3, N);
      for (std::size_t i = 0; i < digits.size(); ++i) a = a + digits[i] * H.representatives[i];
      classes.push_back(a);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == H.invariant_factors[i]) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  std::vector<std::size_t> class_order(classes.size());
  std::iota(class_order.begin(), class_order.end(), 0);
  if (permuted) std::reverse(class_order.begin(), class_order.end());

  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, int> where;
  std::vector<std::size_t> class_of;
  for (std::size_t c : class_order) {
    PointedGXData d = holomorphic_skeleton(classes[c]);
    for (auto& b : solve_braidings(d, permuted)) {
      d.braid = b;
      where[{c, b}] = static_cast<int>(out.raw.size());
      class_of.push_back(c);
      out.raw.push_back(d);
    }
  }
  const int R = static_cast<int>(out.raw.size());
  std::vector<int> parent(static_cast<std::size_t>(R));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  auto lookup = [&](std::size_t c, const std::vector<std::int64_t>& b) {
    auto it = where.find({c, b});
    check_internal(it != where.end(), "equivalence move left the solution set");
    return it->second;
  };
  auto shifted = [&](const PointedGXData& d, const TorsionCocycle& c) {
    auto s = detail::gauge_shift(d, c);
    std::vector<std::int64_t> b = d.braid;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = mod(b[i] + s[i], N);
    return b;
  };

  if (n > 1) {
    // 2-cocycle generators: kernel of delta_2 in the diagonal coordinates
    std::vector<TorsionCocycle> z2;
    const auto& up = h2->upper;
    for (int i = 0; i < up.cols; ++i) {
      const std::int64_t gi = h2->kernel_order[i];
      if (gi == 1) continue;
      std::vector<std::int64_t> y(static_cast<std::size_t>(up.cols), 0);
      y[i] = N / gi;
      auto x = mat_vec(up.V, y, N);
      TorsionCocycle c(g, 2, N);
      for (std::size_t k = 0; k < x.size(); ++k) c.set_index(k, x[k]);
      check_internal(coboundary(c).is_zero(), "2-cocycle generator is not closed");
      z2.push_back(std::move(c));
    }
    std::map<std::vector<std::int64_t>, std::size_t> class_by_label;
    for (std::size_t c = 0; c < classes.size(); ++c) class_by_label[class_label(*h3, classes[c])] = c;
    const auto autos = automorphisms(*g);
    for (int r = 0; r < R; ++r) {
      const PointedGXData& d = out.raw[r];
      for (const auto& c : z2) unite(r, lookup(class_of[r], shifted(d, c)));
      for (const auto& phi : autos) {
        std::vector<int> phi_inv(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) phi_inv[phi[x]] = x;
        TorsionCocycle a(g, 3, N);
        for (std::size_t i = 0; i < a.size(); ++i) {
          auto t = a.tuple(i);
          a.set_index(i, d.assoc(phi_inv[t[0]], phi_inv[t[1]], phi_inv[t[2]]));
        }
        PointedGXData e = d;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) e.b(x, y) = d.b(phi_inv[x], phi_inv[y]);
        const std::size_t target = class_by_label.at(class_label(*h3, a));
        auto c = coboundary_preimage(*h3, classes[target] - a);
        check_internal(c.has_value(), "relabelled associator left its class");
        e.assoc = a;
        unite(r, lookup(target, shifted(e, *c)));
      }
    }
  }
  std::map<int, int> orbit_id;
  out.orbit_of.resize(static_cast<std::size_t>(R));
  for (int r = 0; r < R; ++r) {
    int root = find(r);
    auto [it, fresh] = orbit_id.emplace(root, static_cast<int>(out.representatives.size()));
    if (fresh) {
      out.representatives.push_back(r);
      out.orbit_sizes.push_back(0);
    }
    out.orbit_of[r] = it->second;
    ++out.orbit_sizes[it->second];
  }
  return out;
}

// ---------------------------------------------------------------------------
// De-equivariantization of a braided pointed category by a boson subgroup

struct CharacterGroup {
  GroupPtr group;                               // characters H -> Z/N under addition
  std::vector<std::vector<std::int64_t>> values;  // values[chi][h], h indexed by position in H
};

inline CharacterGroup character_group(const Subgroup& H, std::int64_t N) {
  const FiniteGroup& h = H.group;
  const int n = h.order();
  const auto gens = generators(h);
  CharacterGroup out;
  std::vector<std::int64_t> img(gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> chi(static_cast<std::size_t>(n), -1);
    chi[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi)
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        int y = h.mul(queue[qi], gens[i]);
        std::int64_t v = mod(chi[queue[qi]] + img[i], N);
        if (chi[y] < 0) {
          chi[y] = v;
          queue.push_back(y);
        } else if (chi[y] != v) {
          ok = false;
        }
      }
    if (ok) out.values.push_back(chi);
    std::size_t i = 0;
    while (i < img.size() && ++img[i] == N) img[i++] = 0;
    if (i == img.size()) break;
  }
  std::sort(out.values.begin(), out.values.end());
  const int m = static_cast<int>(out.values.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    names[a] = "chi" + std::to_string(a);
    for (int b = 0; b < m; ++b) {
      std::vector<std::int64_t> s(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) s[k] = mod(out.values[a][k] + out.values[b][k], N);
      table[static_cast<std::size_t>(a) * m + b] =
          static_cast<int>(std::lower_bound(out.values.begin(), out.values.end(), s) - out.values.begin());
    }
  }
  names[0] = "1";
  out.group = std::make_shared<const FiniteGroup>("dual(" + h.name() + ")", m, std::move(table), std::move(names),
                                                  FiniteGroup::Trusted{});
  return out;
}

/// Input: G trivial, Gamma abelian, H transparent within itself with exact assoc on H.
/// The output is carried by a complement K of H: the free modules x (x) A, x in K, are a
/// full set of simples and restrict fusion, assoc and braiding from C without correction.
inline PointedGXData pointed_deequivariantize(const PointedGXData& c, std::vector<int> H) {
  if (c.G->order() != 1) fail(ErrorKind::usage, "pointed_deequivariantize needs a braided input (trivial G)");
  if (auto r = validate_pointed(c); !r.ok()) fail(ErrorKind::validation, "input fails validate_pointed: " + r.failures[0].check);
  const FiniteGroup& T = *c.gamma;
  if (!T.is_abelian()) fail(ErrorKind::validation, "a braided pointed category has abelian fusion");
  const Subgroup sub = make_subgroup(T, H);
  H = sub.to_parent;
  for (int h : H)
    for (int k : H)
      if (mod(c.b(h, k) + c.b(k, h), c.N) != 0)
        fail(ErrorKind::validation, "H is not transparent within itself: witness (" + T.element_name(h) + ", " +
                                        T.element_name(k) + ")");
  if (H.size() > 1) {
    auto hp = std::make_shared<const FiniteGroup>(sub.group);
    TorsionCocycle res(hp, 3, c.N);
    for (std::size_t i = 0; i < res.size(); ++i) {
      auto t = res.tuple(i);
      res.set_index(i, c.assoc(H[t[0]], H[t[1]], H[t[2]]));
    }
    if (!is_coboundary(res)) fail(ErrorKind::validation, "assoc restricted to H is not exact");
  }
  // complement K: H K = Gamma, H meet K = 1
  std::optional<std::vector<int>> K;
  {
    const int n = T.order();
    const int want = n / static_cast<int>(H.size());
    std::vector<int> best;
    // subgroups generated by at most two elements cover every abelian group of order <= 64 we accept
    for (int a = 0; a < n && !K; ++a)
      for (int b = a; b < n && !K; ++b) {
        auto S = generated_subgroup(T, {a, b});
        if (static_cast<int>(S.size()) != want) continue;
        bool meet = true;
        for (int s : S)
          if (s != 0 && std::binary_search(H.begin(), H.end(), s)) meet = false;
        if (meet) K = S;
      }
  }
  if (!K) fail(ErrorKind::validation, "H has no complement in Gamma; this descent needs one");
  const Subgroup ks = make_subgroup(T, *K, T.name() + "/H");
  const CharacterGroup dual = character_group(sub, c.N);
  if (dual.group->order() != static_cast<int>(H.size()))
    fail(ErrorKind::usage, "N is too small to realize every character of H");
  auto kp = std::make_shared<const FiniteGroup>(ks.group);
  PointedGXData out = pointed_skeleton(kp, dual.group, c.N);
  const int q = kp->order();
  for (int x = 0; x < q; ++x) {
    const int px = ks.to_parent[x];
    std::vector<std::int64_t> chi(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) chi[i] = mod(c.b(px, H[i]) + c.b(H[i], px), c.N);
    auto it = std::lower_bound(dual.values.begin(), dual.values.end(), chi);
    check_internal(it != dual.values.end() && *it == chi, "double braiding with H is not a character");
    out.deg[x] = static_cast<int>(it - dual.values.begin());
    for (int y = 0; y < q; ++y) out.b(x, y) = c.b(px, ks.to_parent[y]);
  }
  for (std::size_t i = 0; i < out.assoc.size(); ++i) {
    auto t = out.assoc.tuple(i);
    out.assoc.set_index(i, c.assoc(ks.to_parent[t[0]], ks.to_parent[t[1]], ks.to_parent[t[2]]));
  }
  if (auto r = validate_pointed(out); !r.ok())
    fail(ErrorKind::internal, "descended data fails validate_pointed: " + r.failures[0].check);
  return out;
}

// ---------------------------------------------------------------------------
// Kirillov S

struct KirillovMatrix {
  std::vector<std::pair<int, int>> basis;         // (x, k) with action_k(x) = x
  std::vector<std::vector<std::int64_t>> phase;   // exponent mod N, or -1 for a zero entry
  std::int64_t N = 1;
  std::complex<double> det_numeric;
  bool invertible = false;
  bool exact = false;  // verdict certified by modular determinants
};

namespace detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t det_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t n = a.size();
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = p - det;
    }
    det = mulmod(det, a[c][c], p);
    const std::int64_t inv = powmod(a[c][c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const std::int64_t f = mulmod(a[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) a[r][k] = mod(a[r][k] - mulmod(f, a[c][k], p), p);
    }
  }
  return det % p;
}

}  // namespace detail

/// S((x,k),(y,l)) is the double braiding b(x,y) + b(y,x) when k = deg y and l = deg x, else 0.
/// The determinant lies in Z[zeta_N]. It is evaluated in F_p for primes p = 1 mod N; a nonzero
/// value proves invertibility, and zeros at primes whose product exceeds the Hadamard bound on
/// the norm prove singularity.
inline KirillovMatrix kirillov_S(const PointedGXData& d) {
  KirillovMatrix km;
  km.N = d.N;
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < d.G->order(); ++k)
      if (d.action[k][x] == x) km.basis.emplace_back(x, k);
  const std::size_t B = km.basis.size();
  km.phase.assign(B, std::vector<std::int64_t>(B, -1));
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(B), static_cast<Eigen::Index>(B));
  for (std::size_t i = 0; i < B; ++i)
    for (std::size_t j = 0; j < B; ++j) {
      auto [x, k] = km.basis[i];
      auto [y, l] = km.basis[j];
      if (k != d.deg[y] || l != d.deg[x]) continue;
      km.phase[i][j] = mod(d.b(x, y) + d.b(y, x), d.N);
      S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::polar(1.0, 2.0 * M_PI * static_cast<double>(km.phase[i][j]) / static_cast<double>(d.N));
    }
  km.det_numeric = B ? S.determinant() : std::complex<double>(1.0, 0.0);

  // log2 of the bound |Nm(det)| <= (B^{B/2})^{phi(N)}
  std::int64_t phi = 0;
  for (std::int64_t t = 1; t <= d.N; ++t)
    if (gcd64(t, d.N) == 1) ++phi;
  const double log_bound = static_cast<double>(phi) * 0.5 * static_cast<double>(B) * std::log2(std::max<double>(1.0, B));
  double log_zero_primes = 0;
  std::int64_t p = (std::int64_t{1} << 30) / d.N * d.N + 1;
  for (int tries = 0; tries < 200; p += d.N) {
    if (!detail::is_prime(p)) continue;
    ++tries;
    // primitive N-th root of unity in F_p
    std::int64_t zeta = 1;
    for (std::int64_t a = 2;; ++a) {
      zeta = detail::powmod(a, (p - 1) / d.N, p);
      bool primitive = true;
      for (auto [q, e] : detail::factorize(d.N))
        if (detail::powmod(zeta, d.N / q, p) == 1) primitive = false;
      if (primitive || d.N == 1) break;
    }
    std::vector<std::vector<std::int64_t>> m(B, std::vector<std::int64_t>(B, 0));
    for (std::size_t i = 0; i < B; ++i)
      for (std::size_t j = 0; j < B; ++j)
        if (km.phase[i][j] >= 0) m[i][j] = detail::powmod(zeta, km.phase[i][j], p);
    if (detail::det_mod(m, p) != 0) {
      km.invertible = true;
      km.exact = true;
      return km;
    }
    log_zero_primes += std::log2(static_cast<double>(p));
    if (log_zero_primes > log_bound + 1) {
      km.invertible = false;
      km.exact = true;
      return km;
    }
  }
  km.invertible = std::abs(km.det_numeric) > 1e-9;
  return km;
}

}  // namespace gxcat
