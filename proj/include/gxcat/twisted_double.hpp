#pragma once

// Twisted quantum doubles D^omega(G): simples, characters on commuting pairs,
// fusion from character inner products, T from the central element, S by balancing.

#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gxcat/cohomology.hpp"
#include "gxcat/errors.hpp"
#include "gxcat/fusion.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/numbers.hpp"

namespace gxcat {

struct DoubleSimple {
  std::string label;  // "<class rep>|<irrep index>"
  int class_index = 0;
  int flux = 0;       // least member of the class
  int irrep = 0;
  int irrep_dim = 1;
  int dim = 1;        // |class| * irrep_dim
};

struct DoubleData {
  GroupPtr group;
  TorsionCocycle omega;
  std::vector<DoubleSimple> simples;
  GradedFusionRing ring;           // trivially graded, with twists and integer dimensions
  std::vector<Turn> T;
  Eigen::MatrixXcd S;
  bool has_modular_data = false;
  std::vector<int> rep_embedding;  // irreps of G (character-table order) -> simples with trivial flux
};

namespace detail {

inline double theta_phase(const TorsionCocycle& w, int g, int x, int y) {
  // additive transgression theta_g(x, y) on all of G
  const FiniteGroup& G = w.group();
  int xy = G.mul(x, y);
  std::int64_t v = w(g, x, y) - w(x, G.mul(G.mul(G.inv(x), g), x), y) + w(x, y, G.mul(G.mul(G.inv(xy), g), xy));
  return static_cast<double>(mod(v, w.N())) / static_cast<double>(w.N());
}

inline std::complex<double> turn_value(double t) { return std::polar(1.0, 2.0 * M_PI * t); }

}  // namespace detail

inline constexpr int kMaxDoubleGroupOrder = 12;

inline DoubleData twisted_double(const TorsionCocycle& omega) {
  if (omega.degree() != 3) fail(ErrorKind::usage, "twisted_double needs a 3-cocycle");
  if (auto chk = is_cocycle(omega); !chk.ok) fail(ErrorKind::validation, "omega is not closed");
  const FiniteGroup& G = omega.group();
  if (G.order() > kMaxDoubleGroupOrder)
    fail(ErrorKind::resource, "twisted_double supports |G| <= " + std::to_string(kMaxDoubleGroupOrder));
  const int order = G.order();
  const std::int64_t N = omega.N();
  DoubleData out;
  out.group = omega.group_ptr();
  out.omega = omega;
  const auto cd = conjugacy_data(G);
  const CharacterTable ct = character_table(G);

  // commuting pairs (g, x), enumerated once
  std::vector<std::pair<int, int>> pairs;
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < order; ++x)
      if (G.mul(g, x) == G.mul(x, g)) pairs.emplace_back(g, x);
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order), -1));
  for (std::size_t p = 0; p < pairs.size(); ++p) pair_index[pairs[p].first][pairs[p].second] = static_cast<int>(p);

  std::vector<std::vector<std::complex<double>>> chars;  // [simple][pair]
  long total = 0;
  for (std::size_t c = 0; c < cd.classes.size(); ++c) {
    const int a = cd.reps[c];
    Transgression tr = transgress(omega, a);
    ProjectiveIrreps irreps = projective_irreps(tr.cocycle);
    std::vector<int> order_of(irreps.dims.size());
    std::iota(order_of.begin(), order_of.end(), 0);
    if (a == 0) {
      // flux e: align with the character table of G
      order_of.clear();
      for (std::size_t i = 0; i < ct.dims.size(); ++i)
        for (std::size_t k = 0; k < irreps.dims.size(); ++k) {
          bool same = irreps.dims[k] == ct.dims[i];
          for (int x = 0; x < order && same; ++x) same = detail::close(irreps.characters[k][x], ct.value(static_cast<int>(i), x));
          if (same) order_of.push_back(static_cast<int>(k));
        }
      check_internal(order_of.size() == ct.dims.size(), "flux-e simples do not match the irreps of G");
    }
    // transporters t_g with t a t^-1 = g
    std::vector<int> t_of(static_cast<std::size_t>(order), -1);
    for (int t = 0; t < order; ++t) {
      int g = G.conj(t, a);
      if (t_of[g] < 0) t_of[g] = t;
    }
    for (std::size_t idx = 0; idx < order_of.size(); ++idx) {
      const int k = order_of[idx];
      DoubleSimple s;
      s.class_index = static_cast<int>(c);
      s.flux = a;
      s.irrep = static_cast<int>(idx);
      s.irrep_dim = irreps.dims[k];
      s.dim = static_cast<int>(cd.classes[c].size()) * s.irrep_dim;
      s.label = G.element_name(a) + "|" + std::to_string(idx);
      total += static_cast<long>(s.dim) * s.dim;
      std::vector<std::complex<double>> chi(pairs.size(), 0.0);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [g, x] = pairs[p];
        if (cd.class_of[g] != static_cast<int>(c)) continue;
        int t = t_of[g];
        int h = G.mul(G.mul(G.inv(t), x), t);
        int local = tr.centralizer.to_local(h);
        check_internal(local >= 0, "conjugated element left the centralizer");
        double phase = detail::theta_phase(omega, g, x, t) - detail::theta_phase(omega, g, t, h);
        chi[p] = detail::turn_value(phase) * irreps.characters[k][local];
      }
      chars.push_back(std::move(chi));
      out.simples.push_back(std::move(s));
    }
  }
  check_internal(total == static_cast<long>(order) * order, "sum of squared dimensions differs from |G|^2");
  const int n = static_cast<int>(out.simples.size());

  // fusion from <chi_i (x) chi_j, chi_k>
  auto gamma = [&](int x, int h, int k) {
    int xi = G.inv(x);
    std::int64_t v = omega(h, k, x) + omega(x, G.mul(G.mul(xi, h), x), G.mul(G.mul(xi, k), x)) -
                     omega(h, x, G.mul(G.mul(xi, k), x));
    return detail::turn_value(static_cast<double>(mod(v, N)) / static_cast<double>(N));
  };
  GradedFusionRing& R = out.ring;
  for (const auto& s : out.simples) R.labels.push_back(s.label);
  R.coeffs.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::complex<double>> prod(pairs.size(), 0.0);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [g, x] = pairs[p];
        for (int h = 0; h < order; ++h) {
          int k = G.mul(G.inv(h), g);
          int ph = pair_index[h][x], pk = pair_index[k][x];
          if (ph < 0 || pk < 0) continue;
          prod[p] += gamma(x, h, k) * chars[i][ph] * chars[j][pk];
        }
      }
      for (int k = 0; k < n; ++k) {
        std::complex<double> s = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p) s += prod[p] * std::conj(chars[k][p]);
        s /= static_cast<double>(order);
        long v = std::lround(s.real());
        if (std::abs(s - std::complex<double>(static_cast<double>(v), 0)) > 1e-6 || v < 0)
          fail(ErrorKind::internal, "non-integral fusion multiplicity in the twisted double");
        R.N(i, j, k) = static_cast<int>(v);
      }
    }
  R.unit = 0;
  R.dual.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (R.N(i, j, 0) == 1) R.dual[i] = j;
  R.grading.assign(static_cast<std::size_t>(n), 0);
  std::vector<Real> dims;
  for (const auto& s : out.simples) dims.emplace_back(static_cast<std::int64_t>(s.dim));
  R.dims = dims;

  // T: the flux acts on its own simple by a scalar
  const std::int64_t max_den = N * order * order;
  for (int i = 0; i < n; ++i) {
    const int a = out.simples[i].flux;
    auto v = chars[i][pair_index[a][a]] / static_cast<double>(out.simples[i].irrep_dim);
    auto t = Turn::recognize(v, max_den);
    if (!t) fail(ErrorKind::internal, "twist is not a recognizable root of unity");
    out.T.push_back(*t);
  }
  R.twists = out.T;
  if (auto rep = validate_ring(R); !rep.ok())
    fail(ErrorKind::internal, "twisted double fusion failed validation: " + rep.failures[0].check);

  // S by balancing: S_ij = (1/D) sum_k N_{dual(i) j}^k theta_k / (theta_i theta_j) d_k
  const double D = order;
  out.S = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> s = 0;
      for (int k = 0; k < n; ++k)
        if (int m = R.N(R.dual[i], j, k))
          s += static_cast<double>(m * out.simples[k].dim) * (out.T[k] - out.T[i] - out.T[j]).value();
      out.S(i, j) = s / D;
    }
  Eigen::MatrixXcd u = out.S * out.S.adjoint() - Eigen::MatrixXcd::Identity(n, n);
  out.has_modular_data = u.cwiseAbs().maxCoeff() < 1e-9;
  if (!out.has_modular_data) fail(ErrorKind::internal, "S matrix from balancing is not unitary");
  for (int i = 0; i < static_cast<int>(ct.dims.size()); ++i) out.rep_embedding.push_back(i);
  return out;
}

}  // namespace gxcat
