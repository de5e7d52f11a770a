#pragma once

// Diagonalization of integer matrices over Z/N with tracked change of basis:
// U * A * V = D (D diagonal). Each prime-power factor of N is handled as a
// local ring (pivot = entry of least p-valuation); the factors are glued by CRT.

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gxcat/errors.hpp"
#include "gxcat/numbers.hpp"

namespace gxcat {

inline constexpr std::int64_t kMaxMatrixEntries = 4'000'000;

struct ModMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int32_t> a;

  ModMatrix() = default;
  ModMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  static ModMatrix identity(int n) {
    ModMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::int32_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int32_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

inline std::vector<std::int64_t> mat_vec(const ModMatrix& m, const std::vector<std::int64_t>& x, std::int64_t N) {
  std::vector<std::int64_t> y(static_cast<std::size_t>(m.rows), 0);
  for (int i = 0; i < m.rows; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < m.cols; ++j)
      if (x[j]) s = (s + static_cast<std::int64_t>(m(i, j)) * x[j]) % N;
    y[i] = mod(s, N);
  }
  return y;
}

struct DiagOptions {
  bool u = false;
  bool u_inv = false;
  bool v = false;
  bool v_inv = false;
};

struct ModDiagonalization {
  std::int64_t N = 1;
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> diag;  // min(rows, cols) entries mod N
  ModMatrix U, U_inv, V, V_inv;    // only those requested are populated

  /// gcd(diag[i], N), with 0 mapped to N: the ideal generated by the i-th entry.
  std::int64_t ideal(std::size_t i) const {
    return i < diag.size() ? gcd64(diag[i] == 0 ? N : diag[i], N) : N;
  }
};

namespace detail {

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline int valuation(std::int64_t a, std::int64_t p, int cap) {
  if (a == 0) return cap;
  int v = 0;
  while (a % p == 0 && v < cap) {
    a /= p;
    ++v;
  }
  return v;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  Bezout b = bezout(mod(a, q), q);
  check_internal(b.g == 1, "inverse of a non-unit requested");
  return mod(b.s, q);
}

struct LocalResult {
  std::vector<std::int64_t> diag;
  ModMatrix U, U_inv, V, V_inv;
};

// Diagonalization over Z/q with q = p^e.
inline LocalResult local_diagonalize(const ModMatrix& src, std::int64_t q, std::int64_t p, int e,
                                     const DiagOptions& opt) {
  ModMatrix A = src;
  const int r = A.rows, c = A.cols;
  for (auto& x : A.a) x = static_cast<std::int32_t>(mod(x, q));
  LocalResult res;
  if (opt.u) res.U = ModMatrix::identity(r);
  if (opt.u_inv) res.U_inv = ModMatrix::identity(r);
  if (opt.v) res.V = ModMatrix::identity(c);
  if (opt.v_inv) res.V_inv = ModMatrix::identity(c);
  const int steps = std::min(r, c);
  auto addmul = [q](std::int32_t& dst, std::int64_t f, std::int32_t srcv) {
    dst = static_cast<std::int32_t>(mod(dst + f * srcv, q));
  };
  for (int t = 0; t < steps; ++t) {
    int bi = -1, bj = -1, bv = e;
    for (int i = t; i < r && bv > 0; ++i)
      for (int j = t; j < c; ++j) {
        std::int32_t x = A(i, j);
        if (!x) continue;
        int v = valuation(x, p, e);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;  // remaining block is zero
    if (bi != t) {
      for (int j = 0; j < c; ++j) std::swap(A(bi, j), A(t, j));
      if (opt.u)
        for (int j = 0; j < r; ++j) std::swap(res.U(bi, j), res.U(t, j));
      if (opt.u_inv)
        for (int i = 0; i < r; ++i) std::swap(res.U_inv(i, bi), res.U_inv(i, t));
    }
    if (bj != t) {
      for (int i = 0; i < r; ++i) std::swap(A(i, bj), A(i, t));
      if (opt.v)
        for (int i = 0; i < c; ++i) std::swap(res.V(i, bj), res.V(i, t));
      if (opt.v_inv)
        for (int j = 0; j < c; ++j) std::swap(res.V_inv(bj, j), res.V_inv(t, j));
    }
    std::int64_t pv = 1;
    for (int k = 0; k < bv; ++k) pv *= p;
    const std::int64_t unit = A(t, t) / pv;
    const std::int64_t s = inverse_mod(unit, q);
    for (int j = t; j < c; ++j) A(t, j) = static_cast<std::int32_t>(mod(A(t, j) * s, q));
    if (opt.u)
      for (int j = 0; j < r; ++j) res.U(t, j) = static_cast<std::int32_t>(mod(res.U(t, j) * s, q));
    if (opt.u_inv)
      for (int i = 0; i < r; ++i) res.U_inv(i, t) = static_cast<std::int32_t>(mod(res.U_inv(i, t) * unit, q));
    // clear column t below the pivot
    for (int i = t + 1; i < r; ++i) {
      std::int32_t x = A(i, t);
      if (!x) continue;
      const std::int64_t f = q - x / pv;  // subtract (x/pv) * row t
      for (int j = t; j < c; ++j)
        if (A(t, j)) addmul(A(i, j), f, A(t, j));
      if (opt.u)
        for (int j = 0; j < r; ++j)
          if (res.U(t, j)) addmul(res.U(i, j), f, res.U(t, j));
      if (opt.u_inv) {
        const std::int64_t g = x / pv;
        for (int k = 0; k < r; ++k)
          if (res.U_inv(k, i)) addmul(res.U_inv(k, t), g, res.U_inv(k, i));
      }
    }
    // clear row t right of the pivot; column t is now zero except at (t,t)
    for (int j = t + 1; j < c; ++j) {
      std::int32_t x = A(t, j);
      if (!x) continue;
      const std::int64_t g = x / pv;
      A(t, j) = 0;
      if (opt.v)
        for (int i = 0; i < c; ++i)
          if (res.V(i, t)) addmul(res.V(i, j), q - g, res.V(i, t));
      if (opt.v_inv)
        for (int k = 0; k < c; ++k)
          if (res.V_inv(j, k)) addmul(res.V_inv(t, k), g, res.V_inv(j, k));
    }
  }
  res.diag.resize(static_cast<std::size_t>(steps));
  for (int t = 0; t < steps; ++t) res.diag[t] = A(t, t);
  return res;
}

inline std::int64_t crt_coefficient(std::int64_t q, std::int64_t N) {
  std::int64_t m = N / q;
  return (m * inverse_mod(m % q, q)) % N;
}

inline void crt_accumulate(ModMatrix& dst, const ModMatrix& part, std::int64_t coeff, std::int64_t N) {
  if (dst.a.empty()) dst = ModMatrix(part.rows, part.cols);
  for (std::size_t i = 0; i < part.a.size(); ++i)
    dst.a[i] = static_cast<std::int32_t>((dst.a[i] + coeff * part.a[i]) % N);
}

}  // namespace detail

/// Diagonalizes an integer matrix modulo N. Entries of `a` may be any integers.
inline ModDiagonalization diagonalize_mod(const ModMatrix& a, std::int64_t N, const DiagOptions& opt = {}) {
  if (N < 1) fail(ErrorKind::usage, "modulus must be positive");
  if (static_cast<std::int64_t>(a.rows) * a.cols > kMaxMatrixEntries)
    fail(ErrorKind::resource, "matrix of size " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                                  " exceeds the limit of " + std::to_string(kMaxMatrixEntries) + " entries");
  ModDiagonalization out;
  out.N = N;
  out.rows = a.rows;
  out.cols = a.cols;
  const int steps = std::min(a.rows, a.cols);
  out.diag.assign(static_cast<std::size_t>(steps), 0);
  if (N == 1) {
    if (opt.u) out.U = ModMatrix(a.rows, a.rows);
    if (opt.u_inv) out.U_inv = ModMatrix(a.rows, a.rows);
    if (opt.v) out.V = ModMatrix(a.cols, a.cols);
    if (opt.v_inv) out.V_inv = ModMatrix(a.cols, a.cols);
    return out;
  }
  for (auto [p, e] : detail::factorize(N)) {
    std::int64_t q = 1;
    for (int k = 0; k < e; ++k) q *= p;
    auto local = detail::local_diagonalize(a, q, p, e, opt);
    const std::int64_t coeff = detail::crt_coefficient(q, N);
    for (int t = 0; t < steps; ++t) out.diag[t] = (out.diag[t] + coeff * local.diag[t]) % N;
    if (opt.u) detail::crt_accumulate(out.U, local.U, coeff, N);
    if (opt.u_inv) detail::crt_accumulate(out.U_inv, local.U_inv, coeff, N);
    if (opt.v) detail::crt_accumulate(out.V, local.V, coeff, N);
    if (opt.v_inv) detail::crt_accumulate(out.V_inv, local.V_inv, coeff, N);
  }
  return out;
}

/// Regroups a list of cyclic orders into invariant factors d_1 | d_2 | ... (each >= 2).
/// Also returns, per invariant factor, the (index, multiplier) pairs whose sum generates it:
/// generator_t = sum over pairs of multiplier * e_index.
struct InvariantFactorBasis {
  std::vector<std::int64_t> factors;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> combos;
};

inline InvariantFactorBasis invariant_factors(const std::vector<std::int64_t>& orders) {
  // primary components: prime -> list of (p^v, index, multiplier)
  std::vector<std::pair<std::int64_t, std::vector<std::tuple<std::int64_t, std::size_t, std::int64_t>>>> primes;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2) continue;
    for (auto [p, e] : detail::factorize(orders[i])) {
      std::int64_t pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      auto it = std::find_if(primes.begin(), primes.end(), [p = p](const auto& x) { return x.first == p; });
      if (it == primes.end()) {
        primes.push_back({p, {}});
        it = primes.end() - 1;
      }
      it->second.emplace_back(pe, i, orders[i] / pe);
    }
  }
  std::size_t count = 0;
  for (auto& [p, comps] : primes) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& x, const auto& y) { return std::get<0>(x) > std::get<0>(y); });
    count = std::max(count, comps.size());
  }
  InvariantFactorBasis out;
  // largest invariant factor first, then reversed into ascending order
  for (std::size_t t = 0; t < count; ++t) {
    std::int64_t f = 1;
    std::vector<std::pair<std::size_t, std::int64_t>> combo;
    for (auto& [p, comps] : primes) {
      if (t >= comps.size()) continue;
      auto [pe, idx, mult] = comps[t];
      f *= pe;
      combo.emplace_back(idx, mult);
    }
    out.factors.push_back(f);
    out.combos.push_back(std::move(combo));
  }
  std::reverse(out.factors.begin(), out.factors.end());
  std::reverse(out.combos.begin(), out.combos.end());
  return out;
}

}  // namespace gxcat
