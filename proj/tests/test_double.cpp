#include <gtest/gtest.h>

#include <set>

#include "common.hpp"
#include "gxcat/examples.hpp"

using namespace gxcat;
using namespace testing_util;

namespace {

std::multiset<std::pair<std::int64_t, std::int64_t>> spins(const DoubleData& d) {
  std::multiset<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& t : d.T) out.insert({t.num(), t.den()});
  return out;
}

std::vector<TorsionCocycle> all_classes(const GroupPtr& g) {
  auto h = cohomology_group(g, 3, g->order());
  std::vector<TorsionCocycle> out{TorsionCocycle(g, 3, g->order())};
  for (std::size_t i = 0; i < h.representatives.size(); ++i) {
    const auto n = static_cast<std::int64_t>(out.size());
    for (std::int64_t m = 1; m < h.invariant_factors[i]; ++m)
      for (std::int64_t j = 0; j < n; ++j) out.push_back(out[j] + m * h.representatives[i]);
  }
  return out;
}

void check_modular(const DoubleData& d) {
  const int n = static_cast<int>(d.simples.size());
  const auto& S = d.S;
  const double D = d.group->order();
  for (int i = 0; i < n; ++i) {
    EXPECT_NEAR(std::abs(S(0, i) - std::complex<double>(d.simples[i].dim / D, 0)), 0.0, 1e-9);
    for (int j = 0; j < n; ++j) EXPECT_NEAR(std::abs(S(i, j) - S(j, i)), 0.0, 1e-9);
  }
  // Verlinde
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::complex<double> v = 0;
        for (int m = 0; m < n; ++m) v += S(i, m) * S(j, m) * std::conj(S(k, m)) / S(0, m);
        ASSERT_NEAR(std::abs(v - std::complex<double>(d.ring.N(i, j, k), 0)), 0.0, 1e-8);
      }
  // (ST)^3 = p+ / D * S^2 with the Gauss sum p+ = sum d^2 theta
  std::complex<double> gauss = 0;
  for (int i = 0; i < n; ++i) gauss += static_cast<double>(d.simples[i].dim * d.simples[i].dim) * d.T[i].value();
  EXPECT_NEAR(std::abs(gauss), D, 1e-9);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) T(i, i) = d.T[i].value();
  Eigen::MatrixXcd st = S * T;
  Eigen::MatrixXcd lhs = st * st * st;
  Eigen::MatrixXcd rhs = (gauss / D) * S * S;
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-8);
}

}  // namespace

TEST(Double, ToricCode) {
  auto d = twisted_double(TorsionCocycle(grp("Z2"), 3, 2));
  ASSERT_EQ(d.simples.size(), 4u);
  for (const auto& s : d.simples) EXPECT_EQ(s.dim, 1);
  EXPECT_EQ(spins(d), (std::multiset<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {0, 1}, {0, 1}, {1, 2}}));
  check_modular(d);
}

TEST(Double, DoubleSemionDiffersFromToricCode) {
  auto d = twisted_double(examples::cyclic_h3_generator(2));
  ASSERT_EQ(d.simples.size(), 4u);
  EXPECT_EQ(spins(d), (std::multiset<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {0, 1}, {1, 4}, {3, 4}}));
  check_modular(d);
}

TEST(Double, DS3) {
  auto d = twisted_double(TorsionCocycle(grp("S3"), 3, 6));
  std::vector<int> dims;
  for (const auto& s : d.simples) dims.push_back(s.dim);
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 2, 3, 3, 2, 2, 2}));
  check_modular(d);
  // flux-e simples are Rep(S3) in character-table order
  EXPECT_EQ(d.rep_embedding, (std::vector<int>{0, 1, 2}));
}

TEST(Double, SumOfSquaresAndModularityForAllClasses) {
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
    auto g = grp(name);
    for (const auto& w : all_classes(g)) {
      auto d = twisted_double(w);
      long s = 0;
      for (const auto& x : d.simples) s += static_cast<long>(x.dim) * x.dim;
      EXPECT_EQ(s, static_cast<long>(g->order()) * g->order()) << name;
      EXPECT_TRUE(d.has_modular_data);
      check_modular(d);
    }
  }
}

TEST(Double, CorpusGenerators) {
  for (const char* name : {"h3_z2", "h3_z3", "h3_z4", "h3_z2xz2_a", "h3_z2xz2_b", "h3_z2xz2_ab"}) {
    auto w = io::cocycle_from_json(io::load_json(default_corpus_dir() / (std::string(name) + ".json")));
    EXPECT_TRUE(is_cocycle(w).ok);
    EXPECT_FALSE(is_coboundary(w)) << name;
    auto d = twisted_double(w);
    long s = 0;
    for (const auto& x : d.simples) s += static_cast<long>(x.dim) * x.dim;
    EXPECT_EQ(s, static_cast<long>(w.group().order()) * w.group().order()) << name;
  }
  // Z3 generator: flux-g simples have spins in ninths
  auto d = twisted_double(examples::cyclic_h3_generator(3));
  int ninths = 0;
  for (const auto& t : d.T) ninths += t.den() == 9;
  EXPECT_EQ(ninths, 6);
}

TEST(Double, Guards) {
  auto open = TorsionCocycle(grp("Z3"), 3, 3);
  open.set({1, 1, 1}, 1);
  ASSERT_FALSE(is_cocycle(open).ok);
  EXPECT_THROW(twisted_double(open), Error);
  try {
    twisted_double(TorsionCocycle(grp("S4"), 3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource);
  }
}
