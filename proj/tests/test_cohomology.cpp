#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "gxcat.hpp"
#include "gxcat/examples.hpp"
#include "oracles.hpp"

using namespace gxcat;

namespace {

GroupPtr grp(const std::string& name) { return std::make_shared<const FiniteGroup>(build_group(name)); }

}  // namespace

TEST(Cohomology, CoboundaryOfZeroIsZero) {
  TorsionCocycle z(grp("S3"), 2, 6);
  EXPECT_TRUE(coboundary(z).is_zero());
}

TEST(Cohomology, CoboundaryMatchesOracle) {
  std::mt19937_64 rng(11);
  for (const char* name : {"Z3", "S3", "Z2xZ2"})
    for (int k = 1; k <= 3; ++k) {
      auto g = grp(name);
      oracles::CochainOracle o{*g, 5};
      auto c = random_cochain(g, k, 5, rng);
      std::vector<int> flat(c.values().begin(), c.values().end());
      auto want = o.delta(flat, k);
      auto got = coboundary(c);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got.values()[i], want[i]) << name << " k=" << k;
    }
}

TEST(Cohomology, DeltaSquaredVanishes) {
  std::mt19937_64 rng(2024);
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"})
    for (int k = 1; k <= 3; ++k)
      for (std::int64_t N : {2, 3, 4, 6})
        for (int t = 0; t < 20; ++t) ASSERT_TRUE(coboundary(coboundary(random_cochain(grp(name), k, N, rng))).is_zero());
}

TEST(Cohomology, Z2UniqueNonzeroThreeCochainIsClosed) {
  TorsionCocycle w(grp("Z2"), 3, 2);
  w.set({1, 1, 1}, 1);
  EXPECT_TRUE(is_cocycle(w).ok);
  EXPECT_FALSE(is_coboundary(w));
}

TEST(Cohomology, NonClosedCochainHasLeastWitness) {
  std::mt19937_64 rng(5);
  auto g = grp("Z3");
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto c = random_cochain(g, 3, 3, rng);
    auto chk = is_cocycle(c);
    if (chk.ok) continue;
    ASSERT_TRUE(chk.witness.has_value());
    auto d = coboundary(c);
    // the witness is the least violating tuple
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d.values()[i] != 0) {
        EXPECT_EQ(d.tuple(i), *chk.witness);
        break;
      }
    return;
  }
  FAIL() << "rejection sampling found no non-closed cochain";
}

TEST(Cohomology, Examples) {
  EXPECT_TRUE(cohomology_group(grp("Z1"), 3, 5).invariant_factors.empty());
  EXPECT_EQ(cohomology_group(grp("Z2"), 3, 2).invariant_factors, std::vector<std::int64_t>{2});
  // H^2(Z2, Z/2) = Z/2: the cochain with value 1 on (g,g) is closed and not a coboundary,
  // since delta of any normalized 1-cochain vanishes on (g,g) mod 2.
  EXPECT_EQ(cohomology_group(grp("Z2"), 2, 2).invariant_factors, std::vector<std::int64_t>{2});
  EXPECT_EQ(cohomology_group(grp("S3"), 3, 6).invariant_factors, std::vector<std::int64_t>{6});
}

TEST(Cohomology, OrdersMatchBruteForce) {
  struct Case {
    const char* g;
    int k;
    int N;
  };
  for (auto c : {Case{"Z2", 1, 2}, Case{"Z2", 2, 2}, Case{"Z2", 3, 2}, Case{"Z2", 3, 4}, Case{"Z2", 4, 2},
                 Case{"Z3", 1, 3}, Case{"Z3", 2, 3}, Case{"Z3", 3, 3}, Case{"Z3", 3, 6}, Case{"Z4", 2, 4},
                 Case{"Z4", 2, 2}, Case{"Z2xZ2", 2, 2}, Case{"S3", 1, 6}}) {
    auto g = grp(c.g);
    oracles::CochainOracle o{*g, c.N};
    EXPECT_EQ(cohomology_group(g, c.k, c.N).order(), o.order(c.k)) << c.g << " k=" << c.k << " N=" << c.N;
  }
}

TEST(Cohomology, RepresentativesClosedAndNotExact) {
  for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
    auto g = grp(name);
    auto h = cohomology_group(g, 3, g->order());
    ASSERT_EQ(h.representatives.size(), h.invariant_factors.size());
    for (std::size_t i = 0; i < h.representatives.size(); ++i) {
      const auto& r = h.representatives[i];
      EXPECT_TRUE(is_cocycle(r).ok);
      EXPECT_FALSE(is_coboundary(r));
      // order of the class is the invariant factor
      const auto f = h.invariant_factors[i];
      EXPECT_TRUE(is_coboundary(f * r)) << name;
      for (std::int64_t d = 1; d < f; ++d)
        if (f % d == 0) EXPECT_FALSE(is_coboundary(d * r)) << name;
    }
  }
}

TEST(Cohomology, CoboundariesAreRecognizedAndInverted) {
  std::mt19937_64 rng(99);
  for (const char* name : {"Z3", "Z2xZ2", "S3"}) {
    auto g = grp(name);
    auto h = cohomology_group(g, 3, 6);
    for (int t = 0; t < 10; ++t) {
      auto c = coboundary(random_cochain(g, 2, 6, rng));
      EXPECT_TRUE(is_coboundary(c));
      auto pre = coboundary_preimage(*h.data, c);
      ASSERT_TRUE(pre.has_value());
      EXPECT_EQ(coboundary(*pre).values(), c.values());
      // shifting a representative by a coboundary keeps its label
      if (!h.representatives.empty())
        EXPECT_EQ(class_label(*h.data, h.representatives[0] + c), class_label(*h.data, h.representatives[0]));
    }
  }
}

TEST(Cohomology, U1Orders) {
  EXPECT_EQ(u1_cohomology(build_group("Z1"), 3).order(), 1);
  EXPECT_EQ(u1_cohomology(build_group("Z2"), 3).invariant_factors, std::vector<std::int64_t>{2});
  EXPECT_EQ(u1_cohomology(build_group("Z3"), 3).invariant_factors, std::vector<std::int64_t>{3});
  EXPECT_EQ(u1_cohomology(build_group("Z4"), 3).order(), 4);
  EXPECT_EQ(u1_cohomology(build_group("S3"), 3).order(), 6);
  EXPECT_EQ(u1_cohomology(build_group("Z2xZ2"), 2).order(), 2);
  EXPECT_EQ(u1_cohomology(build_group("Z2xZ2"), 3).order(), 8);
}

TEST(Cohomology, U1AgreesWithTorsionForSmallGroups) {
  // universal coefficients: H^3(G, Z/N) = H^3(G, U(1)) + H^2(G, U(1)) once exp(G) divides N
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "D4", "Q8"}) {
    auto g = grp(name);
    const int n = g->order();
    EXPECT_EQ(cohomology_group(g, 3, n).order(), u1_cohomology(*g, 3).order() * u1_cohomology(*g, 2).order()) << name;
  }
  EXPECT_EQ(u1_cohomology(build_group("Z2xZ2"), 2).order(), 2);
  EXPECT_EQ(u1_cohomology(build_group("Z2xZ2"), 3).order(), 8);
  EXPECT_EQ(u1_cohomology(build_group("Q8"), 2).order(), 1);
}

TEST(Cohomology, SizeGuards) {
  try {
    cohomology_group(grp("S4"), 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource);
  }
  EXPECT_THROW(cohomology_group(grp("Z2"), 5, 2), Error);
}

TEST(Cohomology, TransgressionExamples) {
  auto zero = TorsionCocycle(grp("S3"), 3, 6);
  for (int g = 0; g < 6; ++g) EXPECT_TRUE(transgress(zero, g).cocycle.is_zero());

  auto w = examples::cyclic_h3_generator(2);
  auto t = transgress(w, 1);
  EXPECT_TRUE(is_cocycle(t.cocycle).ok);
  EXPECT_EQ(t.centralizer.group.order(), 2);
  // golden: theta_g(g,g) = omega(g,g,g) three times = 1 mod 2, which is not a coboundary
  EXPECT_EQ(t.cocycle(1, 1), 1);
  EXPECT_FALSE(is_coboundary(t.cocycle));

  auto s3 = grp("S3");
  auto h = cohomology_group(s3, 3, 6);
  for (const auto& r : h.representatives)
    for (int g = 0; g < 6; ++g) EXPECT_TRUE(is_cocycle(transgress(r, g).cocycle).ok);
  EXPECT_EQ(transgress(h.representatives[0], 1).centralizer.group.order(), 2);
}

TEST(Cohomology, ProjectiveIrrepDims) {
  EXPECT_EQ(projective_irrep_dims(TorsionCocycle(grp("Z2"), 2, 2)), (std::vector<int>{1, 1}));
  auto k = grp("Z2xZ2");
  auto h2 = cohomology_group(k, 2, 2);
  ASSERT_EQ(h2.invariant_factors, (std::vector<std::int64_t>{2, 2, 2}));
  // half of the eight classes survive in H^2(G, U(1)) = Z/2 and have a single 2-dim irrep
  std::map<std::vector<int>, int> seen;
  for (int mask = 0; mask < 8; ++mask) {
    TorsionCocycle c(k, 2, 2);
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) c = c + h2.representatives[i];
    auto d = projective_irrep_dims(c);
    std::sort(d.begin(), d.end());
    ++seen[d];
  }
  EXPECT_EQ(seen, (std::map<std::vector<int>, int>{{{1, 1, 1, 1}, 4}, {{2}, 4}}));
  auto dims = projective_irrep_dims(TorsionCocycle(grp("S3"), 2, 2));
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 2}));
  // sum of squares is |H| for every transgressed cocycle on D4 and Q8
  for (const char* name : {"D4", "Q8"}) {
    auto g = grp(name);
    for (const auto& r : cohomology_group(g, 3, 8).representatives)
      for (int x = 0; x < g->order(); ++x) {
        auto t = transgress(r, x);
        int s = 0;
        for (int d : projective_irrep_dims(t.cocycle)) s += d * d;
        EXPECT_EQ(s, t.centralizer.group.order()) << name;
      }
  }
}
