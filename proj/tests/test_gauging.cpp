#include <gtest/gtest.h>

#include <set>

#include "common.hpp"

using namespace gxcat;
using namespace testing_util;

namespace {

Real sum_squares(const std::vector<EquivariantSimple>& s) {
  Real t(0);
  for (const auto& x : s) t += x.dim * x.dim;
  return t;
}

// orbit-stabilizer count of equivariant simples with trivial stabilizer cocycles
int expected_count(const GradedFusionRing& r, const RingGAction& a) {
  const FiniteGroup& G = *a.group;
  std::set<int> seen;
  int total = 0;
  for (int x = 0; x < r.size(); ++x) {
    if (seen.count(x)) continue;
    std::vector<int> stab;
    for (int g = 0; g < G.order(); ++g) {
      seen.insert(a.apply(g, x));
      if (a.apply(g, x) == x) stab.push_back(g);
    }
    total += static_cast<int>(conjugacy_data(make_subgroup(G, stab).group).classes.size());
  }
  return total;
}

struct Embedded {
  GradedFusionRing ring;
  std::vector<int> embedding;
  GroupPtr group;
};

Embedded embedded(const std::string& name) {
  auto lr = corpus_ring(name);
  return {lr.ring, *lr.embedding, lr.embedding_group};
}

}  // namespace

TEST(Gauging, EquivariantizeExamples) {
  auto v = corpus_ring("vect").ring;
  auto ev = equivariantize(v, trivial_action(v, grp("Z2")));
  ASSERT_EQ(ev.simples.size(), 2u);
  EXPECT_EQ(ev.global_dim.exact(), QuadraticNumber(2));
  EXPECT_TRUE(ev.assumed_trivial);

  auto i = corpus_ring("ising").ring;
  auto ei = equivariantize(i, trivial_action(i, grp("Z2")));
  ASSERT_EQ(ei.simples.size(), 6u);
  EXPECT_EQ(ei.global_dim.exact(), QuadraticNumber(8));
  std::multiset<double> dims;
  for (const auto& s : ei.simples) dims.insert(std::round(s.dim.to_double() * 1e6) / 1e6);
  EXPECT_EQ(dims.count(1.0), 4u);
  EXPECT_EQ(dims.count(std::round(std::sqrt(2.0) * 1e6) / 1e6), 2u);

  auto ff = corpus_ring("fib_fib_swap");
  auto ef = equivariantize(ff.ring, *ff.action);
  ASSERT_EQ(ef.simples.size(), 5u);
  const Real fg = global_dim(corpus_ring("fibonacci").ring);
  EXPECT_EQ(ef.global_dim.exact(), (Real(2) * fg * fg).exact());
  // the free orbit {(1,tau),(tau,1)} carries the orbit-sum dimension 2 phi
  bool found = false;
  for (const auto& s : ef.simples)
    if (s.orbit.size() == 2) {
      found = true;
      EXPECT_NEAR(s.dim.to_double(), 2 * kPhi, 1e-12);
    }
  EXPECT_TRUE(found);
}

TEST(Gauging, EquivariantizeDimensionIdentityOnCorpus) {
  for (const char* name : {"fib_fib_swap", "ising_ising_swap"}) {
    auto lr = corpus_ring(name);
    auto e = equivariantize(lr.ring, *lr.action);
    EXPECT_EQ(static_cast<int>(e.simples.size()), expected_count(lr.ring, *lr.action)) << name;
    const Real want = Real(lr.action->group->order()) * global_dim(lr.ring);
    ASSERT_TRUE(e.global_dim.is_exact());
    EXPECT_EQ(e.global_dim.exact(), want.exact()) << name;
    EXPECT_EQ(sum_squares(e.simples).exact(), want.exact()) << name;
    // per orbit: sum of irrep_dim^2 = |stabilizer|
    std::map<int, int> per_orbit;
    for (const auto& s : e.simples) per_orbit[s.orbit[0]] += s.irrep_dim * s.irrep_dim;
    for (const auto& s : e.simples) EXPECT_EQ(per_orbit[s.orbit[0]], s.stabilizer.group.order());
  }
  // S3 acting on Fib^3 by permuting slots
  auto s3 = permutation_group(3, {{1, 2, 0}, {1, 0, 2}});
  auto [f3, a3] = tensor_power(corpus_ring("fibonacci").ring, 3, s3);
  auto e3 = equivariantize(f3, a3);
  EXPECT_EQ(static_cast<int>(e3.simples.size()), expected_count(f3, a3));
  EXPECT_EQ(e3.global_dim.exact(), (Real(6) * global_dim(f3)).exact());
}

TEST(Gauging, EquivariantRingIsAFusionRing) {
  for (const char* name : {"fib_fib_swap", "ising_ising_swap"}) {
    auto lr = corpus_ring(name);
    auto er = equivariant_ring(lr.ring, *lr.action);
    EXPECT_TRUE(validate_ring(er.ring).ok()) << name;
    EXPECT_EQ(er.rep_embedding.size(), 2u);
    auto d = pf_dims(er.ring);
    for (std::size_t k = 0; k < d.size(); ++k) EXPECT_TRUE(approx_equal(d[k], er.simples.simples[k].dim)) << name;
  }
}

TEST(Gauging, CrossedProductExamples) {
  auto rz2 = embedded("rep_z2");
  auto c1 = crossed_product(rz2.ring, rz2.embedding, *rz2.group);
  EXPECT_EQ(c1.global_dim.exact(), QuadraticNumber(1));
  EXPECT_EQ(c1.output_labels.size(), 1u);
  for (int e : c1.end_dim) EXPECT_EQ(e, 1);

  auto toric = embedded("toric_code");
  auto c2 = crossed_product(toric.ring, toric.embedding, *toric.group);
  EXPECT_EQ(c2.global_dim.exact(), QuadraticNumber(2));
  ASSERT_EQ(c2.output_labels.size(), 2u);
  std::set<int> degrees;
  for (std::size_t y = 0; y < 2; ++y) {
    EXPECT_EQ(c2.output_dims[y].exact(), QuadraticNumber(1));
    ASSERT_TRUE(c2.output_degrees[y].has_value());
    degrees.insert(*c2.output_degrees[y]);
  }
  EXPECT_EQ(degrees, (std::set<int>{0, 1}));

  // trivial G, S = unit: nothing changes
  auto v = corpus_ring("fibonacci").ring;
  auto c3 = crossed_product(v, {v.unit}, build_group("Z1"));
  EXPECT_EQ(c3.output_labels.size(), 2u);
  EXPECT_TRUE(approx_equal(c3.global_dim, global_dim(v)));
}

TEST(Gauging, CrossedProductDimensionIdentity) {
  for (const char* name : {"rep_z2", "rep_z3", "rep_s3", "toric_code", "double_semion", "d_s3"}) {
    auto e = embedded(name);
    auto cp = crossed_product(e.ring, e.embedding, *e.group);
    EXPECT_TRUE(approx_equal(cp.global_dim * Real(e.group->order()), global_dim(e.ring))) << name;
    if (cp.global_dim.is_exact())
      EXPECT_EQ((cp.global_dim * Real(e.group->order())).exact(), global_dim(e.ring).exact()) << name;
  }
}

TEST(Gauging, HolomorphicChainFromDoubles) {
  // both classes of omega on Z2: exactly two invertible outputs, one per degree
  for (const char* name : {"toric_code", "double_semion"}) {
    auto e = embedded(name);
    auto cp = crossed_product(e.ring, e.embedding, *e.group);
    ASSERT_EQ(cp.output_labels.size(), 2u) << name;
    for (const auto& d : cp.output_dims) EXPECT_EQ(d.exact(), QuadraticNumber(1));
  }
}

TEST(Gauging, Roundtrip) {
  for (const char* name : {"rep_z2", "rep_z3", "toric_code", "double_semion", "rep_s3", "d_s3"}) {
    auto e = embedded(name);
    auto rt = roundtrip_check(e.ring, e.embedding, *e.group);
    EXPECT_TRUE(rt.ok()) << name;
    EXPECT_TRUE(approx_equal(rt.regauged_global, rt.input_global)) << name;
  }
  auto rz3 = embedded("rep_z3");
  auto rt = roundtrip_check(rz3.ring, rz3.embedding, *rz3.group);
  EXPECT_EQ(rt.crossed_global.exact(), QuadraticNumber(1));
  EXPECT_EQ(rt.regauged_global.exact(), QuadraticNumber(3));
  auto v = corpus_ring("vect").ring;
  EXPECT_TRUE(roundtrip_check(v, {0}, build_group("Z1")).ok());
}

TEST(Gauging, ObstructionAgreesWithCrossedProduct) {
  // crossed product of the swap-equivariantized ring: degree-swap outputs never have budget 1
  for (const char* name : {"fib_fib_swap", "ising_ising_swap"}) {
    auto lr = corpus_ring(name);
    ASSERT_TRUE(invertible_sector_obstruction(lr.ring, *lr.action, 1).has_value());
    auto er = equivariant_ring(lr.ring, *lr.action);
    auto cp = crossed_product(er.ring, er.rep_embedding, *lr.action->group);
    EXPECT_TRUE(approx_equal(cp.global_dim, global_dim(lr.ring))) << name;
    for (const auto& c : cp.components)
      if (c.degree && *c.degree == 1) EXPECT_FALSE(approx_equal(c.budget, Real(1))) << name;
  }
}

TEST(Gauging, PermutationOrbifoldPicard) {
  auto z2 = permutation_group(2, {{1, 0}});
  auto ising = perm_orbifold_picard(corpus_ring("ising").ring, 2, z2);
  EXPECT_EQ(ising.pairs.size(), 4u);
  EXPECT_EQ(ising.brute_force, 4);
  auto fib = perm_orbifold_picard(corpus_ring("fibonacci").ring, 2, z2);
  EXPECT_EQ(fib.pairs.size(), 2u);
  EXPECT_EQ(fib.brute_force, 2);
  auto vect = perm_orbifold_picard(corpus_ring("vect").ring, 3, permutation_group(3, {{1, 2, 0}}));
  EXPECT_EQ(vect.pairs.size(), 3u);
  EXPECT_EQ(vect.brute_force, 3);
  // |Pic(b)| * |G_ab| for S3 on Ising^3
  auto s3 = perm_orbifold_picard(corpus_ring("ising").ring, 3, permutation_group(3, {{1, 2, 0}, {1, 0, 2}}));
  EXPECT_EQ(s3.pairs.size(), 4u);
  EXPECT_EQ(s3.brute_force, 4);
}
