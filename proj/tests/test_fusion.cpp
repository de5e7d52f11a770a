#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"

using namespace gxcat;
using namespace testing_util;

namespace {

GradedFusionRing ising() { return corpus_ring("ising").ring; }
GradedFusionRing fib() { return corpus_ring("fibonacci").ring; }

GradedFusionRing undeclared(GradedFusionRing r) {
  r.dims.reset();
  return r;
}

}  // namespace

TEST(Fusion, CorpusRingsValidate) {
  for (const char* name : {"vect", "ising", "ising_z2graded", "fibonacci", "rep_z2", "rep_z3", "rep_s3", "toric_code",
                           "double_semion", "d_s3", "fib_fib_swap", "ising_ising_swap"}) {
    auto lr = corpus_ring(name);
    auto rep = validate_ring(lr.ring);
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.ok() ? "" : rep.failures[0].check + " " + rep.failures[0].detail);
    if (lr.action) EXPECT_TRUE(validate_action(lr.ring, *lr.action).ok()) << name;
  }
}

TEST(Fusion, IsingWithDoubledCoefficientFails) {
  auto r = ising();
  r.dims.reset();
  r.N(1, 1, 2) = 2;
  r.N(1, 2, 1) = 2;  // keep Frobenius reciprocity so the failure is associativity
  r.N(2, 1, 1) = 2;
  auto rep = validate_ring(r);
  ASSERT_FALSE(rep.ok());
  EXPECT_TRUE(rep.has("associativity"));
}

TEST(Fusion, BrokenCorpusRingFails) {
  auto r = io::ring_from_json(io::load_json(default_corpus_dir() / "broken_ring.json")).ring;
  auto rep = validate_ring(r);
  ASSERT_FALSE(rep.ok());
  EXPECT_TRUE(rep.has("associativity"));
}

TEST(Fusion, PerronFrobeniusDims) {
  auto v = pf_dims(corpus_ring("vect").ring);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].is_exact() && v[0].exact() == QuadraticNumber(1));

  auto f = pf_dims(fib());
  ASSERT_TRUE(f[1].is_exact());
  EXPECT_EQ(f[1].exact(), QuadraticNumber(1, 1, 5, 2));

  auto i = pf_dims(undeclared(ising()));
  ASSERT_TRUE(i[1].is_exact());
  EXPECT_EQ(i[1].exact(), QuadraticNumber(0, 1, 2, 1));
  EXPECT_EQ(global_dim(i).exact(), QuadraticNumber(4));

  for (const char* name : {"ising", "fibonacci", "rep_s3", "d_s3", "fib_fib_swap", "ising_ising_swap"}) {
    auto r = undeclared(corpus_ring(name).ring);
    auto d = pf_dims(r);
    auto oracle = power_dims(r);
    for (int k = 0; k < r.size(); ++k) EXPECT_NEAR(d[k].to_double(), oracle[k], 1e-9) << name;
    // d_i d_j = sum_k N_ij^k d_k on all pairs
    for (int a = 0; a < r.size(); ++a)
      for (int b = 0; b < r.size(); ++b) {
        Real s(0);
        for (int c = 0; c < r.size(); ++c) s += Real(r.N(a, b, c)) * d[c];
        EXPECT_TRUE(approx_equal(s, d[a] * d[b])) << name;
      }
  }
}

TEST(Fusion, Sectors) {
  auto s = sector_dims(undeclared(ising()));
  ASSERT_EQ(s.sector.size(), 1u);
  EXPECT_EQ(s.sector[0].exact(), QuadraticNumber(4));

  auto g = sector_dims(corpus_ring("ising_z2graded").ring);
  ASSERT_EQ(g.sector.size(), 2u);
  EXPECT_EQ(g.sector[0].exact(), QuadraticNumber(2));
  EXPECT_EQ(g.sector[1].exact(), QuadraticNumber(2));
  EXPECT_TRUE(g.full_spectrum);
  EXPECT_TRUE(g.homogeneous);
  EXPECT_EQ(g.global.exact(), global_dim(ising()).exact());

  // a graded ring with an empty sector
  auto r = pointed_ring(build_group("Z2"));
  r.group = grp("Z2");
  auto e = sector_dims(r);
  EXPECT_FALSE(e.full_spectrum);
  EXPECT_FALSE(e.homogeneous);
}

TEST(Fusion, Actions) {
  auto ff = corpus_ring("fib_fib_swap");
  ASSERT_TRUE(ff.action.has_value());
  EXPECT_TRUE(validate_action(ff.ring, *ff.action).ok());
  auto v = corpus_ring("vect").ring;
  EXPECT_TRUE(validate_action(v, trivial_action(v, grp("S3"))).ok());

  // swap declared on Ising (x) Fib: build the 6-simple product and swap factor labels
  auto i = ising();
  auto f = fib();
  std::vector<std::string> labels;
  for (const auto& a : i.labels)
    for (const auto& b : f.labels) labels.push_back(a + "," + b);
  std::vector<std::tuple<std::string, std::string, std::string, int>> rules;
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          for (int a3 = 0; a3 < 3; ++a3)
            for (int b3 = 0; b3 < 2; ++b3)
              if (int m = i.N(a1, a2, a3) * f.N(b1, b2, b3))
                rules.emplace_back(labels[a1 * 2 + b1], labels[a2 * 2 + b2], labels[a3 * 2 + b3], m);
  auto prod = make_ring(labels, "1,1", rules);
  RingGAction swap;
  swap.group = grp("Z2");
  swap.perms = {{0, 1, 2, 3, 4, 5}, {0, 2, 1, 3, 4, 5}};  // exchanges (1,tau) and (sigma,1)
  EXPECT_FALSE(validate_action(prod, swap).ok());
}

TEST(Fusion, TensorPowers) {
  auto z2 = permutation_group(2, {{1, 0}});
  auto [vv, va] = tensor_power(corpus_ring("vect").ring, 2, z2);
  EXPECT_EQ(vv.size(), 1);
  EXPECT_EQ(va.perms[1], std::vector<int>{0});

  auto [ff, fa] = tensor_power(fib(), 2, z2);
  EXPECT_EQ(ff.size(), 4);
  auto d = pf_dims(ff);
  std::vector<double> got;
  for (const auto& x : d) got.push_back(x.to_double());
  std::sort(got.begin(), got.end());
  EXPECT_NEAR(got[0], 1, 1e-12);
  EXPECT_NEAR(got[1], kPhi, 1e-12);
  EXPECT_NEAR(got[2], kPhi, 1e-12);
  EXPECT_NEAR(got[3], kPhi * kPhi, 1e-12);
  const Real fg = global_dim(fib());
  EXPECT_EQ(global_dim(ff).exact(), (fg * fg).exact());

  auto [ii, ia] = tensor_power(ising(), 2, z2);
  EXPECT_EQ(ii.size(), 9);
  EXPECT_EQ(global_dim(undeclared(ii)).exact(), QuadraticNumber(16));

  auto z3 = permutation_group(3, {{1, 2, 0}});
  auto [f3, a3] = tensor_power(fib(), 3, z3);
  EXPECT_EQ(f3.size(), 8);
  EXPECT_TRUE(validate_action(f3, a3).ok());
  EXPECT_EQ(global_dim(f3).exact(), (fg * fg * fg).exact());
  EXPECT_THROW(tensor_power(fib(), 5, permutation_group(5, {{1, 2, 3, 4, 0}})), Error);
}

TEST(Fusion, Obstruction) {
  auto z2 = permutation_group(2, {{1, 0}});
  auto [vv, va] = tensor_power(corpus_ring("vect").ring, 2, z2);
  EXPECT_FALSE(invertible_sector_obstruction(vv, va, 1).has_value());
  for (const char* name : {"fib_fib_swap", "ising_ising_swap"}) {
    auto lr = corpus_ring(name);
    EXPECT_FALSE(invertible_sector_obstruction(lr.ring, *lr.action, 0).has_value());
    auto w = invertible_sector_obstruction(lr.ring, *lr.action, 1);
    ASSERT_TRUE(w.has_value()) << name;
    EXPECT_NE(lr.action->apply(1, *w), *w);
  }
}

TEST(Fusion, Picard) {
  auto pi = picard(ising());
  ASSERT_EQ(pi.size(), 2);
  EXPECT_EQ(ising().labels[pi.labels[1]], "psi");
  EXPECT_EQ(pi.table, (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(picard(fib()).size(), 1);
  auto z3 = picard(pointed_ring(build_group("Z3")));
  EXPECT_EQ(z3.size(), 3);
  // cyclic: some element has order 3 under the table
  EXPECT_EQ(z3.table[1 * 3 + 1], 2);
}

TEST(Fusion, RepRings) {
  for (const char* name : {"Z3", "S3", "Q8", "S4"}) {
    auto g = build_group(name);
    auto r = rep_ring(g);
    EXPECT_TRUE(validate_ring(r).ok()) << name;
    auto ct = character_table(g);
    // fusion agrees with character products
    for (int a = 0; a < r.size(); ++a)
      for (int b = 0; b < r.size(); ++b)
        for (int x = 0; x < g.order(); ++x) {
          std::complex<double> s = 0;
          for (int c = 0; c < r.size(); ++c) s += static_cast<double>(r.N(a, b, c)) * ct.value(c, x);
          EXPECT_LT(std::abs(s - ct.value(a, x) * ct.value(b, x)), 1e-8) << name;
        }
    EXPECT_EQ(global_dim(r).exact(), QuadraticNumber(g.order()));
  }
}

TEST(Fusion, IsingMutationsAllRejected) {
  auto t = oracles::mutate_ring_all(ising());
  EXPECT_EQ(t.total, 27 * 2 - 17);  // 27 entries, 10 positive ones also move down
  EXPECT_EQ(t.rejected, t.total);
  EXPECT_EQ(t.disagreements, 0);
}
