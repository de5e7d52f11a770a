#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gxcat.hpp"

using namespace gxcat;

namespace {

// brute-force conjugation orbits, independent of conjugacy_data
std::multiset<int> orbit_sizes(const FiniteGroup& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::multiset<int> sizes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<int> orbit;
    for (int t = 0; t < g.order(); ++t) orbit.insert(g.mul(g.mul(t, x), g.inv(t)));
    for (int y : orbit) seen[y] = true;
    sizes.insert(static_cast<int>(orbit.size()));
  }
  return sizes;
}

bool is_hom(const LinearCharacter& c, const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (c.values[g.mul(a, b)] != mod(c.values[a] + c.values[b], c.N)) return false;
  return c.values[0] == 0;
}

}  // namespace

TEST(Groups, PresetsAreGroups) {
  const std::map<std::string, int> orders{{"Z1", 1}, {"Z2", 2}, {"Z3", 3}, {"Z4", 4},  {"Z5", 5}, {"Z6", 6},
                                          {"Z2xZ2", 4}, {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"S4", 24}};
  EXPECT_EQ(preset_names().size(), 11u);
  for (const auto& [name, order] : orders) {
    auto g = build_group(name);
    EXPECT_EQ(g.order(), order) << name;
    for (int a = 0; a < order; ++a) {
      EXPECT_EQ(g.mul(0, a), a);
      EXPECT_EQ(g.mul(a, 0), a);
      EXPECT_EQ(g.mul(g.inv(a), a), 0);
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))) << name;
    }
  }
}

TEST(Groups, ExplicitTableAccepted) {
  FiniteGroup g("klein", 4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.element_order(3), 2);
}

TEST(Groups, CorruptedTableRejected) {
  std::vector<int> t{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  t[6] = 2;  // 1*2 = 2 breaks the Latin square and associativity
  try {
    FiniteGroup g("bad", 4, t);
    FAIL() << "accepted a corrupted table";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
}

TEST(Groups, NonAssociativeLatinSquareRejected) {
  // a loop of order 5 that is not a group
  std::vector<int> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(FiniteGroup("loop", 5, t), Error);
}

TEST(Groups, ConjugacyClassesMatchBruteForce) {
  for (const auto& name : preset_names()) {
    auto g = build_group(name);
    auto cd = conjugacy_data(g);
    std::multiset<int> sizes;
    int total = 0;
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
      sizes.insert(static_cast<int>(cd.classes[c].size()));
      total += static_cast<int>(cd.classes[c].size());
      EXPECT_EQ(cd.reps[c], *std::min_element(cd.classes[c].begin(), cd.classes[c].end()));
      EXPECT_EQ(cd.classes[c].size() * cd.centralizers[c].size(), static_cast<std::size_t>(g.order())) << name;
      // centralizer closed under multiplication
      std::set<int> z(cd.centralizers[c].begin(), cd.centralizers[c].end());
      for (int a : z)
        for (int b : z) EXPECT_TRUE(z.count(g.mul(a, b)));
    }
    EXPECT_EQ(total, g.order());
    EXPECT_EQ(sizes, orbit_sizes(g)) << name;
  }
}

TEST(Groups, ConjugacyExamples) {
  auto z3 = conjugacy_data(build_group("Z3"));
  EXPECT_EQ(z3.classes.size(), 3u);
  for (const auto& c : z3.centralizers) EXPECT_EQ(c.size(), 3u);
  auto s3 = conjugacy_data(build_group("S3"));
  ASSERT_EQ(s3.classes.size(), 3u);
  std::multiset<std::pair<std::size_t, std::size_t>> got;
  for (std::size_t c = 0; c < 3; ++c) got.insert({s3.classes[c].size(), s3.centralizers[c].size()});
  EXPECT_EQ(got, (std::multiset<std::pair<std::size_t, std::size_t>>{{1, 6}, {3, 2}, {2, 3}}));
  EXPECT_EQ(orbit_sizes(build_group("Q8")), (std::multiset<int>{1, 1, 2, 2, 2}));
  EXPECT_EQ(conjugacy_data(build_group("Q8")).classes.size(), 5u);
}

TEST(Groups, AbelianCharacters) {
  EXPECT_EQ(abelian_characters(build_group("Z1"), 7).size(), 1u);
  EXPECT_EQ(abelian_characters(build_group("S3"), 2).size(), 2u);
  EXPECT_EQ(abelian_characters(build_group("Z3"), 3).size(), 3u);
  EXPECT_THROW(abelian_characters(build_group("Z3"), 2), Error);
  for (const auto& name : preset_names()) {
    auto g = build_group(name);
    const int e = abelianization_exponent(g);
    auto chars = abelian_characters(g, 2 * e);
    // |G/[G,G]| by brute force
    EXPECT_EQ(chars.size() * commutator_subgroup(g).size(), static_cast<std::size_t>(g.order())) << name;
    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& c : chars) {
      EXPECT_TRUE(is_hom(c, g));
      distinct.insert(c.values);
    }
    EXPECT_EQ(distinct.size(), chars.size());
    // closed under pointwise addition
    for (const auto& a : chars)
      for (const auto& b : chars) {
        std::vector<std::int64_t> s(a.values.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod(a.values[i] + b.values[i], a.N);
        EXPECT_TRUE(distinct.count(s));
      }
  }
}

TEST(Groups, CharacterTableOrthogonality) {
  for (const auto& name : preset_names()) {
    auto g = build_group(name);
    auto ct = character_table(g);
    EXPECT_EQ(ct.dims.size(), ct.conj.classes.size()) << name;
    int sq = 0;
    for (int d : ct.dims) sq += d * d;
    EXPECT_EQ(sq, g.order()) << name;
    for (std::size_t i = 0; i < ct.dims.size(); ++i)
      for (std::size_t j = 0; j < ct.dims.size(); ++j) {
        std::complex<double> s = 0;
        for (int x = 0; x < g.order(); ++x)
          s += ct.value(static_cast<int>(i), x) * std::conj(ct.value(static_cast<int>(j), x));
        EXPECT_NEAR(std::abs(s - std::complex<double>(i == j ? g.order() : 0, 0)), 0.0, 1e-8) << name;
      }
  }
}

TEST(Groups, Automorphisms) {
  EXPECT_EQ(automorphisms(build_group("Z1")).size(), 1u);
  EXPECT_EQ(automorphisms(build_group("Z5")).size(), 4u);
  EXPECT_EQ(automorphisms(build_group("Z2xZ2")).size(), 6u);
  EXPECT_EQ(automorphisms(build_group("S3")).size(), 6u);
  EXPECT_EQ(automorphisms(build_group("D4")).size(), 8u);
  EXPECT_EQ(automorphisms(build_group("Q8")).size(), 24u);
}

TEST(Groups, PermutationGroups) {
  auto c3 = permutation_group(3, {{1, 2, 0}});
  EXPECT_EQ(c3.group.order(), 3);
  auto s3 = permutation_group(3, {{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(s3.group.order(), 6);
  EXPECT_FALSE(s3.group.is_abelian());
}

TEST(Groups, Subgroups) {
  auto s3 = build_group("S3");
  auto a3 = generated_subgroup(s3, {3});
  EXPECT_EQ(a3.size(), 3u);
  auto sub = make_subgroup(s3, a3);
  EXPECT_EQ(sub.group.order(), 3);
  for (std::size_t i = 0; i < a3.size(); ++i) EXPECT_EQ(sub.to_local(sub.to_parent[i]), static_cast<int>(i));
  EXPECT_EQ(sub.to_local(1), -1);
}
