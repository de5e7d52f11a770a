#pragma once

// Standard small examples: cyclic 3-cocycle generators and a few braided pointed categories.

#include <memory>
#include <string>
#include <vector>

#include "gxcat/cohomology.hpp"
#include "gxcat/groups.hpp"
#include "gxcat/pointed.hpp"

namespace gxcat::examples {

/// omega(a,b,c) = a * floor((b+c)/n) on Z/n, valued in Z/n; generates H^3(Z/n, Z/n).
inline TorsionCocycle cyclic_h3_generator(int n) {
  auto g = std::make_shared<const FiniteGroup>(build_group("Z" + std::to_string(n)));
  TorsionCocycle w(g, 3, n);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) w.set({a, b, c}, b + c >= n ? a : 0);
  return w;
}

/// The three generators of H^3(Z2 x Z2, Z/2): carries in slots (i,j,k) of the two factors.
inline TorsionCocycle klein_h3_generator(int which) {
  auto g = std::make_shared<const FiniteGroup>(build_group("Z2xZ2"));
  // elements e a b ab, coordinates (bit0, bit1)
  static const int slots[3][3] = {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}};
  const auto& s = slots[which];
  TorsionCocycle w(g, 3, 2);
  for (int x = 1; x < 4; ++x)
    for (int y = 1; y < 4; ++y)
      for (int z = 1; z < 4; ++z) w.set({x, y, z}, ((x >> s[0]) & 1) * ((y >> s[1]) & 1) * ((z >> s[2]) & 1));
  return w;
}

inline GroupPtr klein(const std::string& name, std::vector<std::string> names) {
  return std::make_shared<const FiniteGroup>(name, 4, std::vector<int>{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0},
                                             std::move(names));
}

/// Toric code on {1, e, m, f}: b(x,y) = m(x) e(y) mod 2.
inline PointedGXData toric_code() {
  PointedGXData d = pointed_skeleton(klein("toric", {"1", "e", "m", "f"}), std::make_shared<const FiniteGroup>(), 2);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) d.b(x, y) = ((x >> 1) & 1) * (y & 1);
  return d;
}

/// Semion times anti-semion on {1, s, t, st}, N = 4.
inline PointedGXData double_semion() {
  PointedGXData d = pointed_skeleton(klein("semion2", {"1", "s", "t", "st"}), std::make_shared<const FiniteGroup>(), 4);
  for (int x = 1; x < 4; ++x)
    for (int y = 1; y < 4; ++y)
      for (int z = 1; z < 4; ++z) d.assoc.set({x, y, z}, 2 * ((x & y & z & 1) + ((x & y & z) >> 1 & 1)));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) d.b(x, y) = ((x & y & 1) + 3 * ((x & y) >> 1 & 1)) % 4;
  return d;
}

/// Rep(Z2) as a symmetric pointed category: everything trivial.
inline PointedGXData symmetric_z2() {
  return pointed_skeleton(std::make_shared<const FiniteGroup>(build_group("Z2")), std::make_shared<const FiniteGroup>(), 2);
}

}  // namespace gxcat::examples
