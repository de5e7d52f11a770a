#pragma once

#include <cmath>
#include <string>

#include "gxcat.hpp"

namespace testing_util {

inline gxcat::io::LoadedRing corpus_ring(const std::string& name) {
  return gxcat::io::ring_from_json(gxcat::io::load_json(gxcat::default_corpus_dir() / (name + ".json")));
}

inline gxcat::PointedGXData corpus_pointed(const std::string& name) {
  return gxcat::io::pointed_from_json(gxcat::io::load_json(gxcat::default_corpus_dir() / (name + ".json")));
}

inline gxcat::GroupPtr grp(const std::string& name) {
  return std::make_shared<const gxcat::FiniteGroup>(gxcat::build_group(name));
}

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

// power iteration on sum_i N_i, an oracle independent of pf_dims
inline std::vector<double> power_dims(const gxcat::GradedFusionRing& r) {
  const int n = r.size();
  std::vector<double> v(static_cast<std::size_t>(n), 1.0);
  for (int it = 0; it < 2000; ++it) {
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) w[k] += r.N(i, j, k) * v[j];
    const double s = w[r.unit] > 0 ? w[r.unit] : 1.0;
    for (auto& x : w) x /= s;
    v = w;
  }
  return v;
}

}  // namespace testing_util
