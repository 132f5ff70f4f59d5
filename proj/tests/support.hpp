#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tul/constructors.hpp"
#include "tul/graph.hpp"

namespace testing_support {

inline tul::Permutation perm1(std::vector<int> one_based) {
  return tul::Permutation::from_one_based(one_based);
}

inline std::vector<std::vector<int>> images_of(const tul::ColoredGraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& s : g.sigmas()) out.emplace_back(s.images().begin(), s.images().end());
  return out;
}

// (m,n)-cycle with m_colors = {0..m-1} and n_colors = {m..m+n-1}.
inline tul::CycleSpec canonical(int k, int m, int n) {
  tul::CycleSpec spec{k, {}, {}};
  for (int i = 0; i < m; ++i) spec.m_colors.push_back(i);
  for (int i = 0; i < n; ++i) spec.n_colors.push_back(m + i);
  return spec;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace testing_support
