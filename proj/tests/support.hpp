#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "flagmn/perm.hpp"

namespace testsupport {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline flagmn::Permutation random_perm(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng());
  return flagmn::Permutation::from_one_line(v);
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline flagmn::Permutation P(const char* s, int n = 0) { return flagmn::parse_permutation(s, n); }

}  // namespace testsupport
