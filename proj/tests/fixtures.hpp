#pragma once

#include "pakstanley/arrangement.hpp"

namespace fixtures {

using pakstanley::Arrangement;
using pakstanley::build_from_sets;

inline Arrangement shi1_n2() { return build_from_sets(2, {{{1, 2}, {0, 1}}}); }

inline Arrangement shi1_n3() {
  return build_from_sets(3, {{{1, 2}, {0, 1}}, {{1, 3}, {0, 1}}, {{2, 3}, {0, 1}}});
}

// 1-Shi in dimension 3 without x1 - x2 = 1.
inline Arrangement two_shi_pairs() {
  return build_from_sets(3, {{{1, 2}, {0}}, {{1, 3}, {0, 1}}, {{2, 3}, {0, 1}}});
}

inline Arrangement catalan1_n3() {
  return build_from_sets(3, {{{1, 2}, {-1, 0, 1}}, {{1, 3}, {-1, 0, 1}}, {{2, 3}, {-1, 0, 1}}});
}

inline Arrangement shi2_n3() {
  return build_from_sets(
      3, {{{1, 2}, {-1, 0, 1, 2}}, {{1, 3}, {-1, 0, 1, 2}}, {{2, 3}, {-1, 0, 1, 2}}});
}

// {x1 - x3 = 0, x2 - x3 = 0}: (Y) holds, (X) fails.
inline Arrangement a1() { return build_from_sets(3, {{{1, 3}, {0}}, {{2, 3}, {0}}}); }

// {x1 - x2 = 1, x1 - x3 = 1}: (X) holds, (Y) fails.
inline Arrangement a2() { return build_from_sets(3, {{{1, 2}, {1}}, {{1, 3}, {1}}}); }

inline Arrangement empty(int n) { return build_from_sets(n, {}); }

inline pakstanley::MEpsData m103_data() {
  auto data = pakstanley::MEpsData::zeros(3);
  data.m = {1, 0, 3};
  data.set_epsilon(2, 3, 1);
  return data;
}

}  // namespace fixtures
