#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pakstanley/arrangement.hpp"

namespace pakstanley {

struct InterpolationStep {
  Arrangement arrangement;
  std::optional<Hyperplane> added;  // empty for the starting (m-1)-Catalan arrangement
  std::optional<MEpsData> m_eps;
  std::size_t regions = 0;
  std::size_t parking_functions = 0;
  std::int64_t determinant = 0;
  bool bijective = false;
};

// Level-m hyperplanes in insertion order: columns k = n, ..., 1; within a
// column first x_i - x_k = m for i < k, then x_i - x_k = m for i > k, each by
// increasing i. For n = 3, m = 1 this is x1-x3=1, x2-x3=1, x1-x2=1, x3-x2=1,
// x2-x1=1, x3-x1=1, passing through the m-Shi arrangement after n(n-1)/2
// steps. Every prefix is an (m, eps)-arrangement.
std::vector<Hyperplane> interpolation_order(int n, int m);

// Walks from the (m-1)-Catalan to the m-Catalan arrangement. Supports
// 2 <= n <= 4 and m >= 1; throws ArrangementError otherwise, and
// std::logic_error if a step is not (m, eps)-recognisable.
std::vector<InterpolationStep> interpolate(int n, int m);

}  // namespace pakstanley
