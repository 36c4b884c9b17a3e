#include "pakstanley/interpolate.hpp"

#include <stdexcept>

#include "pakstanley/parking.hpp"
#include "pakstanley/region.hpp"

namespace pakstanley {

std::vector<Hyperplane> interpolation_order(int n, int m) {
  std::vector<Hyperplane> order;
  for (int k = n; k >= 1; --k) {
    for (int i = 1; i < k; ++i) order.push_back({i, k, m});
    for (int i = k + 1; i <= n; ++i) order.push_back({k, i, -m});
  }
  return order;
}

std::vector<InterpolationStep> interpolate(int n, int m) {
  if (n < 2 || n > 4) {
    throw ArrangementError("interpolation supports 2 <= n <= 4, got n = " + std::to_string(n));
  }
  if (m < 1) throw ArrangementError("interpolation needs m >= 1, got m = " + std::to_string(m));

  std::vector<Hyperplane> current = catalan_arrangement(n, m - 1).hyperplanes();
  std::vector<std::optional<Hyperplane>> additions{std::nullopt};
  for (const auto& h : interpolation_order(n, m)) additions.emplace_back(h);

  std::vector<InterpolationStep> steps;
  for (const auto& added : additions) {
    if (added) current.push_back(*added);
    InterpolationStep step;
    step.arrangement = build_from_hyperplanes(n, current);
    step.added = added;
    step.m_eps = recognize_m_eps(step.arrangement);
    if (!step.m_eps) {
      throw std::logic_error("interpolation step " + std::to_string(steps.size()) +
                             " is not an (m,eps)-arrangement");
    }
    const auto table = enumerate_regions(step.arrangement);
    const auto report = labeling_report(step.arrangement, table);
    const auto d = build_d_graph(step.arrangement);
    step.regions = report.regions;
    step.parking_functions = report.parking_functions;
    step.determinant = count_parking_determinant(d);
    step.bijective = report.bijective;
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace pakstanley
