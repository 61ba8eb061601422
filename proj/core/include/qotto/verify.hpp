#pragma once

#include <cstddef>
#include <vector>

#include "qotto/model.hpp"

namespace qotto {

/// Maximum deviations between the two propagator routes and between the
/// trace and closed-form cycle evaluations over a parameter grid.
struct RouteComparison {
  std::size_t points = 0;
  double max_propagator_difference = 0.0;
  double max_efficiency_difference = 0.0;
  double max_first_law_residual = 0.0;
  double max_unitarity_defect = 0.0;
  /// Largest deviation from the closed form among g == 1 points, lab route
  /// at kAnalyticCheckSteps and rotating route at the grid resolution.
  std::size_t analytic_points = 0;
  double max_analytic_difference_lab = 0.0;
  double max_analytic_difference_rotating = 0.0;
};

/// The lab route is second order; this resolution puts it below 1e-10 of the
/// g = 1 closed form.
inline constexpr std::size_t kAnalyticCheckSteps = 100'000;

/// 5 x 5 x 5 x 5 grid: tau in [100, 400] us, g in [-0.3, 1],
/// p_plus_cold in [0.1, 0.45], p_plus_hot in [0.55, 0.99]; reference
/// frequencies. Endpoints are exact.
std::vector<EngineParams> route_check_grid();

RouteComparison compare_routes(const std::vector<EngineParams>& grid, std::size_t n_steps,
                               std::size_t workers = 0);

}  // namespace qotto
