#include "qotto/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qotto/cycle.hpp"
#include "qotto/evolution.hpp"
#include "qotto/parallel.hpp"

namespace qotto {

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = b;
  return out;
}

struct PointCheck {
  double u_diff = 0.0;
  double eta_diff = 0.0;
  double first_law = 0.0;
  double defect = 0.0;
  bool analytic = false;
  double analytic_lab = 0.0;
  double analytic_rot = 0.0;
};

PointCheck check_point(const EngineParams& p, std::size_t n_steps) {
  PointCheck out;
  const PropagatorResult lab = propagator_lab(p, n_steps);
  const PropagatorResult rot = propagator_rotating(p, n_steps);
  out.u_diff = max_abs_difference(lab.u, rot.u);
  out.defect = std::max(lab.unitarity_defect, rot.unitarity_defect);

  const CycleResult cyc = run_cycle_trace(p, lab.u);
  out.eta_diff = std::abs(efficiency_closed_form(p, cyc.xi) - cyc.eta);
  out.first_law = std::abs(cyc.work + cyc.q_hot + cyc.q_cold);

  if (p.g() == 1.0) {
    const UnitaryOp exact = analytic_propagator_g1(p);
    out.analytic = true;
    out.analytic_lab =
        max_abs_difference(propagator_lab(p, std::max(n_steps, kAnalyticCheckSteps)).u, exact);
    out.analytic_rot = max_abs_difference(rot.u, exact);
  }
  return out;
}

}  // namespace

std::vector<EngineParams> route_check_grid() {
  const EngineParams ref = EngineParams::reference();
  std::vector<EngineParams> grid;
  for (double tau : linspace(100.0, 400.0, 5)) {
    for (double g : linspace(-0.3, 1.0, 5)) {
      for (double pc : linspace(0.1, 0.45, 5)) {
        for (double ph : linspace(0.55, 0.99, 5)) {
          grid.push_back(ref.with_tau(microseconds(tau)).with_g(g).with_populations(pc, ph));
        }
      }
    }
  }
  return grid;
}

RouteComparison compare_routes(const std::vector<EngineParams>& grid, std::size_t n_steps,
                               std::size_t workers) {
  std::vector<PointCheck> checks(grid.size());
  parallel_for(grid.size(), workers,
               [&](std::size_t i) { checks[i] = check_point(grid[i], n_steps); });

  RouteComparison out;
  out.points = grid.size();
  for (const PointCheck& c : checks) {
    out.max_propagator_difference = std::max(out.max_propagator_difference, c.u_diff);
    out.max_efficiency_difference = std::max(out.max_efficiency_difference, c.eta_diff);
    out.max_first_law_residual = std::max(out.max_first_law_residual, c.first_law);
    out.max_unitarity_defect = std::max(out.max_unitarity_defect, c.defect);
    if (c.analytic) {
      ++out.analytic_points;
      out.max_analytic_difference_lab = std::max(out.max_analytic_difference_lab, c.analytic_lab);
      out.max_analytic_difference_rotating =
          std::max(out.max_analytic_difference_rotating, c.analytic_rot);
    }
  }
  return out;
}

}  // namespace qotto
