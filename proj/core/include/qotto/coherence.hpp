#pragma once

#include <cstddef>
#include <vector>

#include "qotto/evolution.hpp"
#include "qotto/mat2.hpp"
#include "qotto/model.hpp"

namespace qotto {

/// Sum of |off-diagonal| entries of rho in `basis`, i.e. 2 |rho_01| for a
/// qubit. Throws DomainError if the basis is not orthonormal within 1e-10.
double l1_coherence(const DensityOp& rho, const EigenPair& basis);

struct CoherenceSample {
  double t = 0.0;
  /// Expanding state in the instantaneous eigenbasis of h_exp(t).
  double c_exp = 0.0;
  /// Compressing state in the instantaneous eigenbasis of h_comp(t).
  double c_comp = 0.0;
};

struct CoherenceReport {
  /// End of expansion, in the H_hot eigenbasis.
  double c_exp = 0.0;
  /// End of compression, in the H_cold eigenbasis.
  double c_comp = 0.0;
  /// Empty unless requested.
  std::vector<CoherenceSample> series;
  /// Largest sampled values along each stroke; 0 without a series.
  double peak_exp = 0.0;
  double peak_comp = 0.0;
};

/// Runs the strokes and evaluates end-of-stroke coherence. With
/// series_points >= 2 it also samples the stroke at evenly spaced times,
/// including both endpoints.
CoherenceReport stroke_coherence(const EngineParams& params, std::size_t n_steps = kDefaultSteps,
                                 std::size_t series_points = 0);

}  // namespace qotto
