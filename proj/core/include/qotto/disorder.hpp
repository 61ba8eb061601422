#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "qotto/model.hpp"
#include "qotto/rng.hpp"

namespace qotto {

enum class DisorderKind { kGaussian, kUniform };
enum class AveragingMethod { kMonteCarlo, kQuadrature };

std::string_view to_string(DisorderKind kind);
std::string_view to_string(AveragingMethod method);

/// Multiplicative disorder nu_cold (1 + d1), nu_hot (1 + d2) with d1, d2
/// independent. Gaussian: zero mean, standard deviation sigma. Uniform:
/// support [-sigma/2, sigma/2].
struct DisorderSpec {
  DisorderKind kind = DisorderKind::kGaussian;
  double sigma = 0.0;
  std::size_t n_samples = 1;
  std::uint64_t seed = 0;
  AveragingMethod method = AveragingMethod::kMonteCarlo;
  std::size_t quadrature_order = 16;

  /// Throws DomainError on sigma < 0, n_samples == 0 or quadrature_order == 0.
  void validate() const;
};

/// Perturbed frequencies must keep 1 + delta above this floor.
inline constexpr double kMinFrequencyFactor = 1e-3;

struct DeltaDraw {
  double delta_cold = 0.0;
  double delta_hot = 0.0;
  /// Draws discarded because 1 + delta fell to kMinFrequencyFactor or below.
  std::size_t redraws = 0;
};

/// Draws (d1, d2) from `rng`, redrawing any value with 1 + d <= 1e-3.
/// Throws ConfigError if a pair needs more than 64 redraws.
DeltaDraw sample_delta(const DisorderSpec& spec, RngStream& rng);

/// nu_cold (1 + d1), nu_hot (1 + d2); everything else unchanged.
EngineParams perturbed(const EngineParams& params, double delta_cold, double delta_hot);

struct QuenchedResult {
  double mean_eta = 0.0;
  /// Zero for quadrature and for sigma == 0.
  double std_error = 0.0;
  /// Samples (or quadrature nodes) that produced an efficiency.
  std::size_t n_effective = 0;
  /// Samples (or nodes) whose cycle was degenerate or failed numerically.
  std::size_t rejected = 0;
  /// Delta draws discarded by the positive-frequency floor.
  std::size_t redraws = 0;
};

inline constexpr std::size_t kDisorderSteps = 5'000;

struct QuenchedOptions {
  std::size_t n_steps = kDisorderSteps;
  /// 0 = hardware concurrency. The result does not depend on this value.
  std::size_t workers = 0;
};

/// Quenched average of the cycle efficiency over the disorder distribution.
///
/// Monte Carlo draws sample i from RngStream(seed, i) and reduces in index
/// order, so the result is bit-identical for any worker count. Quadrature
/// uses a tensor-product Gauss-Hermite (gaussian) or Gauss-Legendre
/// (uniform) rule of spec.quadrature_order points per axis; there
/// n_effective + rejected counts nodes.
///
/// Throws ConfigError if more than half of all delta draws are rejected.
QuenchedResult quenched_efficiency(const EngineParams& params, const DisorderSpec& spec,
                                   const QuenchedOptions& options = {});

}  // namespace qotto
