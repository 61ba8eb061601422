#include "qotto/disorder.hpp"

#include <cmath>
#include <optional>
#include <vector>

#include "qotto/cycle.hpp"
#include "qotto/error.hpp"
#include "qotto/parallel.hpp"
#include "qotto/quadrature.hpp"

namespace qotto {

namespace {

constexpr std::size_t kMaxRedrawsPerPair = 64;

bool admissible(double delta) { return 1.0 + delta > kMinFrequencyFactor; }

double draw_one(const DisorderSpec& spec, RngStream& rng) {
  switch (spec.kind) {
    case DisorderKind::kGaussian:
      return spec.sigma * rng.normal();
    case DisorderKind::kUniform:
      return spec.sigma * (rng.uniform() - 0.5);
  }
  throw DomainError("sample_delta: unknown distribution");
}

// Efficiency of one disorder realisation, or nullopt when the cycle is
// degenerate or numerically rejected.
std::optional<double> realisation_eta(const EngineParams& params, double d1, double d2,
                                      std::size_t n_steps) {
  try {
    return simulate_cycle(perturbed(params, d1, d2), n_steps).eta;
  } catch (const DegenerateError&) {
    return std::nullopt;
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

QuenchedResult point_mass(const EngineParams& params, const DisorderSpec& spec,
                          const QuenchedOptions& options) {
  const std::size_t total = spec.method == AveragingMethod::kQuadrature
                                ? spec.quadrature_order * spec.quadrature_order
                                : spec.n_samples;
  const std::optional<double> eta = realisation_eta(params, 0.0, 0.0, options.n_steps);
  if (!eta) {
    return {std::nan(""), 0.0, 0, total, 0};
  }
  return {*eta, 0.0, total, 0, 0};
}

QuenchedResult monte_carlo(const EngineParams& params, const DisorderSpec& spec,
                           const QuenchedOptions& options) {
  const std::size_t n = spec.n_samples;
  std::vector<std::optional<double>> etas(n);
  std::vector<std::size_t> redraws(n, 0);
  parallel_for(n, options.workers, [&](std::size_t i) {
    RngStream rng(spec.seed, i);
    const DeltaDraw d = sample_delta(spec, rng);
    redraws[i] = d.redraws;
    etas[i] = realisation_eta(params, d.delta_cold, d.delta_hot, options.n_steps);
  });

  QuenchedResult out;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.redraws += redraws[i];
    if (etas[i]) {
      sum += *etas[i];
      ++out.n_effective;
    } else {
      ++out.rejected;
    }
  }
  if (out.redraws > 2 * n) {
    throw ConfigError("quenched_efficiency: more than half of the disorder draws were rejected; "
                      "sigma is too large for multiplicative disorder");
  }
  if (out.n_effective == 0) {
    out.mean_eta = std::nan("");
    return out;
  }
  out.mean_eta = sum / static_cast<double>(out.n_effective);
  if (out.n_effective > 1) {
    double ss = 0.0;
    for (const auto& e : etas) {
      if (e) ss += (*e - out.mean_eta) * (*e - out.mean_eta);
    }
    const auto m = static_cast<double>(out.n_effective);
    out.std_error = std::sqrt(ss / (m - 1.0) / m);
  }
  return out;
}

QuenchedResult quadrature(const EngineParams& params, const DisorderSpec& spec,
                          const QuenchedOptions& options) {
  const bool gaussian = spec.kind == DisorderKind::kGaussian;
  const QuadratureRule rule = gaussian ? gauss_hermite_normal(spec.quadrature_order)
                                       : gauss_legendre_uniform(spec.quadrature_order);
  const double scale = gaussian ? spec.sigma : 0.5 * spec.sigma;
  const std::size_t q = rule.nodes.size();

  std::vector<std::optional<double>> etas(q * q);
  parallel_for(q * q, options.workers, [&](std::size_t idx) {
    const double d1 = scale * rule.nodes[idx / q];
    const double d2 = scale * rule.nodes[idx % q];
    if (admissible(d1) && admissible(d2)) {
      etas[idx] = realisation_eta(params, d1, d2, options.n_steps);
    }
  });

  // Nodes outside the admissible region or with failed cycles drop out, and
  // the surviving weights are renormalised.
  QuenchedResult out;
  double weighted = 0.0;
  double mass = 0.0;
  for (std::size_t idx = 0; idx < q * q; ++idx) {
    if (etas[idx]) {
      const double w = rule.weights[idx / q] * rule.weights[idx % q];
      weighted += w * *etas[idx];
      mass += w;
      ++out.n_effective;
    } else {
      ++out.rejected;
    }
  }
  out.mean_eta = out.n_effective > 0 ? weighted / mass : std::nan("");
  return out;
}

}  // namespace

std::string_view to_string(DisorderKind kind) {
  return kind == DisorderKind::kGaussian ? "gaussian" : "uniform";
}

std::string_view to_string(AveragingMethod method) {
  return method == AveragingMethod::kMonteCarlo ? "mc" : "quad";
}

void DisorderSpec::validate() const {
  if (!(std::isfinite(sigma) && sigma >= 0.0)) {
    throw DomainError("DisorderSpec: sigma must be finite and non-negative");
  }
  if (n_samples == 0) {
    throw DomainError("DisorderSpec: n_samples must be at least 1");
  }
  if (quadrature_order == 0) {
    throw DomainError("DisorderSpec: quadrature_order must be at least 1");
  }
}

DeltaDraw sample_delta(const DisorderSpec& spec, RngStream& rng) {
  spec.validate();
  DeltaDraw out;
  auto next = [&] {
    for (;;) {
      const double d = draw_one(spec, rng);
      if (admissible(d)) return d;
      if (++out.redraws > kMaxRedrawsPerPair) {
        throw ConfigError("sample_delta: rejection rate above 50%; sigma too large");
      }
    }
  };
  out.delta_cold = next();
  out.delta_hot = next();
  return out;
}

EngineParams perturbed(const EngineParams& params, double delta_cold, double delta_hot) {
  return params.with_frequencies(Hertz{params.nu_cold() * (1.0 + delta_cold)},
                                 Hertz{params.nu_hot() * (1.0 + delta_hot)});
}

QuenchedResult quenched_efficiency(const EngineParams& params, const DisorderSpec& spec,
                                   const QuenchedOptions& options) {
  spec.validate();
  if (spec.sigma == 0.0) {
    return point_mass(params, spec, options);
  }
  return spec.method == AveragingMethod::kMonteCarlo ? monte_carlo(params, spec, options)
                                                     : quadrature(params, spec, options);
}

}  // namespace qotto
