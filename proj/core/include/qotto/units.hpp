#pragma once

#include <numbers>

namespace qotto {

// Internal unit system: h = 1, so energies are frequencies (h*Hz) and
// hbar = 1/(2 pi). Frequencies are stored in Hz and times in seconds; the
// lab-facing API speaks kHz and microseconds.
inline constexpr double kPlanck = 1.0;
inline constexpr double kHbar = kPlanck / (2.0 * std::numbers::pi);

struct Hertz {
  double value = 0.0;
  friend constexpr auto operator<=>(Hertz, Hertz) = default;
};

struct Seconds {
  double value = 0.0;
  friend constexpr auto operator<=>(Seconds, Seconds) = default;
};

constexpr Hertz kilohertz(double khz) { return Hertz{khz * 1e3}; }
constexpr Seconds microseconds(double us) { return Seconds{us / 1e6}; }

constexpr double to_kilohertz(Hertz f) { return f.value / 1e3; }
constexpr double to_microseconds(Seconds t) { return t.value * 1e6; }

/// Energies reported by the cycle layer are in h*kHz.
constexpr double energy_to_h_khz(double h_hz) { return h_hz / 1e3; }

}  // namespace qotto
