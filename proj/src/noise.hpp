#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "time_series.hpp"

namespace ringlab {

enum class NoiseKind { WhiteFrequency, WhitePhase, WienerPhase, WhiteAdditive };

std::string_view noise_kind_name(NoiseKind k);
NoiseKind noise_kind_from_name(std::string_view name);

/// One injectable stochastic process. `level` is a per-sample standard
/// deviation whose unit follows the kind: rad/s for white_frequency, rad for
/// white_phase and the wiener_phase step, volts for white_additive.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::WhiteAdditive;
  double level = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic Gaussian stream: mt19937_64 + double-precision inverse
/// normal CDF, one draw per variate. Bit-identical across runs for a seed.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Quantile function of the standard normal distribution (Wichura's
/// double-precision rational approximation); p must lie in (0, 1).
double inverse_normal_cdf(double p);

TimeSeries gen_white(std::size_t n, double level, std::uint64_t seed, double sample_rate,
                     Unit unit = Unit::Dimensionless, double start_time = 0.0);

/// Cumulative sum of i.i.d. Gaussian increments; the first sample is the
/// first increment.
TimeSeries gen_wiener(std::size_t n, double step_sigma, std::uint64_t seed, double sample_rate,
                      Unit unit = Unit::Radian, double start_time = 0.0);

/// Realize a NoiseSpec on a grid; the kind determines the unit tag.
TimeSeries make_noise(const NoiseSpec& spec, std::size_t n, double sample_rate,
                      double start_time = 0.0);

Unit noise_unit(NoiseKind k);

/// Per-sample sigma for a target one-sided ASD level: sigma = asd * sqrt(fs/2).
double asd_level_to_sigma(double asd_level, double sample_rate);
double sigma_to_asd_level(double sigma, double sample_rate);

}  // namespace ringlab
