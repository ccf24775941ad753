#pragma once

#include <cstdint>
#include <span>

#include "noise.hpp"
#include "time_series.hpp"

namespace ringlab {

/// Fixed Sagnac carrier of the two-port beat signal
///   S_i = gain * (-1)^i * cos(theta_k) + v_n[k].
struct CarrierSpec {
  double omega_s = 0.0;        // rad/s, beat angular frequency
  double gain = 1.0;           // dimensionless amplitude
  double initial_phase = 0.0;  // rad
};

/// omega_s > 0, gain > 0, carrier below Nyquist for this sample rate.
void validate_carrier(const CarrierSpec& c, double sample_rate);

/// Injected in-cavity noise realizations kept for oracle comparisons.
struct PairTruth {
  TimeSeries omega_n;  // rad/s
  TimeSeries phi_n;    // rad
  CarrierSpec carrier;
  std::uint64_t pair_seed = 0;
};

struct InterferogramPair {
  TimeSeries s1;  // volt, the (-1)^1 port
  TimeSeries s2;  // volt, the (-1)^2 port
  PairTruth truth;
};

/// One photodiode signal. The instantaneous phase integrates the frequency
/// noise: theta_k = theta_{k-1} + (omega_s + omega_n[k])*dt + (phi_n[k] -
/// phi_n[k-1]), theta_0 = initial_phase + (omega_s + omega_n[0])*t0 +
/// phi_n[0]. All three noise series must share the grid; port is 1 or 2.
TimeSeries synthesize_port(const CarrierSpec& carrier, const TimeSeries& omega_n,
                           const TimeSeries& phi_n, const TimeSeries& v_n, int port);

/// Both ports share identical realized in-cavity noise; per-port additive
/// noise draws from seeds (seed, seed^1) derived from the per_port spec seed.
InterferogramPair synthesize_pair(const CarrierSpec& carrier,
                                  std::span<const NoiseSpec> in_cavity,
                                  const NoiseSpec& per_port, std::size_t n,
                                  double sample_rate, double start_time = 0.0);

}  // namespace ringlab
