#include "interferogram.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"
#include "numeric.hpp"

namespace ringlab {

void validate_carrier(const CarrierSpec& c, double sample_rate) {
  if (!(c.omega_s > 0.0) || !std::isfinite(c.omega_s))
    throw std::invalid_argument("CarrierSpec: omega_s must be positive");
  if (!(c.gain > 0.0) || !std::isfinite(c.gain))
    throw std::invalid_argument("CarrierSpec: gain must be positive");
  if (!std::isfinite(c.initial_phase))
    throw std::invalid_argument("CarrierSpec: initial_phase must be finite");
  if (!(c.omega_s < std::numbers::pi * sample_rate))
    throw std::invalid_argument("CarrierSpec: carrier at or above Nyquist");
}

TimeSeries synthesize_port(const CarrierSpec& carrier, const TimeSeries& omega_n,
                           const TimeSeries& phi_n, const TimeSeries& v_n, int port) {
  if (port != 1 && port != 2) throw std::invalid_argument("synthesize_port: port must be 1 or 2");
  require_same_grid(omega_n, phi_n, "synthesize_port");
  require_same_grid(omega_n, v_n, "synthesize_port");
  require_unit(omega_n, Unit::RadianPerSecond, "synthesize_port omega_n");
  require_unit(phi_n, Unit::Radian, "synthesize_port phi_n");
  require_unit(v_n, Unit::Volt, "synthesize_port v_n");
  validate_carrier(carrier, omega_n.sample_rate());

  const std::size_t n = omega_n.size();
  const double dt = omega_n.dt();
  const double t0 = omega_n.start_time();
  const double sign = (port == 1) ? -1.0 : 1.0;  // (-1)^port

  // Closed form of the phase recurrence: the carrier ramp is evaluated
  // directly and only the noise terms are accumulated, which keeps the
  // rounding noise orders of magnitude below any injected level.
  std::vector<double> out(n);
  KahanSum noise_walk;  // dt * sum_{i=1..k} omega_n[i]
  const double base = carrier.initial_phase + omega_n[0] * t0 + phi_n[0];
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) noise_walk.add(omega_n[k] * dt);
    const double theta = base + carrier.omega_s * (t0 + static_cast<double>(k) * dt) +
                         noise_walk.value() + (phi_n[k] - phi_n[0]);
    out[k] = sign * carrier.gain * std::cos(theta) + v_n[k];
  }
  return TimeSeries(std::move(out), omega_n.sample_rate(), Unit::Volt, t0);
}

InterferogramPair synthesize_pair(const CarrierSpec& carrier,
                                  std::span<const NoiseSpec> in_cavity,
                                  const NoiseSpec& per_port, std::size_t n,
                                  double sample_rate, double start_time) {
  if (n < 1) throw std::invalid_argument("synthesize_pair: n must be >= 1");
  if (!(sample_rate > 0.0)) throw std::invalid_argument("synthesize_pair: bad sample_rate");
  validate_carrier(carrier, sample_rate);
  if (per_port.kind != NoiseKind::WhiteAdditive)
    throw std::invalid_argument("synthesize_pair: per_port noise must be white_additive");

  TimeSeries omega_n = zero_series(n, sample_rate, Unit::RadianPerSecond, start_time);
  TimeSeries phi_n = zero_series(n, sample_rate, Unit::Radian, start_time);
  for (const NoiseSpec& spec : in_cavity) {
    if (spec.kind == NoiseKind::WhiteAdditive)
      throw std::invalid_argument("synthesize_pair: white_additive is not an in-cavity noise");
    const TimeSeries realized = make_noise(spec, n, sample_rate, start_time);
    if (spec.kind == NoiseKind::WhiteFrequency)
      omega_n = combine(omega_n, realized, 1.0, 1.0, Unit::RadianPerSecond);
    else
      phi_n = combine(phi_n, realized, 1.0, 1.0, Unit::Radian);
  }

  NoiseSpec port1 = per_port;
  NoiseSpec port2 = per_port;
  port2.seed = per_port.seed ^ 1ull;
  const TimeSeries v1 = make_noise(port1, n, sample_rate, start_time);
  const TimeSeries v2 = make_noise(port2, n, sample_rate, start_time);

  TimeSeries s1 = synthesize_port(carrier, omega_n, phi_n, v1, 1);
  TimeSeries s2 = synthesize_port(carrier, omega_n, phi_n, v2, 2);
  PairTruth truth{std::move(omega_n), std::move(phi_n), carrier, per_port.seed};
  return InterferogramPair{std::move(s1), std::move(s2), std::move(truth)};
}

}  // namespace ringlab
