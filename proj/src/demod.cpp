#include "demod.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"
#include "fft.hpp"
#include "numeric.hpp"

namespace ringlab {

namespace {

void unwrap_in_place(std::vector<double>& phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double offset = 0.0;
  double prev = phase[0];
  for (std::size_t k = 1; k < phase.size(); ++k) {
    const double raw = phase[k];
    const double d = raw - prev;
    offset -= two_pi * std::round(d / two_pi);
    phase[k] = raw + offset;
    prev = raw;
  }
}

}  // namespace

TimeSeries analytic_phase(const TimeSeries& s, bool detrend) {
  if (s.size() < 16) throw std::invalid_argument("analytic_phase: need at least 16 samples");

  std::vector<double> x = s.samples();
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw NumericError("analytic_phase: all-zero input has undefined phase");
  if (detrend) {
    const double m = mean(x);
    for (double& v : x) v -= m;
  }

  const std::vector<std::complex<double>> z = analytic_signal(x);
  std::vector<double> phase(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) phase[k] = std::atan2(z[k].imag(), z[k].real());
  unwrap_in_place(phase);
  return TimeSeries(std::move(phase), s.sample_rate(), Unit::Radian, s.start_time());
}

TimeSeries reconstruct_frequency(const TimeSeries& s, const DemodConfig& cfg) {
  require_unit(s, Unit::Volt, "reconstruct_frequency");
  if (!(cfg.integration_time > 0.0))
    throw std::invalid_argument("DemodConfig: integration_time must be positive");
  const double fs = s.sample_rate();
  if (cfg.output_rate > fs)
    throw std::invalid_argument("DemodConfig: output_rate must not exceed the input rate");

  const std::size_t n = s.size();
  const std::size_t window =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(cfg.integration_time * fs)));
  const std::size_t hop =
      (cfg.output_rate > 0.0)
          ? std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(fs / cfg.output_rate)))
          : window;
  const std::size_t guard =
      (cfg.edge_guard < 0.0)
          ? window
          : static_cast<std::size_t>(std::llround(cfg.edge_guard * fs));
  if (window > n) throw std::invalid_argument("reconstruct_frequency: window exceeds input");

  const TimeSeries phase = analytic_phase(s, cfg.detrend);
  const std::vector<double>& ph = phase.samples();

  const double dt = s.dt();
  const double center = 0.5 * static_cast<double>(window - 1);
  double sxx = 0.0;
  for (std::size_t j = 0; j < window; ++j) {
    const double xj = static_cast<double>(j) - center;
    sxx += xj * xj;
  }
  const double norm = 1.0 / (sxx * dt);
  const std::size_t mid = window / 2;

  std::vector<double> out;
  std::size_t first_kept = 0;
  bool have_first = false;
  for (std::size_t k = 0; k + window <= n; k += hop) {
    if (k < guard || k + window > n - guard) continue;
    const double pivot = ph[k + mid];
    double acc = 0.0;
    for (std::size_t j = 0; j < window; ++j)
      acc += (static_cast<double>(j) - center) * (ph[k + j] - pivot);
    out.push_back(acc * norm);
    if (!have_first) {
      first_kept = k;
      have_first = true;
    }
  }
  if (out.size() < 2)
    throw std::invalid_argument("reconstruct_frequency: input too short for two output samples");

  const double out_rate = fs / static_cast<double>(hop);
  const double t_first = s.start_time() + (static_cast<double>(first_kept) + center) * dt;
  return TimeSeries(std::move(out), out_rate, Unit::RadianPerSecond, t_first);
}

std::pair<TimeSeries, TimeSeries> reconstruct_pair(const InterferogramPair& pair,
                                                   const DemodConfig& cfg) {
  require_same_grid(pair.s1, pair.s2, "reconstruct_pair");
  TimeSeries w1 = reconstruct_frequency(pair.s1, cfg);
  TimeSeries w2 = reconstruct_frequency(pair.s2, cfg);
  return {std::move(w1), std::move(w2)};
}

}  // namespace ringlab
