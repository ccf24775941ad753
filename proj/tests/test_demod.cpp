#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "demod.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "interferogram.hpp"
#include "noise.hpp"
#include "numeric.hpp"
#include "spectral.hpp"

using namespace ringlab;

namespace {

constexpr double kPi = std::numbers::pi;

TimeSeries tone(double f0, double fs, std::size_t n, double phase0 = 0.0) {
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k)
    s[k] = std::cos(2.0 * kPi * f0 * static_cast<double>(k) / fs + phase0);
  return TimeSeries(std::move(s), fs, Unit::Volt);
}

double wrap_to_pi(double x) {
  const double two_pi = 2.0 * kPi;
  double r = std::fmod(x + kPi, two_pi);
  if (r < 0) r += two_pi;
  return r - kPi;
}

struct Line {
  double slope, intercept;
};

Line fit_interior_line(const TimeSeries& phase, std::size_t guard) {
  const std::size_t n = phase.size();
  const std::size_t m = n - 2 * guard;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = guard; k < n - guard; ++k) {
    const double x = static_cast<double>(k);
    sx += x;
    sy += phase[k];
    sxx += x * x;
    sxy += x * phase[k];
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  const double slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / static_cast<double>(m)};
}

}  // namespace

TEST_CASE("analytic phase of a pure tone is linear") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 16;
  // Whole number of cycles in the record: the one-sided spectrum is exact.
  const double f0 = 2785.0 * fs / static_cast<double>(n);  // approx 212.4 Hz
  const TimeSeries phase = analytic_phase(tone(f0, fs, n));

  const std::size_t guard = n / 100;
  const Line line = fit_interior_line(phase, guard);
  CHECK(line.slope * fs == doctest::Approx(2.0 * kPi * f0).epsilon(1e-9));

  double max_dev = 0.0;
  for (std::size_t k = guard; k < n - guard; ++k)
    max_dev = std::max(max_dev,
                       std::abs(phase[k] - (line.intercept + line.slope * static_cast<double>(k))));
  CHECK(max_dev < 1e-3);

  // A fractional-cycle tone leaves slowly decaying leakage ripple near the
  // record ends; 1% exclusion keeps it at the few-mrad level.
  const TimeSeries off_bin = analytic_phase(tone(212.0, fs, n));
  const Line line2 = fit_interior_line(off_bin, guard);
  double max_dev2 = 0.0;
  for (std::size_t k = guard; k < n - guard; ++k)
    max_dev2 = std::max(
        max_dev2, std::abs(off_bin[k] - (line2.intercept + line2.slope * static_cast<double>(k))));
  CHECK(max_dev2 < 5e-3);
}

TEST_CASE("analytic phase intercept keeps the initial phase") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 16;
  const double phase0 = kPi / 3.0;
  const TimeSeries phase = analytic_phase(tone(318.0, fs, n, phase0));
  const Line line = fit_interior_line(phase, n / 100);
  CHECK(wrap_to_pi(line.intercept) == doctest::Approx(phase0).epsilon(1e-3));
}

TEST_CASE("analytic phase is deterministic and validates input") {
  const TimeSeries s = tone(100.0, 1000.0, 4096);
  const TimeSeries a = analytic_phase(s);
  const TimeSeries b = analytic_phase(s);
  CHECK(a.samples() == b.samples());

  CHECK_THROWS_AS(analytic_phase(TimeSeries({1, 2, 3}, 10.0, Unit::Volt)),
                  std::invalid_argument);
  CHECK_THROWS_AS(analytic_phase(zero_series(64, 10.0, Unit::Volt)), NumericError);
}

TEST_CASE("noiseless tone reconstructs to a constant frequency") {
  const double fs = 5000.0;
  const double f0 = 280.0;
  const TimeSeries s = tone(f0, fs, 1 << 16);
  DemodConfig cfg;  // contiguous windows of 0.02 s, first/last excluded
  const TimeSeries rec = reconstruct_frequency(s, cfg);
  const double target = 2.0 * kPi * f0;
  for (double v : rec.samples()) CHECK(std::abs(v - target) / target < 1e-6);
  CHECK(rec.unit() == Unit::RadianPerSecond);
  CHECK(rec.sample_rate() == doctest::Approx(50.0));
}

TEST_CASE("tone fidelity holds across the usable carrier range") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 15;
  for (const double frac : {0.06, 0.12, 0.25, 0.33, 0.44}) {
    // Steady tones completing a whole number of cycles in the record.
    const double f0 = std::round(frac * static_cast<double>(n)) * fs / static_cast<double>(n);
    const TimeSeries s = tone(f0, fs, n);
    DemodConfig cfg;
    cfg.edge_guard = 0.1;
    const TimeSeries rec = reconstruct_frequency(s, cfg);
    const double target = 2.0 * kPi * f0;
    for (double v : rec.samples()) CHECK(std::abs(v - target) / target < 1e-6);
  }

  // Off-bin carrier: end-of-record leakage dominates, decaying with the
  // guard; half a second keeps it below 1e-5 relative.
  const TimeSeries s = tone(300.0, fs, n);
  DemodConfig cfg;
  cfg.edge_guard = 0.5;
  const TimeSeries rec = reconstruct_frequency(s, cfg);
  const double target = 2.0 * kPi * 300.0;
  for (double v : rec.samples()) CHECK(std::abs(v - target) / target < 1e-5);
}

TEST_CASE("sliding mode at the window rate matches contiguous mode") {
  const TimeSeries s = tone(280.0, 5000.0, 1 << 14);
  DemodConfig contiguous;
  DemodConfig sliding;
  sliding.output_rate = 50.0;  // hop = fs / 50 = window length
  const TimeSeries a = reconstruct_frequency(s, contiguous);
  const TimeSeries b = reconstruct_frequency(s, sliding);
  CHECK(a.samples() == b.samples());
}

TEST_CASE("linear chirp tracks the programmed frequency law") {
  const double fs = 5000.0;
  const double duration = 100.0;
  const auto n = static_cast<std::size_t>(duration * fs);
  // 250 Hz -> 310 Hz over 100 s: phi(t) = 2*pi*(250 t + 0.3 t^2).
  std::vector<double> samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / fs;
    samples[k] = std::cos(2.0 * kPi * (250.0 * t + 0.3 * t * t));
  }
  const TimeSeries s(std::move(samples), fs, Unit::Volt);
  DemodConfig cfg;
  const TimeSeries rec = reconstruct_frequency(s, cfg);

  KahanSum sq;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const double t = rec.time_at(i);
    const double expected_hz = 250.0 + 0.6 * t;
    const double err = rec[i] / (2.0 * kPi) - expected_hz;
    sq.add(err * err);
  }
  const double rms_hz = std::sqrt(sq.value() / static_cast<double>(rec.size()));
  CHECK(rms_hz < 0.01);
}

TEST_CASE("reconstruct_frequency validates configuration") {
  const TimeSeries s = tone(100.0, 1000.0, 4096);
  DemodConfig cfg;
  cfg.integration_time = 0.0;
  CHECK_THROWS_AS(reconstruct_frequency(s, cfg), std::invalid_argument);
  cfg = DemodConfig{};
  cfg.output_rate = 2000.0;
  CHECK_THROWS_AS(reconstruct_frequency(s, cfg), std::invalid_argument);
  cfg = DemodConfig{};
  cfg.integration_time = 10.0;  // window longer than the series
  CHECK_THROWS_AS(reconstruct_frequency(s, cfg), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_frequency(retagged(s, Unit::Radian), DemodConfig{}),
                  std::invalid_argument);
}

TEST_CASE("reconstruct_pair: both ports estimate +omega_s") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 16;
  const CarrierSpec carrier{2.0 * kPi * 280.0, 1.0, 0.2};
  const InterferogramPair quiet =
      synthesize_pair(carrier, {}, {NoiseKind::WhiteAdditive, 0.0, 5}, n, fs);
  DemodConfig cfg;
  const auto [w1, w2] = reconstruct_pair(quiet, cfg);
  require_same_grid(w1, w2, "test");
  for (std::size_t i = 0; i < w1.size(); ++i) {
    CHECK(w1[i] > 0.0);
    CHECK(std::abs(w1[i] - w2[i]) / w1[i] < 1e-9);
  }

  // Common in-cavity frequency noise stays common mode.
  const std::vector<NoiseSpec> cavity{{NoiseKind::WhiteFrequency, 2e-2, 7}};
  const InterferogramPair common =
      synthesize_pair(carrier, cavity, {NoiseKind::WhiteAdditive, 0.0, 8}, n, fs);
  const auto [c1, c2] = reconstruct_pair(common, cfg);
  for (std::size_t i = 0; i < c1.size(); ++i)
    CHECK(std::abs(c1[i] - c2[i]) / std::abs(c1[i]) < 1e-9);
}

TEST_CASE("independent per-port noise leaves a zero-mean difference") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 19;
  const CarrierSpec carrier{2.0 * kPi * 280.0, 1.0, 0.0};
  const InterferogramPair pair =
      synthesize_pair(carrier, {}, {NoiseKind::WhiteAdditive, 1e-2, 99}, n, fs);
  DemodConfig cfg;
  const auto [w1, w2] = reconstruct_pair(pair, cfg);
  const TimeSeries diff = combine(w1, w2, 1.0, -1.0, Unit::RadianPerSecond);
  const double m = mean(diff.samples());
  const double se = std::sqrt(variance(diff.samples()) / static_cast<double>(diff.size()));
  CHECK(std::abs(m) < 3.0 * se);
}

TEST_CASE("doubling white phase noise doubles the reconstructed ASD") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 20;
  const CarrierSpec carrier{2.0 * kPi * 280.0, 1.0, 0.0};
  DemodConfig cfg;
  cfg.integration_time = 2.0 / fs;  // sample-scale slope windows
  cfg.output_rate = fs;
  cfg.edge_guard = 0.5;

  const auto run = [&](double level, std::uint64_t seed) {
    const std::vector<NoiseSpec> cavity{{NoiseKind::WhitePhase, level, seed}};
    const InterferogramPair pair =
        synthesize_pair(carrier, cavity, {NoiseKind::WhiteAdditive, 0.0, 1}, n, fs);
    const TimeSeries rec = reconstruct_frequency(pair.s1, cfg);
    return asd(rec, 1 << 15, 0.5, WindowKind::Hann);
  };
  const Spectrum lo = run(1e-4, 42);
  const Spectrum hi = run(2e-4, 42);  // same seed: identical realization, doubled
  const double ratio = band_median_asd(hi, 10.0, 500.0) / band_median_asd(lo, 10.0, 500.0);
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("white frequency injection shows the carrier-frequency discontinuity") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 20;  // ~210 s
  const double fc = 280.0;
  const CarrierSpec carrier{2.0 * kPi * fc, 1.0, 0.0};
  const std::vector<NoiseSpec> cavity{{NoiseKind::WhiteFrequency, 1.6e-2, 21}};
  const InterferogramPair pair =
      synthesize_pair(carrier, cavity, {NoiseKind::WhiteAdditive, 0.0, 22}, n, fs);
  DemodConfig cfg;
  cfg.integration_time = 2.0 / fs;
  cfg.output_rate = fs;
  cfg.edge_guard = 0.5;
  const TimeSeries rec = reconstruct_frequency(pair.s1, cfg);
  const Spectrum spec = asd(rec, 1 << 15, 0.5, WindowKind::Hann);
  const double below = band_median_asd(spec, 0.70 * fc, 0.96 * fc);
  const double above = band_median_asd(spec, 1.04 * fc, 1.30 * fc);
  CHECK(below / above > 1.5);
}
