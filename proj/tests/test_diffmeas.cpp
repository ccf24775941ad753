#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "demod.hpp"
#include "diffmeas.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "interferogram.hpp"
#include "noise.hpp"
#include "numeric.hpp"
#include "spectral.hpp"

using namespace ringlab;

namespace {

constexpr double kPi = std::numbers::pi;

InterferogramPair quiet_pair(std::size_t n, double fs, double gain = 1.0) {
  const CarrierSpec carrier{2.0 * kPi * 280.0, gain, 0.0};
  return synthesize_pair(carrier, {}, {NoiseKind::WhiteAdditive, 0.0, 17}, n, fs);
}

// 10 s at 5 kHz: the 280 Hz carrier completes exactly 2800 cycles, so the
// analytic signal carries no end-of-record leakage.
constexpr std::size_t kCommensurate = 50000;

}  // namespace

TEST_CASE("noiseless difference channel recovers omega_s") {
  const double fs = 5000.0;
  const InterferogramPair pair = quiet_pair(kCommensurate, fs);
  DemodConfig cfg;
  const TimeSeries wd = difference_channel(pair, cfg);
  const double target = 2.0 * kPi * 280.0;
  for (double v : wd.samples()) CHECK(std::abs(v - target) / target < 1e-9);
}

TEST_CASE("common in-cavity noise survives in the difference channel") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 16;
  const CarrierSpec carrier{2.0 * kPi * 280.0, 1.0, 0.0};
  const std::vector<NoiseSpec> cavity{{NoiseKind::WhiteFrequency, 2e-2, 3}};
  const InterferogramPair pair =
      synthesize_pair(carrier, cavity, {NoiseKind::WhiteAdditive, 0.0, 4}, n, fs);
  DemodConfig cfg;
  const TimeSeries wd = difference_channel(pair, cfg);
  const TimeSeries w1 = reconstruct_frequency(pair.s1, cfg);
  for (std::size_t i = 0; i < wd.size(); ++i)
    CHECK(std::abs(wd[i] - w1[i]) / std::abs(w1[i]) < 1e-9);
}

TEST_CASE("noise channel algebra") {
  const TimeSeries w1({5.0, 6.0, 7.0}, 10.0, Unit::RadianPerSecond);
  const TimeSeries w2({1.0, 2.0, 3.0}, 10.0, Unit::RadianPerSecond);
  const TimeSeries half = noise_channel(w1, w2);
  CHECK(half[0] == 2.0);
  CHECK(half[1] == 2.0);

  const TimeSeries same = noise_channel(w1, w1);
  for (double v : same.samples()) CHECK(v == 0.0);

  // Antisymmetry is exact.
  const TimeSeries swapped = noise_channel(w2, w1);
  for (std::size_t k = 0; k < half.size(); ++k) CHECK(swapped[k] == -half[k]);

  const TimeSeries mismatched({1.0, 2.0}, 10.0, Unit::RadianPerSecond);
  CHECK_THROWS_AS(noise_channel(w1, mismatched), std::invalid_argument);
  CHECK_THROWS_AS(noise_channel(w1, retagged(w2, Unit::Radian)), std::invalid_argument);
}

TEST_CASE("sum channel is carrier-free for common noise") {
  const InterferogramPair pair = quiet_pair(4096, 5000.0, 0.9);
  const TimeSeries sum = sum_channel(pair);
  for (double v : sum.samples()) CHECK(v == 0.0);
}

TEST_CASE("run_differential converts to rotation rate") {
  const double fs = 5000.0;
  const GyroGeometry gp2(2.56, 6.4, 632.8e-9, 0.0);
  const InterferogramPair pair = quiet_pair(kCommensurate, fs);
  DemodConfig cfg;
  const DifferentialResult result = run_differential(pair, cfg, gp2);

  const double k = sagnac_scale_factor(gp2);
  const double target = 2.0 * kPi * 280.0 / k;
  for (double v : result.rotation_d.samples()) CHECK(std::abs(v - target) / target < 1e-9);
  CHECK(result.rotation_d.unit() == Unit::RadianPerSecond);
  CHECK(result.pair_seed == pair.truth.pair_seed);
  require_same_grid(result.omega_d, result.omega_half_diff, "test");
}

TEST_CASE("rejection_ratio on synthetic spectra") {
  Spectrum a;
  a.resolution = 1.0;
  a.segment_count = 1;
  for (int k = 1; k <= 100; ++k) {
    a.frequencies.push_back(k);
    a.asd.push_back(1.0);
  }
  CHECK(rejection_ratio(a, a, 50.0, 10.0) == doctest::Approx(0.0));

  Spectrum zero = a;
  std::fill(zero.asd.begin(), zero.asd.end(), 0.0);
  CHECK(rejection_ratio(a, zero, 50.0, 10.0) == 200.0);

  Spectrum weak = a;
  for (double& v : weak.asd) v = 1e-3;
  CHECK(rejection_ratio(a, weak, 50.0, 10.0) == doctest::Approx(60.0));

  CHECK_THROWS_AS(rejection_ratio(a, a, 500.0, 10.0), std::invalid_argument);
  Spectrum other_unit = a;
  other_unit.unit = Unit::Volt;
  a.unit = Unit::RadianPerSecond;
  CHECK_THROWS_AS(rejection_ratio(a, other_unit, 50.0, 10.0), std::invalid_argument);
}

TEST_CASE("independent port noise: floors agree and omega_d gains sqrt(2)") {
  const double fs = 5000.0;
  const std::size_t n = 1 << 20;
  const CarrierSpec carrier{2.0 * kPi * 280.0, 1.0, 0.0};
  const InterferogramPair pair =
      synthesize_pair(carrier, {}, {NoiseKind::WhiteAdditive, 1e-3, 55}, n, fs);
  DemodConfig cfg;
  cfg.integration_time = 2.0 / fs;
  cfg.output_rate = fs;
  cfg.edge_guard = 0.5;

  const TimeSeries w1 = reconstruct_frequency(pair.s1, cfg);
  const TimeSeries w2 = reconstruct_frequency(pair.s2, cfg);
  const TimeSeries wd = difference_channel(pair, cfg);
  const TimeSeries half = noise_channel(w1, w2);

  const std::size_t seg = 1 << 15;
  const Spectrum spec1 = asd(w1, seg, 0.5, WindowKind::Hann);
  const Spectrum specd = asd(wd, seg, 0.5, WindowKind::Hann);
  const Spectrum spech = asd(half, seg, 0.5, WindowKind::Hann);

  const double floor1 = band_median_asd(spec1, 100.0, 500.0);
  const double floord = band_median_asd(specd, 100.0, 500.0);
  const double floorh = band_median_asd(spech, 100.0, 500.0);

  // sqrt(2) SNR gain of the doubled-carrier channel.
  CHECK(floor1 / floord == doctest::Approx(std::sqrt(2.0)).epsilon(0.10));
  // omega_n12/2 approximates the omega_d noise floor.
  CHECK(floorh / floord == doctest::Approx(1.0).epsilon(0.25));
}
