#include "diffmeas.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace ringlab {

TimeSeries difference_channel(const TimeSeries& s1, const TimeSeries& s2,
                              const DemodConfig& cfg) {
  // Port 1 carries -cos, port 2 +cos: s1 - s2 has amplitude 2*gain and the
  // common in-cavity phase, so the reconstruction estimates +omega_s.
  const TimeSeries s = combine(s1, s2, 1.0, -1.0, Unit::Volt);
  return reconstruct_frequency(s, cfg);
}

TimeSeries difference_channel(const InterferogramPair& pair, const DemodConfig& cfg) {
  return difference_channel(pair.s1, pair.s2, cfg);
}

TimeSeries noise_channel(const TimeSeries& omega1, const TimeSeries& omega2) {
  require_unit(omega1, Unit::RadianPerSecond, "noise_channel omega1");
  require_unit(omega2, Unit::RadianPerSecond, "noise_channel omega2");
  return combine(omega1, omega2, 0.5, -0.5, Unit::RadianPerSecond);
}

TimeSeries sum_channel(const InterferogramPair& pair) {
  return combine(pair.s1, pair.s2, 1.0, 1.0, Unit::Volt);
}

DifferentialResult run_differential(const TimeSeries& s1, const TimeSeries& s2,
                                    const DemodConfig& cfg, const GyroGeometry& geometry,
                                    std::uint64_t seed) {
  const double k = sagnac_scale_factor(geometry);
  if (k == 0.0) throw NumericError("run_differential: degenerate geometry");

  TimeSeries omega_d = difference_channel(s1, s2, cfg);
  TimeSeries omega1 = reconstruct_frequency(s1, cfg);
  TimeSeries omega2 = reconstruct_frequency(s2, cfg);
  TimeSeries half = noise_channel(omega1, omega2);
  TimeSeries rot_d = scaled(omega_d, 1.0 / k);
  TimeSeries rot_half = scaled(half, 1.0 / k);
  return DifferentialResult{std::move(omega_d),  std::move(half), std::move(rot_d),
                            std::move(rot_half), geometry,        cfg,
                            seed};
}

DifferentialResult run_differential(const InterferogramPair& pair, const DemodConfig& cfg,
                                    const GyroGeometry& geometry) {
  return run_differential(pair.s1, pair.s2, cfg, geometry, pair.truth.pair_seed);
}

double rejection_ratio(const Spectrum& single, const Spectrum& differenced, double f_signal,
                       double bandwidth) {
  if (!(bandwidth > 0.0)) throw std::invalid_argument("rejection_ratio: bandwidth must be > 0");
  if (single.unit != differenced.unit)
    throw std::invalid_argument("rejection_ratio: spectra carry different units");
  const double lo = f_signal - 0.5 * bandwidth;
  const double hi = f_signal + 0.5 * bandwidth;
  const double peak_single = band_peak_asd(single, lo, hi);
  const double peak_diff = band_peak_asd(differenced, lo, hi);
  if (peak_diff == 0.0) return 200.0;
  const double db = 20.0 * std::log10(peak_single / peak_diff);
  return std::min(db, 200.0);
}

}  // namespace ringlab
