#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "time_series.hpp"

namespace ringlab {

enum class WindowKind { Hann, Rectangular, Hamming };

std::string_view window_name(WindowKind w);
WindowKind window_from_name(std::string_view name);

/// One-sided amplitude spectral density with estimator metadata. The DC bin
/// is never part of the grid; frequencies are strictly increasing.
struct Spectrum {
  std::vector<double> frequencies;  // Hz
  std::vector<double> asd;          // unit * Hz^-1/2
  std::size_t segment_count = 0;
  double resolution = 0.0;  // Hz
  WindowKind window = WindowKind::Hann;
  Unit unit = Unit::Dimensionless;  // unit of the input series
  std::vector<std::pair<double, double>> mask_bands;  // applied exclusions
  bool warning_empty = false;  // set when a mask removed every bin
};

/// Frequency bands to exclude; overlapping bands are merged on construction.
class SpectralMask {
 public:
  SpectralMask() = default;
  explicit SpectralMask(std::vector<std::pair<double, double>> bands);
  const std::vector<std::pair<double, double>>& bands() const { return bands_; }
  bool empty() const { return bands_.empty(); }

 private:
  std::vector<std::pair<double, double>> bands_;
};

/// Welch-averaged one-sided ASD. PSD is normalized so its integral over
/// frequency equals the variance of the (window-corrected, per-segment
/// mean-removed) input; ASD = sqrt(PSD). segment_length >= 16 and <= n.
Spectrum asd(const TimeSeries& s, std::size_t segment_length, double overlap_fraction,
             WindowKind window);

/// Remove bins inside the excluded bands; the grid shrinks.
Spectrum apply_mask(const Spectrum& spec, const SpectralMask& mask);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  std::size_t bins = 0;
};

/// Least-squares fit of log10(asd) vs log10(f) over [f_lo, f_hi]; requires at
/// least 8 nonzero bins in band.
SlopeFit loglog_slope(const Spectrum& spec, double f_lo, double f_hi);

/// Average power into log-spaced bins (geometric-mean abscissae). Standard
/// preparation for power-law slope fits so high-frequency bins do not
/// dominate the regression.
Spectrum log_rebin(const Spectrum& spec, int points_per_decade);

double band_median_asd(const Spectrum& spec, double f_lo, double f_hi);
double band_peak_asd(const Spectrum& spec, double f_lo, double f_hi);

enum class NoiseClass { WhiteFrequency, WhitePhase, PhaseDiffusion, Unknown };
std::string_view noise_class_name(NoiseClass c);

struct ClassifyBands {
  std::pair<double, double> knee_search{1.0, 50.0};
  std::pair<double, double> low{0.05, 1.0};
  std::pair<double, double> high{30.0, 200.0};
};

/// Slope-based decision rule on a reconstructed-frequency ASD:
/// +1/+1 -> white_phase, 0/0 -> phase_diffusion, 0/+1 with a detected
/// spectral knee -> white_frequency, anything else -> unknown.
NoiseClass classify_noise(const Spectrum& spec, const ClassifyBands& bands);

/// Two-segment piecewise log-log fit over the band; true when the best split
/// lowers the residual sum of squares by at least 25% vs a single line.
bool detect_knee(const Spectrum& spec, double f_lo, double f_hi);

}  // namespace ringlab
