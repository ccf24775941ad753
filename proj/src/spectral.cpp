#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"
#include "fft.hpp"
#include "numeric.hpp"

namespace ringlab {

std::string_view window_name(WindowKind w) {
  switch (w) {
    case WindowKind::Hann: return "hann";
    case WindowKind::Rectangular: return "rectangular";
    case WindowKind::Hamming: return "hamming";
  }
  return "unknown";
}

WindowKind window_from_name(std::string_view name) {
  if (name == "hann") return WindowKind::Hann;
  if (name == "rectangular" || name == "boxcar") return WindowKind::Rectangular;
  if (name == "hamming") return WindowKind::Hamming;
  throw ConfigError("unknown window: " + std::string(name));
}

std::string_view noise_class_name(NoiseClass c) {
  switch (c) {
    case NoiseClass::WhiteFrequency: return "white_frequency";
    case NoiseClass::WhitePhase: return "white_phase";
    case NoiseClass::PhaseDiffusion: return "phase_diffusion";
    case NoiseClass::Unknown: return "unknown";
  }
  return "unknown";
}

SpectralMask::SpectralMask(std::vector<std::pair<double, double>> bands)
    : bands_(std::move(bands)) {
  for (const auto& [lo, hi] : bands_) {
    if (!(lo < hi)) throw std::invalid_argument("SpectralMask: band must satisfy f_lo < f_hi");
  }
  std::sort(bands_.begin(), bands_.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& band : bands_) {
    if (!merged.empty() && band.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, band.second);
    else
      merged.push_back(band);
  }
  bands_ = std::move(merged);
}

namespace {

std::vector<double> make_window(WindowKind kind, std::size_t n) {
  std::vector<double> w(n, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  switch (kind) {
    case WindowKind::Rectangular:
      break;
    case WindowKind::Hann:
      for (std::size_t j = 0; j < n; ++j)
        w[j] = 0.5 - 0.5 * std::cos(two_pi * static_cast<double>(j) / static_cast<double>(n));
      break;
    case WindowKind::Hamming:
      for (std::size_t j = 0; j < n; ++j)
        w[j] = 0.54 - 0.46 * std::cos(two_pi * static_cast<double>(j) / static_cast<double>(n));
      break;
  }
  return w;
}

}  // namespace

Spectrum asd(const TimeSeries& s, std::size_t segment_length, double overlap_fraction,
             WindowKind window) {
  if (segment_length < 16) throw std::invalid_argument("asd: segment_length must be >= 16");
  if (segment_length > s.size())
    throw DataError("asd: series shorter than one segment");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0))
    throw std::invalid_argument("asd: overlap_fraction must be in [0,1)");

  const std::size_t nper = segment_length;
  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(nper) * (1.0 - overlap_fraction))));
  const std::size_t nseg = (s.size() - nper) / hop + 1;
  const double fs = s.sample_rate();

  const std::vector<double> w = make_window(window, nper);
  double wss = 0.0;
  for (double v : w) wss += v * v;

  const std::size_t nbins = nper / 2 + 1;
  std::vector<KahanSum> power(nbins);
  std::vector<double> seg(nper);
  std::vector<std::complex<double>> bins(nbins);
  RealFftPlan plan(nper);

  for (std::size_t m = 0; m < nseg; ++m) {
    const double* src = s.samples().data() + m * hop;
    double segment_mean = 0.0;
    {
      KahanSum acc;
      for (std::size_t j = 0; j < nper; ++j) acc.add(src[j]);
      segment_mean = acc.value() / static_cast<double>(nper);
    }
    for (std::size_t j = 0; j < nper; ++j) seg[j] = (src[j] - segment_mean) * w[j];
    plan.execute(seg, bins);
    for (std::size_t k = 0; k < nbins; ++k) power[k].add(std::norm(bins[k]));
  }

  // One-sided PSD with window power correction; DC excluded from the grid,
  // the Nyquist bin (even segment length) is not doubled.
  Spectrum out;
  out.segment_count = nseg;
  out.resolution = fs / static_cast<double>(nper);
  out.window = window;
  out.unit = s.unit();
  const double base = 1.0 / (static_cast<double>(nseg) * fs * wss);
  for (std::size_t k = 1; k < nbins; ++k) {
    const bool nyquist = (nper % 2 == 0) && (k == nbins - 1);
    const double psd = (nyquist ? 1.0 : 2.0) * power[k].value() * base;
    out.frequencies.push_back(static_cast<double>(k) * out.resolution);
    out.asd.push_back(std::sqrt(psd));
  }
  return out;
}

Spectrum apply_mask(const Spectrum& spec, const SpectralMask& mask) {
  Spectrum out;
  out.segment_count = spec.segment_count;
  out.resolution = spec.resolution;
  out.window = spec.window;
  out.unit = spec.unit;
  out.mask_bands = spec.mask_bands;
  for (const auto& band : mask.bands()) out.mask_bands.push_back(band);

  for (std::size_t k = 0; k < spec.frequencies.size(); ++k) {
    const double f = spec.frequencies[k];
    bool excluded = false;
    for (const auto& [lo, hi] : mask.bands()) {
      if (f >= lo && f <= hi) {
        excluded = true;
        break;
      }
    }
    if (!excluded) {
      out.frequencies.push_back(f);
      out.asd.push_back(spec.asd[k]);
    }
  }
  out.warning_empty = out.frequencies.empty();
  return out;
}

namespace {

struct LogPoints {
  std::vector<double> x, y;  // log10 f, log10 asd
};

LogPoints collect_log_points(const Spectrum& spec, double f_lo, double f_hi) {
  LogPoints pts;
  for (std::size_t k = 0; k < spec.frequencies.size(); ++k) {
    const double f = spec.frequencies[k];
    if (f < f_lo || f > f_hi) continue;
    if (!(spec.asd[k] > 0.0)) continue;  // zero bins dropped from fits
    pts.x.push_back(std::log10(f));
    pts.y.push_back(std::log10(spec.asd[k]));
  }
  return pts;
}

struct LineFit {
  double slope, intercept, rss;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y, std::size_t lo,
                 std::size_t hi) {
  const std::size_t n = hi - lo;
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw NumericError("slope fit: degenerate abscissae");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    rss += r * r;
  }
  return {slope, intercept, rss};
}

}  // namespace

SlopeFit loglog_slope(const Spectrum& spec, double f_lo, double f_hi) {
  const LogPoints pts = collect_log_points(spec, f_lo, f_hi);
  if (pts.x.size() < 8) throw std::invalid_argument("loglog_slope: fewer than 8 bins in band");
  const LineFit fit = fit_line(pts.x, pts.y, 0, pts.x.size());
  const std::size_t n = pts.x.size();
  double sxx = 0.0, mx = 0.0;
  for (double v : pts.x) mx += v;
  mx /= static_cast<double>(n);
  for (double v : pts.x) sxx += (v - mx) * (v - mx);
  const double sigma2 = (n > 2) ? fit.rss / static_cast<double>(n - 2) : 0.0;
  return SlopeFit{fit.slope, fit.intercept, std::sqrt(sigma2 / sxx), n};
}

Spectrum log_rebin(const Spectrum& spec, int points_per_decade) {
  if (points_per_decade < 1) throw std::invalid_argument("log_rebin: points_per_decade >= 1");
  Spectrum out;
  out.segment_count = spec.segment_count;
  out.resolution = spec.resolution;
  out.window = spec.window;
  out.unit = spec.unit;
  out.mask_bands = spec.mask_bands;
  if (spec.frequencies.empty()) {
    out.warning_empty = spec.warning_empty;
    return out;
  }

  const double step = 1.0 / static_cast<double>(points_per_decade);
  const double x0 = std::log10(spec.frequencies.front());
  std::size_t k = 0;
  const std::size_t n = spec.frequencies.size();
  for (double edge = x0; k < n; edge += step) {
    const double upper = std::pow(10.0, edge + step);
    double psum = 0.0, lsum = 0.0;
    std::size_t count = 0;
    while (k < n && spec.frequencies[k] < upper) {
      psum += spec.asd[k] * spec.asd[k];
      lsum += std::log(spec.frequencies[k]);
      ++count;
      ++k;
    }
    if (count > 0) {
      out.frequencies.push_back(std::exp(lsum / static_cast<double>(count)));
      out.asd.push_back(std::sqrt(psum / static_cast<double>(count)));
    }
  }
  return out;
}

namespace {

std::vector<double> band_values(const Spectrum& spec, double f_lo, double f_hi) {
  std::vector<double> vals;
  for (std::size_t k = 0; k < spec.frequencies.size(); ++k)
    if (spec.frequencies[k] >= f_lo && spec.frequencies[k] <= f_hi) vals.push_back(spec.asd[k]);
  if (vals.empty()) throw std::invalid_argument("band not covered by spectrum");
  return vals;
}

}  // namespace

double band_median_asd(const Spectrum& spec, double f_lo, double f_hi) {
  return median(band_values(spec, f_lo, f_hi));
}

double band_peak_asd(const Spectrum& spec, double f_lo, double f_hi) {
  const std::vector<double> vals = band_values(spec, f_lo, f_hi);
  return *std::max_element(vals.begin(), vals.end());
}

bool detect_knee(const Spectrum& spec, double f_lo, double f_hi) {
  const LogPoints pts = collect_log_points(spec, f_lo, f_hi);
  const std::size_t n = pts.x.size();
  if (n < 8) return false;
  const LineFit single = fit_line(pts.x, pts.y, 0, n);
  // A perfect single line (residuals at rounding level) has no knee.
  if (single.rss <= 1e-20 * static_cast<double>(n)) return false;
  double best = single.rss;
  for (std::size_t split = 3; split + 3 <= n; ++split) {
    const LineFit left = fit_line(pts.x, pts.y, 0, split);
    const LineFit right = fit_line(pts.x, pts.y, split, n);
    best = std::min(best, left.rss + right.rss);
  }
  return best <= 0.75 * single.rss;
}

NoiseClass classify_noise(const Spectrum& spec, const ClassifyBands& bands) {
  const double tol = 0.15;
  const double low = loglog_slope(spec, bands.low.first, bands.low.second).slope;
  const double high = loglog_slope(spec, bands.high.first, bands.high.second).slope;
  if (std::abs(low - 1.0) <= tol && std::abs(high - 1.0) <= tol) return NoiseClass::WhitePhase;
  if (std::abs(low) <= tol && std::abs(high) <= tol) return NoiseClass::PhaseDiffusion;
  if (std::abs(low) <= tol && std::abs(high - 1.0) <= tol &&
      detect_knee(spec, bands.knee_search.first, bands.knee_search.second))
    return NoiseClass::WhiteFrequency;
  return NoiseClass::Unknown;
}

}  // namespace ringlab
