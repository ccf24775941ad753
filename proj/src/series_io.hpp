#pragma once

#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral.hpp"
#include "stability.hpp"
#include "time_series.hpp"

namespace ringlab {

enum class SeriesFormat { Csv, F64le };

std::string_view format_name(SeriesFormat f);
SeriesFormat format_from_name(std::string_view name);
std::string_view format_extension(SeriesFormat f);  // "csv" / "f64le"

/// csv: '#'-prefixed key=value header lines (sample_rate_hz and unit
/// required), one decimal sample per row, dot decimal separator.
/// f64le: raw little-endian doubles plus a "<path>.meta" sidecar.
TimeSeries load_series(const std::filesystem::path& path, SeriesFormat format);
void save_series(const TimeSeries& s, const std::filesystem::path& path, SeriesFormat format);

/// Absolute-time windows to exclude; overlapping windows are merged.
class TimeMask {
 public:
  TimeMask() = default;
  explicit TimeMask(std::vector<std::pair<double, double>> windows);
  const std::vector<std::pair<double, double>>& windows() const { return windows_; }
  bool empty() const { return windows_.empty(); }

 private:
  std::vector<std::pair<double, double>> windows_;
};

/// Contiguous unmasked runs as separate series, start times preserved.
/// Windows are half-open [t0, t1); an all-masking mask yields an empty list.
std::vector<TimeSeries> apply_time_mask(const TimeSeries& s, const TimeMask& mask);

void save_spectrum(const Spectrum& spec, const std::filesystem::path& path);
Spectrum load_spectrum(const std::filesystem::path& path);

void save_stability(const StabilityCurve& curve, const std::filesystem::path& path);

}  // namespace ringlab
