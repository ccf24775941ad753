#include "time_series.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace ringlab {

std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::Volt: return "volt";
    case Unit::Radian: return "radian";
    case Unit::RadianPerSecond: return "radian_per_second";
    case Unit::Hertz: return "hertz";
    case Unit::Dimensionless: return "dimensionless";
  }
  return "unknown";
}

Unit unit_from_name(std::string_view name) {
  if (name == "volt") return Unit::Volt;
  if (name == "radian") return Unit::Radian;
  if (name == "radian_per_second") return Unit::RadianPerSecond;
  if (name == "hertz") return Unit::Hertz;
  if (name == "dimensionless") return Unit::Dimensionless;
  throw ConfigError("unknown unit tag: " + std::string(name));
}

std::string asd_unit_label(Unit u) {
  return std::string(unit_name(u)) + "*Hz^-1/2";
}

TimeSeries::TimeSeries(std::vector<double> samples, double sample_rate, Unit unit,
                       double start_time)
    : samples_(std::move(samples)),
      sample_rate_(sample_rate),
      start_time_(start_time),
      unit_(unit) {
  if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_))
    throw std::invalid_argument("TimeSeries: sample_rate must be positive and finite");
  if (samples_.empty()) throw std::invalid_argument("TimeSeries: length must be >= 1");
  if (!std::isfinite(start_time_))
    throw std::invalid_argument("TimeSeries: start_time must be finite");
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (!std::isfinite(samples_[k]))
      throw std::invalid_argument("TimeSeries: non-finite sample at index " + std::to_string(k));
  }
}

void require_unit(const TimeSeries& s, Unit expected, std::string_view what) {
  if (s.unit() != expected)
    throw std::invalid_argument(std::string(what) + ": expected unit " +
                                std::string(unit_name(expected)) + ", got " +
                                std::string(unit_name(s.unit())));
}

void require_same_grid(const TimeSeries& a, const TimeSeries& b, std::string_view what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(what) + ": length mismatch");
  if (a.sample_rate() != b.sample_rate())
    throw std::invalid_argument(std::string(what) + ": sample_rate mismatch");
  if (a.start_time() != b.start_time())
    throw std::invalid_argument(std::string(what) + ": start_time mismatch");
}

TimeSeries zero_series(std::size_t n, double sample_rate, Unit unit, double start_time) {
  return TimeSeries(std::vector<double>(n, 0.0), sample_rate, unit, start_time);
}

TimeSeries scaled(const TimeSeries& s, double factor) {
  std::vector<double> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = factor * s[k];
  return TimeSeries(std::move(out), s.sample_rate(), s.unit(), s.start_time());
}

TimeSeries retagged(const TimeSeries& s, Unit unit) {
  return TimeSeries(s.samples(), s.sample_rate(), unit, s.start_time());
}

TimeSeries combine(const TimeSeries& a, const TimeSeries& b, double wa, double wb, Unit unit) {
  require_same_grid(a, b, "combine");
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = wa * a[k] + wb * b[k];
  return TimeSeries(std::move(out), a.sample_rate(), unit, a.start_time());
}

}  // namespace ringlab
