#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

enum class Unit { Volt, Radian, RadianPerSecond, Hertz, Dimensionless };

std::string_view unit_name(Unit u);
Unit unit_from_name(std::string_view name);

/// Label for the ASD of a series with this unit, e.g. "radian_per_second*Hz^-1/2".
std::string asd_unit_label(Unit u);

/// Uniformly sampled real-valued series: the carrier for interferograms,
/// phases, beat frequencies and rotation rates. Construction enforces
/// sample_rate > 0, length >= 1 and finite samples; instances are immutable.
class TimeSeries {
 public:
  TimeSeries(std::vector<double> samples, double sample_rate, Unit unit,
             double start_time = 0.0);

  const std::vector<double>& samples() const { return samples_; }
  double sample_rate() const { return sample_rate_; }
  double start_time() const { return start_time_; }
  Unit unit() const { return unit_; }
  std::size_t size() const { return samples_.size(); }
  double dt() const { return 1.0 / sample_rate_; }
  double duration() const { return static_cast<double>(samples_.size()) / sample_rate_; }
  double time_at(std::size_t k) const { return start_time_ + static_cast<double>(k) / sample_rate_; }
  double operator[](std::size_t k) const { return samples_[k]; }

 private:
  std::vector<double> samples_;
  double sample_rate_;
  double start_time_;
  Unit unit_;
};

void require_unit(const TimeSeries& s, Unit expected, std::string_view what);

/// Length, sample rate and start time must all agree.
void require_same_grid(const TimeSeries& a, const TimeSeries& b, std::string_view what);

TimeSeries zero_series(std::size_t n, double sample_rate, Unit unit, double start_time = 0.0);
TimeSeries scaled(const TimeSeries& s, double factor);
TimeSeries retagged(const TimeSeries& s, Unit unit);

/// wa*a + wb*b on a shared grid, with the given output unit.
TimeSeries combine(const TimeSeries& a, const TimeSeries& b, double wa, double wb, Unit unit);

}  // namespace ringlab
