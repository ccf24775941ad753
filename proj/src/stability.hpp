#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "time_series.hpp"

namespace ringlab {

enum class DeviationKind { Adev, Oadev, Mdev };

std::string_view deviation_name(DeviationKind k);
DeviationKind deviation_from_name(std::string_view name);

/// Deviation vs averaging time tau = m * tau0, with per-tau sample counts and
/// naive 1/sqrt(count) confidence half-widths.
struct StabilityCurve {
  std::vector<double> taus;          // seconds, ascending
  std::vector<double> deviations;    // unit of the input series
  std::vector<std::size_t> sample_counts;
  std::vector<double> ci;            // deviation / sqrt(count)
  DeviationKind variant = DeviationKind::Oadev;
  double tau0 = 0.0;                 // seconds
  Unit unit = Unit::Dimensionless;
};

/// Overlapped Allan deviation of a rate series y at tau = m*tau0:
///   sigma^2 = 1/(2 (N-2m+1)) * sum_{i=0}^{N-2m} (ybar_{i+m} - ybar_i)^2.
StabilityCurve oadev(const TimeSeries& y, std::span<const std::size_t> m_list);

/// Modified Allan deviation via second differences of averaged phase, with
/// phase rebuilt internally as x_{k+1} = x_k + y_k*tau0, x_0 = 0.
StabilityCurve mdev(const TimeSeries& y, std::span<const std::size_t> m_list);

/// Plain (non-overlapped) Allan deviation over disjoint adjacent averages.
StabilityCurve adev(const TimeSeries& y, std::span<const std::size_t> m_list);

/// Approximately log-spaced averaging factors from 1 to (n-1)/2.
std::vector<std::size_t> tau_grid(std::size_t n_samples, int points_per_decade);

}  // namespace ringlab
