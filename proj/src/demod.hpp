#pragma once

#include <utility>

#include "interferogram.hpp"
#include "time_series.hpp"

namespace ringlab {

/// Frequency reconstruction settings.
///
/// integration_time is the window over which a least-squares line is fit to
/// the unwrapped analytic-signal phase. output_rate <= 0 selects contiguous
/// windows (one estimate per integration_time); a positive value selects
/// sliding windows hopping at sample_rate/output_rate, up to the input rate.
/// edge_guard seconds at both ends are excluded from the output (analytic
/// signal wrap-around); negative means one integration_time.
struct DemodConfig {
  double integration_time = 0.02;  // seconds
  bool detrend = true;
  double output_rate = 0.0;  // Hz; <= 0 -> contiguous windows
  double edge_guard = -1.0;  // seconds; < 0 -> integration_time
};

/// Unwrapped instantaneous phase of the analytic signal. Input must have at
/// least 16 samples and must not be identically zero.
TimeSeries analytic_phase(const TimeSeries& s, bool detrend = true);

/// Windowed least-squares phase slope; each window's slope is the angular
/// frequency assigned to the window center.
TimeSeries reconstruct_frequency(const TimeSeries& s, const DemodConfig& cfg);

/// Reconstruct both ports. The port-2 signal is opposite in phase, which
/// shifts its analytic phase by pi and leaves the slope untouched, so both
/// outputs estimate +omega_s directly.
std::pair<TimeSeries, TimeSeries> reconstruct_pair(const InterferogramPair& pair,
                                                   const DemodConfig& cfg);

}  // namespace ringlab
