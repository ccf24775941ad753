#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ringlab {

/// Compensated (Kahan) accumulator. Long sums stay accurate to a few ulp,
/// which is what lets deviation estimates resolve frad/s-scale inputs.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

double kahan_total(std::span<const double> xs);
double mean(std::span<const double> xs);

/// Population variance about the sample mean (divides by n).
double variance(std::span<const double> xs);

/// Compensated running sum; out[k] = sum of xs[0..k].
std::vector<double> cumulative_sum(std::span<const double> xs);

double median(std::vector<double> values);

}  // namespace ringlab
