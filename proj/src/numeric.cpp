#include "numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringlab {

double kahan_total(std::span<const double> xs) {
  KahanSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty range");
  return kahan_total(xs) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  const double m = mean(xs);
  KahanSum acc;
  for (double x : xs) {
    const double d = x - m;
    acc.add(d * d);
  }
  return acc.value() / static_cast<double>(xs.size());
}

std::vector<double> cumulative_sum(std::span<const double> xs) {
  std::vector<double> out(xs.size());
  KahanSum acc;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    acc.add(xs[k]);
    out[k] = acc.value();
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty range");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  std::nth_element(values.begin(), values.begin() + mid - 1, values.begin() + mid);
  return 0.5 * (values[mid - 1] + hi);
}

}  // namespace ringlab
