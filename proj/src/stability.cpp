#include "stability.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "numeric.hpp"

namespace ringlab {

std::string_view deviation_name(DeviationKind k) {
  switch (k) {
    case DeviationKind::Adev: return "adev";
    case DeviationKind::Oadev: return "oadev";
    case DeviationKind::Mdev: return "mdev";
  }
  return "unknown";
}

DeviationKind deviation_from_name(std::string_view name) {
  if (name == "adev") return DeviationKind::Adev;
  if (name == "oadev") return DeviationKind::Oadev;
  if (name == "mdev") return DeviationKind::Mdev;
  throw ConfigError("unknown deviation variant: " + std::string(name));
}

namespace {

void require_rate_series(const TimeSeries& y, std::string_view what) {
  const Unit u = y.unit();
  if (u != Unit::RadianPerSecond && u != Unit::Hertz && u != Unit::Dimensionless)
    throw std::invalid_argument(std::string(what) + ": input must be a rate-type series");
}

void require_m_list(std::span<const std::size_t> m_list, std::string_view what) {
  if (m_list.empty()) throw std::invalid_argument(std::string(what) + ": empty m list");
  std::size_t prev = 0;
  for (std::size_t m : m_list) {
    if (m < 1 || m <= prev)
      throw std::invalid_argument(std::string(what) + ": m values must be ascending and >= 1");
    prev = m;
  }
}

/// x_0 = 0, x_{k+1} = x_k + y_k * tau0, compensated.
std::vector<double> integrate_phase(const TimeSeries& y) {
  const double tau0 = y.dt();
  std::vector<double> x(y.size() + 1);
  KahanSum acc;
  x[0] = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    acc.add(y[k] * tau0);
    x[k + 1] = acc.value();
  }
  return x;
}

StabilityCurve make_curve(const TimeSeries& y, DeviationKind variant) {
  StabilityCurve c;
  c.variant = variant;
  c.tau0 = y.dt();
  c.unit = y.unit();
  return c;
}

void push_point(StabilityCurve& c, double tau, double dev, std::size_t count) {
  c.taus.push_back(tau);
  c.deviations.push_back(dev);
  c.sample_counts.push_back(count);
  c.ci.push_back(dev / std::sqrt(static_cast<double>(count)));
}

}  // namespace

StabilityCurve oadev(const TimeSeries& y, std::span<const std::size_t> m_list) {
  require_rate_series(y, "oadev");
  require_m_list(m_list, "oadev");
  const std::size_t n = y.size();
  const double tau0 = y.dt();
  const std::vector<double> x = integrate_phase(y);

  StabilityCurve curve = make_curve(y, DeviationKind::Oadev);
  for (const std::size_t m : m_list) {
    if (n < 2 * m + 1) throw std::invalid_argument("oadev: m too large for series");
    const std::size_t count = n - 2 * m + 1;
    const double tau = static_cast<double>(m) * tau0;
    KahanSum sum;
    for (std::size_t i = 0; i + 2 * m <= n; ++i) {
      const double d = (x[i + 2 * m] - 2.0 * x[i + m] + x[i]) / tau;
      sum.add(d * d);
    }
    push_point(curve, tau, std::sqrt(sum.value() / (2.0 * static_cast<double>(count))), count);
  }
  return curve;
}

StabilityCurve mdev(const TimeSeries& y, std::span<const std::size_t> m_list) {
  require_rate_series(y, "mdev");
  require_m_list(m_list, "mdev");
  const std::size_t n = y.size();
  const double tau0 = y.dt();
  const std::vector<double> x = integrate_phase(y);

  StabilityCurve curve = make_curve(y, DeviationKind::Mdev);
  for (const std::size_t m : m_list) {
    if (n < 3 * m) throw std::invalid_argument("mdev: m too large for series");
    const std::size_t terms = n - 3 * m + 2;
    const double tau = static_cast<double>(m) * tau0;

    // Prefix sums of the second differences let the inner average slide in
    // O(1) without drifting accumulators.
    const std::size_t nd = n - 2 * m + 1;
    std::vector<double> prefix(nd + 1);
    prefix[0] = 0.0;
    {
      KahanSum acc;
      for (std::size_t i = 0; i < nd; ++i) {
        acc.add(x[i + 2 * m] - 2.0 * x[i + m] + x[i]);
        prefix[i + 1] = acc.value();
      }
    }
    KahanSum sum;
    for (std::size_t j = 0; j < terms; ++j) {
      const double inner = prefix[j + m] - prefix[j];
      sum.add(inner * inner);
    }
    const double md = static_cast<double>(m);
    const double var =
        sum.value() / (2.0 * md * md * tau * tau * static_cast<double>(terms));
    push_point(curve, tau, std::sqrt(var), terms);
  }
  return curve;
}

StabilityCurve adev(const TimeSeries& y, std::span<const std::size_t> m_list) {
  require_rate_series(y, "adev");
  require_m_list(m_list, "adev");
  const std::size_t n = y.size();
  const double tau0 = y.dt();
  const std::vector<double> x = integrate_phase(y);

  StabilityCurve curve = make_curve(y, DeviationKind::Adev);
  for (const std::size_t m : m_list) {
    const std::size_t blocks = n / m;
    if (blocks < 2) throw std::invalid_argument("adev: m too large for series");
    const double tau = static_cast<double>(m) * tau0;
    KahanSum sum;
    for (std::size_t k = 0; k + 1 < blocks; ++k) {
      const double lo = (x[(k + 1) * m] - x[k * m]) / tau;
      const double hi = (x[(k + 2) * m] - x[(k + 1) * m]) / tau;
      sum.add((hi - lo) * (hi - lo));
    }
    const std::size_t count = blocks - 1;
    push_point(curve, tau, std::sqrt(sum.value() / (2.0 * static_cast<double>(count))), count);
  }
  return curve;
}

std::vector<std::size_t> tau_grid(std::size_t n_samples, int points_per_decade) {
  if (points_per_decade < 1) throw std::invalid_argument("tau_grid: points_per_decade >= 1");
  std::vector<std::size_t> out;
  if (n_samples < 3) return out;
  const std::size_t m_max = (n_samples - 1) / 2;
  for (int k = 0;; ++k) {
    const double value =
        std::pow(10.0, static_cast<double>(k) / static_cast<double>(points_per_decade));
    if (value > static_cast<double>(m_max) + 0.5) break;
    const auto m = static_cast<std::size_t>(std::llround(value));
    if (m < 1 || m > m_max) continue;
    if (out.empty() || m > out.back()) out.push_back(m);
  }
  return out;
}

}  // namespace ringlab
