#include "noise.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "numeric.hpp"

namespace ringlab {

std::string_view noise_kind_name(NoiseKind k) {
  switch (k) {
    case NoiseKind::WhiteFrequency: return "white_frequency";
    case NoiseKind::WhitePhase: return "white_phase";
    case NoiseKind::WienerPhase: return "wiener_phase";
    case NoiseKind::WhiteAdditive: return "white_additive";
  }
  return "unknown";
}

NoiseKind noise_kind_from_name(std::string_view name) {
  if (name == "white_frequency") return NoiseKind::WhiteFrequency;
  if (name == "white_phase") return NoiseKind::WhitePhase;
  if (name == "wiener_phase") return NoiseKind::WienerPhase;
  if (name == "white_additive") return NoiseKind::WhiteAdditive;
  throw ConfigError("unknown noise kind: " + std::string(name));
}

double inverse_normal_cdf(double p) {
  // Wichura, Applied Statistics 37 (1988), algorithm AS 241 (PPND16).
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("inverse_normal_cdf: p must be in (0,1)");
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
              6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
            1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
          1.3314166789178437745e2) * r + 3.3871328727963666080e0);
    const double den =
        (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
              3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
            5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
          4.2313330701600911252e1) * r + 1.0);
    return q * num / den;
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
    value = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    value = num / den;
  }
  return (q < 0.0) ? -value : value;
}

double GaussianRng::normal() { return inverse_normal_cdf(uniform()); }

TimeSeries gen_white(std::size_t n, double level, std::uint64_t seed, double sample_rate,
                     Unit unit, double start_time) {
  if (n < 1) throw std::invalid_argument("gen_white: n must be >= 1");
  if (!(level >= 0.0) || !std::isfinite(level))
    throw std::invalid_argument("gen_white: level must be >= 0");
  std::vector<double> out(n);
  GaussianRng rng(seed);
  for (std::size_t k = 0; k < n; ++k) out[k] = level * rng.normal();
  return TimeSeries(std::move(out), sample_rate, unit, start_time);
}

TimeSeries gen_wiener(std::size_t n, double step_sigma, std::uint64_t seed, double sample_rate,
                      Unit unit, double start_time) {
  if (n < 1) throw std::invalid_argument("gen_wiener: n must be >= 1");
  if (!(step_sigma >= 0.0) || !std::isfinite(step_sigma))
    throw std::invalid_argument("gen_wiener: step_sigma must be >= 0");
  std::vector<double> out(n);
  GaussianRng rng(seed);
  KahanSum acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc.add(step_sigma * rng.normal());
    out[k] = acc.value();
  }
  return TimeSeries(std::move(out), sample_rate, unit, start_time);
}

Unit noise_unit(NoiseKind k) {
  switch (k) {
    case NoiseKind::WhiteFrequency: return Unit::RadianPerSecond;
    case NoiseKind::WhitePhase: return Unit::Radian;
    case NoiseKind::WienerPhase: return Unit::Radian;
    case NoiseKind::WhiteAdditive: return Unit::Volt;
  }
  return Unit::Dimensionless;
}

TimeSeries make_noise(const NoiseSpec& spec, std::size_t n, double sample_rate,
                      double start_time) {
  if (spec.kind == NoiseKind::WienerPhase)
    return gen_wiener(n, spec.level, spec.seed, sample_rate, noise_unit(spec.kind), start_time);
  return gen_white(n, spec.level, spec.seed, sample_rate, noise_unit(spec.kind), start_time);
}

double asd_level_to_sigma(double asd_level, double sample_rate) {
  return asd_level * std::sqrt(sample_rate / 2.0);
}

double sigma_to_asd_level(double sigma, double sample_rate) {
  return sigma * std::sqrt(2.0 / sample_rate);
}

}  // namespace ringlab
