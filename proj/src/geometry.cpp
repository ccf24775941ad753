#include "geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"

namespace ringlab {

GyroGeometry::GyroGeometry(double area_m2, double perimeter_m, double wavelength_m,
                           double theta_rad)
    : area_(area_m2), perimeter_(perimeter_m), wavelength_(wavelength_m), theta_(theta_rad) {
  if (!(area_ > 0.0) || !std::isfinite(area_))
    throw std::invalid_argument("GyroGeometry: area must be positive");
  if (!(perimeter_ > 0.0) || !std::isfinite(perimeter_))
    throw std::invalid_argument("GyroGeometry: perimeter must be positive");
  if (!(wavelength_ > 0.0) || !std::isfinite(wavelength_))
    throw std::invalid_argument("GyroGeometry: wavelength must be positive");
  if (!std::isfinite(theta_))
    throw std::invalid_argument("GyroGeometry: theta must be finite");
  // Isoperimetric bound for a planar cavity; equality holds for a circle.
  if (4.0 * std::numbers::pi * area_ > perimeter_ * perimeter_)
    throw std::invalid_argument("GyroGeometry: area violates isoperimetric bound 4*pi*A <= L^2");
}

ReferenceRate::ReferenceRate(double omega_ref_rad_s) : omega_ref_(omega_ref_rad_s) {
  if (!(omega_ref_ > 0.0) || !std::isfinite(omega_ref_))
    throw std::invalid_argument("ReferenceRate: omega_ref must be positive");
}

double sagnac_scale_factor(const GyroGeometry& g) {
  return 8.0 * std::numbers::pi * g.area() * std::cos(g.theta()) /
         (g.wavelength() * g.perimeter());
}

double rotation_to_beat(double omega_rot, const GyroGeometry& g) {
  return sagnac_scale_factor(g) * omega_rot;
}

double beat_to_rotation(double omega_beat, const GyroGeometry& g) {
  const double k = sagnac_scale_factor(g);
  if (k == 0.0)
    throw NumericError("beat_to_rotation: degenerate geometry, scale factor is zero");
  return omega_beat / k;
}

double ratio_to_reference(double omega_rot, const ReferenceRate& ref) {
  return omega_rot / ref.omega_ref();
}

}  // namespace ringlab
