#pragma once

namespace ringlab {

/// Ring cavity geometry entering the Sagnac relation
///   omega_s = 8*pi * A * cos(theta) / (lambda * L) * Omega.
/// Construction rejects non-physical polygons via the isoperimetric bound
/// 4*pi*A <= L^2.
class GyroGeometry {
 public:
  GyroGeometry(double area_m2, double perimeter_m, double wavelength_m, double theta_rad);

  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  double wavelength() const { return wavelength_; }
  double theta() const { return theta_; }

 private:
  double area_;
  double perimeter_;
  double wavelength_;
  double theta_;
};

/// Reference angular rate for dimensionless ratio reporting. Defaults to the
/// nominal Earth sidereal rate; reports must always state the value used.
class ReferenceRate {
 public:
  static constexpr double kEarthSidereal = 7.292115e-5;  // rad/s

  explicit ReferenceRate(double omega_ref_rad_s = kEarthSidereal);
  double omega_ref() const { return omega_ref_; }

 private:
  double omega_ref_;
};

/// K such that omega_s = K * Omega; dimensionless.
double sagnac_scale_factor(const GyroGeometry& g);

double rotation_to_beat(double omega_rot, const GyroGeometry& g);

/// Inverse of rotation_to_beat; throws NumericError when K == 0 (theta = pi/2).
double beat_to_rotation(double omega_beat, const GyroGeometry& g);

double ratio_to_reference(double omega_rot, const ReferenceRate& ref);

}  // namespace ringlab
