#include "microcav/mode_geometry.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace microcav {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    std::ostringstream msg;
    msg << name << " must be positive, got " << value;
    throw std::domain_error(msg.str());
  }
}

// Stability gate for all mode computations: 0 < L < min(R_x, R_y).
void require_stable(double cavity_length, double radius, const char* radius_name) {
  require_positive(cavity_length, "cavity_length");
  require_positive(radius, radius_name);
  if (!(cavity_length < radius)) {
    std::ostringstream msg;
    msg << "unstable cavity: cavity_length " << cavity_length << " m must be below "
        << radius_name << " " << radius << " m";
    throw std::domain_error(msg.str());
  }
}

void validate_geometry(const CavityGeometry& geom) {
  require_positive(geom.wavelength, "wavelength");
  require_positive(geom.fiber_mode_radius, "fiber_mode_radius");
  require_stable(geom.cavity_length, geom.radius_x, "radius_x");
  require_stable(geom.cavity_length, geom.radius_y, "radius_y");
}

}  // namespace

double mode_waist(const CavityGeometry& geom) {
  validate_geometry(geom);
  const double length = geom.cavity_length;
  const double radius = geom.mean_radius();
  return std::sqrt(geom.wavelength / std::numbers::pi) *
         std::pow(length * (radius - length), 0.25);
}

double curved_mirror_spot(const CavityGeometry& geom) {
  validate_geometry(geom);
  const double length = geom.cavity_length;
  const double radius = geom.mean_radius();
  return (geom.wavelength / std::numbers::pi) * std::sqrt(length * radius) /
         mode_waist(geom);
}

double mode_overlap(double radius_a, double radius_b) {
  require_positive(radius_a, "mode radius");
  require_positive(radius_b, "mode radius");
  return 2.0 * radius_a * radius_b / (radius_a * radius_a + radius_b * radius_b);
}

ModeProfile mode_profile(const CavityGeometry& geom) {
  const double waist = mode_waist(geom);
  return ModeProfile{
      .waist = waist,
      .curved_mirror_spot = curved_mirror_spot(geom),
      .fiber_overlap = mode_overlap(geom.fiber_mode_radius, waist),
  };
}

double transverse_mode_spacing(double cavity_length, double mirror_radius,
                               double wavelength) {
  require_positive(wavelength, "wavelength");
  require_stable(cavity_length, mirror_radius, "mirror_radius");
  return wavelength / (2.0 * std::numbers::pi) *
         std::acos(std::sqrt(1.0 - cavity_length / mirror_radius));
}

double radius_from_spacing(double cavity_length, double spacing, double wavelength) {
  require_positive(cavity_length, "cavity_length");
  require_positive(wavelength, "wavelength");
  if (!(spacing > 0.0) || !(spacing < wavelength / 4.0)) {
    std::ostringstream msg;
    msg << "transverse-mode spacing " << spacing
        << " m outside the invertible range (0, lambda/4) at lambda " << wavelength
        << " m";
    throw std::domain_error(msg.str());
  }
  const double phase = 2.0 * std::numbers::pi * spacing / wavelength;
  const double sine = std::sin(phase);
  return cavity_length / (sine * sine);
}

double astigmatic_splitting(double cavity_length, double radius_x, double radius_y,
                            double wavelength) {
  return std::abs(transverse_mode_spacing(cavity_length, radius_x, wavelength) -
                  transverse_mode_spacing(cavity_length, radius_y, wavelength));
}

double stability_ratio(const CavityGeometry& geom) {
  require_positive(geom.cavity_length, "cavity_length");
  const double radius = geom.mean_radius();
  require_positive(radius, "mean radius");
  return geom.cavity_length / radius;
}

}  // namespace microcav
