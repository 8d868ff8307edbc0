#include "microcav/cavity_response.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "microcav/errors.hpp"

namespace microcav {

namespace {

void require_reflectivity(double rho, const char* name) {
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1), got " << rho;
    throw std::domain_error(msg.str());
  }
}

double finesse_of_mean_root(double s) {
  // s = sqrt(rho_a rho_b); finesse as a function of s alone.
  return std::numbers::pi * std::sqrt(s) / (1.0 - s);
}

}  // namespace

double finesse(double rho_a, double rho_b) {
  require_reflectivity(rho_a, "rho_a");
  require_reflectivity(rho_b, "rho_b");
  const double product = rho_a * rho_b;
  return std::numbers::pi * std::pow(product, 0.25) / (1.0 - std::sqrt(product));
}

double contrast(double rho_a, double rho_b) {
  require_reflectivity(rho_a, "rho_a");
  require_reflectivity(rho_b, "rho_b");
  const double ratio = (std::sqrt(rho_a) - std::sqrt(rho_b)) /
                       (1.0 - std::sqrt(rho_a * rho_b));
  return 1.0 - ratio * ratio;
}

std::array<ReflectivityPair, 2> invert_finesse_contrast(double finesse_value,
                                                        double contrast_value) {
  if (!(finesse_value > 0.0)) {
    throw std::domain_error("finesse must be positive to invert");
  }
  if (!(contrast_value > 0.0) || !(contrast_value <= 1.0)) {
    throw std::domain_error("contrast must lie in (0, 1] to invert");
  }

  // pi sqrt(s)/(1-s) is strictly increasing from 0 to +inf on s in (0, 1),
  // so the bracket [0, 1] always contains exactly one root.
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (finesse_of_mean_root(mid) < finesse_value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double s = 0.5 * (lo + hi);

  // sqrt(rho_a) and sqrt(rho_b) from their product s and difference d.
  const double d = std::sqrt(1.0 - contrast_value) * (1.0 - s);
  const double sum = std::sqrt(d * d + 4.0 * s);
  const double root_hi = 0.5 * (sum + d);
  const double root_lo = 0.5 * (sum - d);
  const double rho_hi = root_hi * root_hi;
  const double rho_lo = root_lo * root_lo;

  if (!(rho_hi < 1.0) || !(rho_lo >= 0.0)) {
    std::ostringstream msg;
    msg << "finesse " << finesse_value << " and contrast " << contrast_value
        << " are not reproducible by reflectivities in [0, 1)";
    throw InconsistentMeasurementError(msg.str());
  }
  return {ReflectivityPair{rho_hi, rho_lo}, ReflectivityPair{rho_lo, rho_hi}};
}

double effective_plane_reflectivity(double intrinsic_reflectivity, double overlap) {
  require_reflectivity(intrinsic_reflectivity, "intrinsic reflectivity");
  if (!(overlap >= 0.0) || !(overlap <= 1.0)) {
    std::ostringstream msg;
    msg << "mode overlap must lie in [0, 1], got " << overlap;
    throw std::domain_error(msg.str());
  }
  return 1.0 - overlap * overlap * (1.0 - intrinsic_reflectivity);
}

double scattering_adjusted_reflectivity(double reflectivity, double roughness,
                                        double wavelength) {
  require_reflectivity(reflectivity, "reflectivity");
  if (!(roughness >= 0.0)) {
    throw std::domain_error("roughness must be non-negative");
  }
  if (!(wavelength > 0.0)) {
    throw std::domain_error("wavelength must be positive");
  }
  const double phase = 4.0 * std::numbers::pi * roughness / wavelength;
  return reflectivity * std::exp(-phase * phase);
}

double q_factor(double cavity_length, double finesse_value, double wavelength) {
  if (!(cavity_length > 0.0) || !(finesse_value > 0.0) || !(wavelength > 0.0)) {
    throw std::domain_error("q_factor requires positive length, finesse and wavelength");
  }
  return 2.0 * cavity_length * finesse_value / wavelength;
}

ResonanceWidths linewidth_and_fsr(double finesse_value, double wavelength) {
  if (!(finesse_value > 0.0) || !(wavelength > 0.0)) {
    throw std::domain_error("linewidth_and_fsr requires positive finesse and wavelength");
  }
  return ResonanceWidths{
      .fwhm = wavelength / (2.0 * finesse_value),
      .fsr = wavelength / 2.0,
  };
}

}  // namespace microcav
