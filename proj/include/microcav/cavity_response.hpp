#pragma once

#include <array>

namespace microcav {

/// Coating and surface properties of one mirror.
struct MirrorSpec {
  double intrinsic_reflectivity;  ///< reflectivity of the coating alone, in [0, 1)
  double roughness;               ///< rms surface roughness (m), >= 0
};

/// Figures of merit of one cavity configuration.
struct CavityPerformance {
  double finesse;
  double contrast;     ///< fractional depth of the resonance dip, in [0, 1]
  double rho_plane;    ///< effective reflectivity of the plane-mirror end
  double rho_curved;   ///< effective reflectivity of the curved-mirror end
  double q_factor;
  double linewidth;    ///< FWHM of a resonance, as a length change (m)
  double fsr;          ///< free spectral range, as a length change (m): lambda/2
};

/// An unlabelled pair of effective reflectivities, as recovered from a
/// (finesse, contrast) measurement. Which one belongs to the plane mirror
/// is decided downstream.
struct ReflectivityPair {
  double rho_a;
  double rho_b;
};

/// Resonance width and spacing expressed as cavity-length changes.
struct ResonanceWidths {
  double fwhm;  ///< full width at half maximum of one resonance (m)
  double fsr;   ///< spacing of successive longitudinal resonances (m)
};

/// Finesse of a two-mirror cavity with effective reflectivities rho_a,
/// rho_b: pi (rho_a rho_b)^(1/4) / (1 - sqrt(rho_a rho_b)).
/// Symmetric in its arguments and strictly increasing in the product.
[[nodiscard]] double finesse(double rho_a, double rho_b);

/// Fringe contrast 1 - I_min/I_max of the reflection dip:
/// 1 - ((sqrt(rho_a) - sqrt(rho_b)) / (1 - sqrt(rho_a rho_b)))^2.
/// Symmetric, in [0, 1], equal to 1 iff the mirrors are matched.
[[nodiscard]] double contrast(double rho_a, double rho_b);

/// Recovers the two effective reflectivities from a measured finesse and
/// contrast. The solution is unique up to which mirror is which, so both
/// orderings are returned; they coincide when contrast == 1.
///
/// Solves pi sqrt(s)/(1-s) = F for s = sqrt(rho_a rho_b) by bracketed
/// bisection on (0, 1), then splits s using
/// sqrt(rho_a) - sqrt(rho_b) = +-sqrt(1-C) (1-s).
///
/// Throws InconsistentMeasurementError when no reflectivities in [0, 1)
/// reproduce the inputs.
[[nodiscard]] std::array<ReflectivityPair, 2> invert_finesse_contrast(
    double finesse_value, double contrast_value);

/// Effective reflectivity of the plane-mirror end seen by the cavity mode:
/// 1 - overlap^2 (1 - intrinsic). Light that misses the mode is promptly
/// reflected, so the value approaches 1 as the overlap vanishes.
[[nodiscard]] double effective_plane_reflectivity(double intrinsic_reflectivity,
                                                  double overlap);

/// Reflectivity reduced by surface-roughness scattering:
/// rho * exp(-(4 pi sigma / lambda)^2).
[[nodiscard]] double scattering_adjusted_reflectivity(double reflectivity,
                                                      double roughness,
                                                      double wavelength);

/// Cavity quality factor 2 L F / lambda.
[[nodiscard]] double q_factor(double cavity_length, double finesse_value,
                              double wavelength);

/// Resonance FWHM lambda/(2F) and free spectral range lambda/2, both as
/// cavity-length changes.
[[nodiscard]] ResonanceWidths linewidth_and_fsr(double finesse_value,
                                                double wavelength);

}  // namespace microcav
