#pragma once

#include <cmath>

namespace microcav {

/**
 * Geometry of a plano-concave Fabry-Perot micro-cavity: a plane mirror
 * (the coated fibre tip) facing a concave micro-mirror of radius of
 * curvature radius_x / radius_y along the two principal axes.
 *
 * All lengths are SI metres. The cavity supports a Gaussian mode only in
 * the stable range 0 < cavity_length < min(radius_x, radius_y); the mode
 * operations below enforce this and throw std::domain_error outside it.
 *
 * Mode radii follow the 1/e field-amplitude convention.
 */
struct CavityGeometry {
  double wavelength;         ///< operating wavelength (m)
  double cavity_length;      ///< mirror separation L (m)
  double radius_x;           ///< curved-mirror radius of curvature, x axis (m)
  double radius_y;           ///< curved-mirror radius of curvature, y axis (m)
  double fiber_mode_radius;  ///< 1/e field radius of the fibre mode (m)

  /// Isotropic radius of curvature used for mode computations.
  [[nodiscard]] double mean_radius() const { return 0.5 * (radius_x + radius_y); }

  /// Curvature mismatch between the two principal axes (m).
  [[nodiscard]] double astigmatism() const { return std::abs(radius_x - radius_y); }
};

/// Transverse extent of the fundamental cavity mode and its projection onto
/// the fibre mode.
struct ModeProfile {
  double waist;              ///< 1/e field radius at the plane mirror (m); the mode waist
  double curved_mirror_spot; ///< 1/e field radius on the concave mirror (m)
  double fiber_overlap;      ///< amplitude overlap with the fibre mode, in (0, 1]
};

/// Mode waist at the plane mirror: sqrt(lambda/pi) * (L(R-L))^(1/4).
/// Maximal at L = R/2, vanishing in the short-cavity limit.
[[nodiscard]] double mode_waist(const CavityGeometry& geom);

/// Spot radius on the concave mirror: (lambda/pi) * sqrt(LR) / waist.
/// Diverges as L approaches R, where the mode spills off the mirror.
[[nodiscard]] double curved_mirror_spot(const CavityGeometry& geom);

/// Amplitude overlap of two co-axial Gaussian modes of 1/e radii a and b:
/// 2ab / (a^2 + b^2). Symmetric, equal to 1 iff a == b.
[[nodiscard]] double mode_overlap(double radius_a, double radius_b);

/// Waist, curved-mirror spot and fibre overlap for one geometry.
[[nodiscard]] ModeProfile mode_profile(const CavityGeometry& geom);

/// Length change between adjacent transverse (radial) modes of the same
/// longitudinal order: (lambda/2pi) * arccos(sqrt(1 - L/R)).
/// Lies in (0, lambda/4) for any stable cavity.
[[nodiscard]] double transverse_mode_spacing(double cavity_length,
                                             double mirror_radius,
                                             double wavelength);

/// Radius of curvature that reproduces a measured transverse-mode spacing:
/// R = L / sin^2(2 pi spacing / lambda). Exact inverse of
/// transverse_mode_spacing; requires 0 < spacing < lambda/4.
[[nodiscard]] double radius_from_spacing(double cavity_length, double spacing,
                                         double wavelength);

/// Splitting of the transverse-mode doublet caused by unequal curvature
/// along the two principal axes: |spacing(R_x) - spacing(R_y)|.
[[nodiscard]] double astigmatic_splitting(double cavity_length, double radius_x,
                                          double radius_y, double wavelength);

/// L/R with the isotropic mean radius. Values >= 1 mean the cavity is
/// outside the stability range; this function reports, it does not judge.
[[nodiscard]] double stability_ratio(const CavityGeometry& geom);

}  // namespace microcav
