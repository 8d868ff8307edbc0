#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "microcav/mode_geometry.hpp"
#include "microcav/scan_simulator.hpp"

namespace microcav {

/// One reflection dip extracted from a scan trace.
struct DipRecord {
  double position;              ///< refined dip centre (m)
  double depth;                 ///< baseline minus dip floor, in (0, 1]
  std::optional<double> fwhm;   ///< full width at half depth (m); absent when truncated
  std::optional<int> transverse_order_hint;  ///< 0 = principal family, 1 = satellite
  bool edge_truncated = false;  ///< dip cut by the scan edge; excluded from width stats
};

/// Finesse and contrast extracted from one trace.
struct MeasuredResponse {
  double finesse;
  double contrast;
  std::size_t principal_dips;  ///< dips of the deepest family used for the estimate
};

/// One cavity length of a reflectivity series, after branch assignment.
struct ReflectivityPoint {
  double cavity_length;  ///< m
  double rho_plane;
  double rho_curved;
  bool swapped;          ///< plane mirror took the smaller root of the inversion
  bool valid;            ///< inversion succeeded at this point
};

/// Intrinsic-reflectivity fit output.
struct FitPoint {
  double cavity_length;   ///< m
  double rho_measured;
  double rho_model;
};

struct FitResult {
  double rho_estimate;    ///< fitted intrinsic coating reflectivity
  double residual_rms;
  std::size_t points_used;
  std::vector<FitPoint> per_point;
};

/// Default dip-detection prominence for a given noise level.
[[nodiscard]] inline double default_prominence(double noise_sigma) {
  return noise_sigma * 5.0 > 0.02 ? noise_sigma * 5.0 : 0.02;
}

/// Detects reflection dips deeper than `prominence` below the trace
/// baseline (median level). Each dip's position is refined by parabolic
/// interpolation and its FWHM measured by linear interpolation of the
/// half-depth crossings; dips cut by the scan edge are flagged and carry
/// no width. Returns records sorted by position; an empty list when
/// nothing exceeds the prominence.
[[nodiscard]] std::vector<DipRecord> find_dips(const ScanTrace& trace,
                                               double prominence);

/// Marks the deepest dip family as transverse order 0 and the rest as
/// order 1 (satellites). A dip counts as principal when its depth reaches
/// half the maximum depth.
void classify_dips(std::vector<DipRecord>& dips);

/// Finesse as (mean principal-dip spacing)/(mean principal FWHM) and
/// contrast as 1 - I_min/I_max, with I_max the median intensity away from
/// all dips and I_min the deepest principal floor. Needs at least two
/// principal dips, else throws InsufficientDataError.
[[nodiscard]] MeasuredResponse finesse_contrast_from_trace(const ScanTrace& trace,
                                                           double prominence);

/// One (length, finesse, contrast) measurement.
struct ResponsePoint {
  double cavity_length;  ///< m
  double finesse;
  double contrast;
};

/// Inverts each measurement to effective reflectivities and assigns the
/// branches: the assignment that best follows the overlap model
/// rho_plane = 1 - eta^2(L)(1 - rho_hat) across the series (iterating the
/// provisional fit to a fixed point) is labelled plane-mirror. Points
/// whose inversion fails are flagged invalid, never fatal.
[[nodiscard]] std::vector<ReflectivityPoint> reflectivity_series(
    const std::vector<ResponsePoint>& points, const CavityGeometry& geometry);

/// Fits the intrinsic coating reflectivity rho through the overlap model
/// 1 - rho_plane(L) = eta^2(L)(1 - rho), linear in the loss (1 - rho):
/// closed-form least squares rho_hat = 1 - sum(eta^2 loss) / sum(eta^4).
/// The geometry provides eta(L) via the fibre mode radius.
[[nodiscard]] FitResult fit_intrinsic_reflectivity(
    const std::vector<std::pair<double, double>>& length_rho_series,
    const CavityGeometry& geometry);

/// Radius of curvature from the offset between a principal dip and its
/// transverse satellite: radius_from_spacing(L, offset, lambda). Uses the
/// median offset over all principal/satellite pairs found. Throws
/// InsufficientDataError when no satellite is resolved.
[[nodiscard]] double radius_from_scan_pair(double cavity_length,
                                           const ScanTrace& trace,
                                           double wavelength,
                                           double prominence);

}  // namespace microcav
