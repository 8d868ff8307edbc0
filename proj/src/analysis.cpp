#include "microcav/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "microcav/cavity_response.hpp"
#include "microcav/errors.hpp"

namespace microcav {

namespace {

double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::domain_error("median of an empty range");
  }
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double upper = values[mid];
  if (values.size() % 2 == 0) {
    const double lower = *std::max_element(values.begin(), values.begin() + mid);
    return 0.5 * (lower + upper);
  }
  return upper;
}

struct Run {
  std::size_t begin;  // first index below threshold
  std::size_t end;    // one past the last index below threshold
};

// Contiguous runs of samples below `threshold`, merged across gaps whose
// intensity never recovers halfway back to the baseline. The merge keeps
// noise-fragmented flanks of a single dip from spawning duplicates.
std::vector<Run> dip_runs(const std::vector<double>& intensity, double threshold,
                          double merge_level) {
  std::vector<Run> runs;
  std::size_t i = 0;
  const std::size_t n = intensity.size();
  while (i < n) {
    if (intensity[i] < threshold) {
      std::size_t j = i;
      while (j < n && intensity[j] < threshold) ++j;
      runs.push_back({i, j});
      i = j;
    } else {
      ++i;
    }
  }
  std::vector<Run> merged;
  for (const Run& run : runs) {
    if (!merged.empty()) {
      bool bridge = true;
      for (std::size_t k = merged.back().end; k < run.begin; ++k) {
        if (intensity[k] >= merge_level) {
          bridge = false;
          break;
        }
      }
      if (bridge) {
        merged.back().end = run.end;
        continue;
      }
    }
    merged.push_back(run);
  }
  return merged;
}

// Vertex of the parabola through three equally spaced samples around the
// minimum; falls back to the sample position at the trace edge or when the
// neighbourhood is not convex.
double refine_position(const ScanTrace& trace, std::size_t idx) {
  if (idx == 0 || idx + 1 >= trace.positions.size()) {
    return trace.positions[idx];
  }
  const double left = trace.intensities[idx - 1];
  const double centre = trace.intensities[idx];
  const double right = trace.intensities[idx + 1];
  const double curvature = left - 2.0 * centre + right;
  if (!(curvature > 0.0)) {
    return trace.positions[idx];
  }
  const double shift = 0.5 * (left - right) / curvature;
  const double pitch = trace.positions[idx + 1] - trace.positions[idx];
  return trace.positions[idx] + shift * pitch;
}

// Linear interpolation of the first crossing of `level`, walking outward
// from `start`. Returns nothing when the walk hits the trace edge first.
std::optional<double> half_crossing(const ScanTrace& trace, std::size_t start,
                                    double level, bool leftward) {
  const std::vector<double>& intensity = trace.intensities;
  const std::vector<double>& position = trace.positions;
  std::size_t i = start;
  while (true) {
    if (leftward) {
      if (i == 0) return std::nullopt;
      --i;
    } else {
      if (i + 1 >= intensity.size()) return std::nullopt;
      ++i;
    }
    if (intensity[i] >= level) {
      const std::size_t inner = leftward ? i + 1 : i - 1;
      const double gap = intensity[i] - intensity[inner];
      const double frac = gap > 0.0 ? (level - intensity[inner]) / gap : 0.0;
      return position[inner] + frac * (position[i] - position[inner]);
    }
  }
}

}  // namespace

std::vector<DipRecord> find_dips(const ScanTrace& trace, double prominence) {
  if (trace.positions.size() != trace.intensities.size()) {
    throw std::domain_error("trace position/intensity lengths differ");
  }
  if (trace.positions.size() < 3) {
    throw std::domain_error("trace too short to search for dips");
  }
  if (!(prominence > 0.0)) {
    throw std::domain_error("prominence must be positive");
  }

  const double baseline = median(trace.intensities);
  const double threshold = baseline - prominence;
  const double merge_level = baseline - 0.5 * prominence;

  std::vector<DipRecord> dips;
  for (const Run& run : dip_runs(trace.intensities, threshold, merge_level)) {
    const auto floor_it = std::min_element(trace.intensities.begin() + run.begin,
                                           trace.intensities.begin() + run.end);
    const std::size_t floor_idx = floor_it - trace.intensities.begin();

    DipRecord dip;
    dip.position = refine_position(trace, floor_idx);
    dip.depth = baseline - *floor_it;
    dip.edge_truncated = run.begin == 0 || run.end == trace.intensities.size();

    if (!dip.edge_truncated) {
      const double level = baseline - 0.5 * dip.depth;
      const auto left = half_crossing(trace, floor_idx, level, true);
      const auto right = half_crossing(trace, floor_idx, level, false);
      if (left && right) {
        dip.fwhm = *right - *left;
      } else {
        dip.edge_truncated = true;
      }
    }
    dips.push_back(dip);
  }
  return dips;
}

void classify_dips(std::vector<DipRecord>& dips) {
  if (dips.empty()) return;
  double max_depth = 0.0;
  for (const DipRecord& dip : dips) max_depth = std::max(max_depth, dip.depth);
  for (DipRecord& dip : dips) {
    dip.transverse_order_hint = dip.depth >= 0.5 * max_depth ? 0 : 1;
  }
}

MeasuredResponse finesse_contrast_from_trace(const ScanTrace& trace,
                                             double prominence) {
  std::vector<DipRecord> dips = find_dips(trace, prominence);
  classify_dips(dips);

  std::vector<const DipRecord*> principal;
  for (const DipRecord& dip : dips) {
    if (dip.transverse_order_hint == 0) principal.push_back(&dip);
  }
  if (principal.size() < 2) {
    std::ostringstream msg;
    msg << "need at least 2 principal dips to measure finesse, found "
        << principal.size();
    throw InsufficientDataError(msg.str());
  }

  double spacing_sum = 0.0;
  for (std::size_t i = 1; i < principal.size(); ++i) {
    spacing_sum += principal[i]->position - principal[i - 1]->position;
  }
  const double mean_spacing =
      spacing_sum / static_cast<double>(principal.size() - 1);

  double width_sum = 0.0;
  std::size_t width_count = 0;
  for (const DipRecord* dip : principal) {
    if (dip->fwhm) {
      width_sum += *dip->fwhm;
      ++width_count;
    }
  }
  if (width_count == 0) {
    throw InsufficientDataError(
        "every principal dip is edge-truncated; no width available");
  }
  const double mean_width = width_sum / static_cast<double>(width_count);

  // Off-resonant level: median of samples farther than 5 widths from any dip.
  std::vector<double> far_samples;
  for (std::size_t i = 0; i < trace.positions.size(); ++i) {
    const double x = trace.positions[i];
    bool far = true;
    for (const DipRecord& dip : dips) {
      if (std::abs(x - dip.position) < 5.0 * mean_width) {
        far = false;
        break;
      }
    }
    if (far) far_samples.push_back(trace.intensities[i]);
  }
  const double i_max = far_samples.empty() ? median(trace.intensities)
                                           : median(std::move(far_samples));

  // Dip depths were measured against the global median, so the deepest
  // principal floor sits at (median - max depth).
  double max_depth = 0.0;
  for (const DipRecord* dip : principal) {
    max_depth = std::max(max_depth, dip->depth);
  }
  const double i_min = median(trace.intensities) - max_depth;

  return MeasuredResponse{
      .finesse = mean_spacing / mean_width,
      .contrast = 1.0 - i_min / i_max,
      .principal_dips = principal.size(),
  };
}

std::vector<ReflectivityPoint> reflectivity_series(
    const std::vector<ResponsePoint>& points, const CavityGeometry& geometry) {
  std::vector<ReflectivityPoint> series;
  std::vector<ReflectivityPair> pairs(points.size());
  std::vector<double> overlap_sq(points.size(), 0.0);

  for (std::size_t i = 0; i < points.size(); ++i) {
    ReflectivityPoint row{points[i].cavity_length, 0.0, 0.0, false, false};
    try {
      pairs[i] = invert_finesse_contrast(points[i].finesse, points[i].contrast)[0];
      CavityGeometry local = geometry;
      local.cavity_length = points[i].cavity_length;
      const double eta = mode_profile(local).fiber_overlap;
      overlap_sq[i] = eta * eta;
      row.valid = true;
    } catch (const std::domain_error&) {
      row.valid = false;
    }
    series.push_back(row);
  }

  // Iterate branch assignment against the overlap model: fit the intrinsic
  // loss from the current rho_plane choices, then re-pick per point the
  // branch closer to the fitted curve, until the assignment is stable.
  std::vector<bool> swapped(points.size(), false);
  for (int iter = 0; iter < 20; ++iter) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!series[i].valid) continue;
      const double rho_plane = swapped[i] ? pairs[i].rho_b : pairs[i].rho_a;
      num += overlap_sq[i] * (1.0 - rho_plane);
      den += overlap_sq[i] * overlap_sq[i];
    }
    if (!(den > 0.0)) break;
    const double loss = num / den;

    bool changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!series[i].valid) continue;
      const double model = 1.0 - overlap_sq[i] * loss;
      const bool pick_b = std::abs(pairs[i].rho_b - model) <
                          std::abs(pairs[i].rho_a - model);
      if (pick_b != swapped[i]) {
        swapped[i] = pick_b;
        changed = true;
      }
    }
    if (!changed) break;
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!series[i].valid) continue;
    series[i].swapped = swapped[i];
    series[i].rho_plane = swapped[i] ? pairs[i].rho_b : pairs[i].rho_a;
    series[i].rho_curved = swapped[i] ? pairs[i].rho_a : pairs[i].rho_b;
  }
  return series;
}

FitResult fit_intrinsic_reflectivity(
    const std::vector<std::pair<double, double>>& length_rho_series,
    const CavityGeometry& geometry) {
  if (length_rho_series.size() < 2) {
    std::ostringstream msg;
    msg << "fit needs at least 2 points, got " << length_rho_series.size();
    throw InsufficientDataError(msg.str());
  }

  double num = 0.0;
  double den = 0.0;
  std::vector<double> overlap_sq;
  overlap_sq.reserve(length_rho_series.size());
  for (const auto& [length, rho_measured] : length_rho_series) {
    CavityGeometry local = geometry;
    local.cavity_length = length;
    const double eta = mode_profile(local).fiber_overlap;
    overlap_sq.push_back(eta * eta);
    num += eta * eta * (1.0 - rho_measured);
    den += eta * eta * eta * eta;
  }
  if (!(den > 1e-30)) {
    throw std::domain_error(
        "degenerate fit: mode overlap vanishes at every supplied length");
  }

  const double loss = num / den;
  FitResult result;
  result.rho_estimate = 1.0 - loss;
  result.points_used = length_rho_series.size();

  double residual_sq = 0.0;
  for (std::size_t i = 0; i < length_rho_series.size(); ++i) {
    const double model = 1.0 - overlap_sq[i] * loss;
    const double measured = length_rho_series[i].second;
    residual_sq += (measured - model) * (measured - model);
    result.per_point.push_back(
        {length_rho_series[i].first, measured, model});
  }
  result.residual_rms =
      std::sqrt(residual_sq / static_cast<double>(length_rho_series.size()));
  return result;
}

double radius_from_scan_pair(double cavity_length, const ScanTrace& trace,
                             double wavelength, double prominence) {
  std::vector<DipRecord> dips = find_dips(trace, prominence);
  classify_dips(dips);

  // Offsets from each principal dip to satellites within one quarter
  // wavelength above it (the full range of the transverse-mode spacing).
  std::vector<double> offsets;
  for (const DipRecord& principal : dips) {
    if (principal.transverse_order_hint != 0) continue;
    for (const DipRecord& satellite : dips) {
      if (satellite.transverse_order_hint == 0) continue;
      const double offset = satellite.position - principal.position;
      if (offset > 0.0 && offset < wavelength / 4.0) {
        offsets.push_back(offset);
      }
    }
  }
  if (offsets.empty()) {
    throw InsufficientDataError(
        "no transverse satellite resolved next to a principal dip");
  }
  return radius_from_spacing(cavity_length, median(std::move(offsets)), wavelength);
}

}  // namespace microcav
