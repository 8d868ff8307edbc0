#include "microcav/scan_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "microcav/cqed.hpp"
#include "microcav/noise.hpp"

namespace microcav {

namespace {

void validate_config(const ScanConfig& config) {
  if (config.samples < 2) {
    throw std::domain_error("scan needs at least 2 samples");
  }
  if (!(config.scan_span > 0.0)) {
    throw std::domain_error("scan_span must be positive");
  }
  if (!(config.scan_start > 0.0)) {
    throw std::domain_error("scan_start must be positive");
  }
  if (!(config.noise_sigma >= 0.0)) {
    throw std::domain_error("noise_sigma must be non-negative");
  }
  if (config.max_transverse_order < 0) {
    throw std::domain_error("max_transverse_order must be non-negative");
  }
  if (!(config.transverse_depth_ratio >= 0.0) ||
      !(config.transverse_depth_ratio < 1.0)) {
    throw std::domain_error("transverse_depth_ratio must lie in [0, 1)");
  }
  const double scan_end = config.scan_start + config.scan_span;
  const double radius_min =
      std::min(config.geometry.radius_x, config.geometry.radius_y);
  if (!(scan_end < radius_min)) {
    std::ostringstream msg;
    msg << "scan range reaches " << scan_end
        << " m, beyond the stability limit at mirror radius " << radius_min << " m";
    throw std::domain_error(msg.str());
  }
}

double lorentzian_dip(double offset, double half_width) {
  return half_width * half_width / (half_width * half_width + offset * offset);
}

}  // namespace

CavityPerformance ground_truth(const ScanConfig& config) {
  const CavityGeometry& geom = config.geometry;
  const ModeProfile profile = mode_profile(geom);

  const double plane_coating = scattering_adjusted_reflectivity(
      config.plane_mirror.intrinsic_reflectivity, config.plane_mirror.roughness,
      geom.wavelength);
  const double rho_plane =
      effective_plane_reflectivity(plane_coating, profile.fiber_overlap);
  const double rho_curved = scattering_adjusted_reflectivity(
      config.curved_mirror.intrinsic_reflectivity, config.curved_mirror.roughness,
      geom.wavelength);

  const double finesse_value = finesse(rho_plane, rho_curved);
  const ResonanceWidths widths = linewidth_and_fsr(finesse_value, geom.wavelength);
  return CavityPerformance{
      .finesse = finesse_value,
      .contrast = contrast(rho_plane, rho_curved),
      .rho_plane = rho_plane,
      .rho_curved = rho_curved,
      .q_factor = q_factor(geom.cavity_length, finesse_value, geom.wavelength),
      .linewidth = widths.fwhm,
      .fsr = widths.fsr,
  };
}

std::vector<ResonancePosition> resonance_positions(const ScanConfig& config) {
  validate_config(config);
  const double lambda = config.geometry.wavelength;
  const double fsr = lambda / 2.0;
  const double spacing = transverse_mode_spacing(
      config.geometry.cavity_length, config.geometry.mean_radius(), lambda);

  // One FSR of margin keeps the tails of just-outside dips in the sum.
  const double margin = fsr;
  const double lo = config.scan_start - margin;
  const double hi = config.scan_start + config.scan_span + margin;

  std::vector<ResonancePosition> resonances;
  const long q_min = static_cast<long>(std::floor(lo / fsr)) - 1;
  const long q_max = static_cast<long>(std::ceil(hi / fsr)) + 1;
  for (long q = q_min; q <= q_max; ++q) {
    for (int m = 0; m <= config.max_transverse_order; ++m) {
      const double position = static_cast<double>(q) * fsr + m * spacing;
      if (position >= lo && position <= hi) {
        resonances.push_back({q, m, position});
      }
    }
  }
  std::sort(resonances.begin(), resonances.end(),
            [](const ResonancePosition& a, const ResonancePosition& b) {
              return a.position < b.position;
            });
  return resonances;
}

ScanTrace simulate_scan(const ScanConfig& config) {
  validate_config(config);
  const CavityPerformance truth = ground_truth(config);
  const CavityGeometry& geom = config.geometry;

  const double pitch = config.scan_span / static_cast<double>(config.samples - 1);
  ScanTrace trace;
  if (pitch > truth.linewidth / 2.0) {
    std::ostringstream msg;
    msg << "sample pitch " << pitch << " m exceeds half the resonance width "
        << truth.linewidth << " m; dips would be missed entirely";
    throw std::domain_error(msg.str());
  }
  if (pitch > truth.linewidth / 10.0) {
    std::ostringstream msg;
    msg << "sample pitch " << pitch << " m above linewidth/10 ("
        << truth.linewidth / 10.0 << " m); extracted widths will be unreliable";
    trace.warnings.push_back(msg.str());
  }

  const std::vector<ResonancePosition> resonances = resonance_positions(config);
  const double half_width = truth.linewidth / 2.0;

  // Atom-loaded (0,0) lineshape, evaluated through the length->detuning map.
  double coupling = 0.0;
  double decay = 0.0;
  if (config.atom_present) {
    const CqedParams params =
        cqed_params(geom.wavelength, mode_waist(geom), geom.cavity_length,
                    truth.finesse, config.atomic_decay_rate);
    coupling = params.coupling_rate;
    decay = params.decay_rate;
  }

  trace.positions.resize(config.samples);
  trace.intensities.resize(config.samples);
  SeededGaussian noise(config.seed);
  for (std::size_t i = 0; i < config.samples; ++i) {
    const double x = config.scan_start + static_cast<double>(i) * pitch;
    double intensity = 1.0;
    for (const ResonancePosition& res : resonances) {
      const double offset = x - res.position;
      double dip;
      if (config.atom_present && res.transverse_order == 0) {
        const double detuning =
            length_to_detuning(offset, geom.cavity_length, geom.wavelength);
        dip = 1.0 - reflected_fraction(detuning, truth.contrast, coupling, decay,
                                       config.atomic_decay_rate, true);
      } else {
        dip = truth.contrast *
              std::pow(config.transverse_depth_ratio, res.transverse_order) *
              lorentzian_dip(offset, half_width);
      }
      intensity -= dip;
    }
    if (config.noise_sigma > 0.0) {
      intensity += config.noise_sigma * noise();
    }
    trace.positions[i] = x;
    trace.intensities[i] = intensity;
  }

  trace.config = config;
  trace.truth = truth;
  return trace;
}

}  // namespace microcav
