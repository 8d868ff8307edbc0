#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "microcav/cavity_response.hpp"
#include "microcav/constants.hpp"
#include "microcav/mode_geometry.hpp"

namespace microcav {

/**
 * Full description of one simulated piezo length scan: the cavity under
 * test plus the scan window, sampling, noise and seeding.
 *
 * Positions are absolute mirror separations; resonances of transverse
 * order m sit at q*lambda/2 + m*transverse_mode_spacing. The nominal
 * cavity_length is used for all mode-geometry evaluations, since the
 * scan span is of order lambda and far below the length scale on which
 * the mode changes.
 */
struct ScanConfig {
  CavityGeometry geometry;
  MirrorSpec plane_mirror;
  MirrorSpec curved_mirror;
  double scan_start = 0.0;             ///< first sampled mirror position (m)
  double scan_span = 0.0;              ///< scanned distance (m), > 0
  std::size_t samples = 0;             ///< number of samples, >= 2
  double noise_sigma = 0.0;            ///< std. dev. of additive intensity noise
  std::uint64_t seed = 1;              ///< noise stream seed
  int max_transverse_order = 1;        ///< highest transverse order simulated
  double transverse_depth_ratio = 0.1; ///< per-order dip-depth decay, in [0, 1)
  bool atom_present = false;           ///< replace (0,0) dips by the atom-loaded lineshape
  double atomic_decay_rate = default_atomic_decay_rate;
};

/// One simulated trace plus the configuration and exact model values that
/// produced it. Traces loaded back from disk carry samples only.
struct ScanTrace {
  std::vector<double> positions;    ///< strictly increasing, equally spaced (m)
  std::vector<double> intensities;  ///< normalized reflected intensity
  std::optional<ScanConfig> config;
  std::optional<CavityPerformance> truth;
  std::vector<std::string> warnings;
};

/// One resonance in (or near) the scan window.
struct ResonancePosition {
  long longitudinal_index;  ///< q in position = q*lambda/2 + m*spacing
  int transverse_order;     ///< m
  double position;          ///< mirror separation of the resonance (m)
};

/// Exact performance figures the simulator draws from: effective
/// reflectivities from the mirror model at the nominal length, finesse and
/// contrast from them, widths from the finesse.
[[nodiscard]] CavityPerformance ground_truth(const ScanConfig& config);

/// Resonance positions of every (q, m) mode family within (a margin
/// around) the scan window, sorted by position.
[[nodiscard]] std::vector<ResonancePosition> resonance_positions(
    const ScanConfig& config);

/// Synthesizes the reflected-intensity trace: unit baseline minus one
/// Lorentzian dip per resonance (depth contrast * ratio^m, FWHM
/// lambda/(2F)), plus seeded Gaussian noise. Identical configs produce
/// bitwise-identical traces.
///
/// Throws std::domain_error when the cavity is unstable anywhere in the
/// window or the sample pitch exceeds half a linewidth; records a warning
/// when the pitch exceeds a tenth of a linewidth.
[[nodiscard]] ScanTrace simulate_scan(const ScanConfig& config);

}  // namespace microcav
