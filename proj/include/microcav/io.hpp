#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "microcav/analysis.hpp"
#include "microcav/cqed.hpp"
#include "microcav/scan_simulator.hpp"

namespace microcav {

/// Shortest exact decimal form of a double (17 significant digits);
/// round-trips bit-exactly through strtod.
[[nodiscard]] std::string format_double(double value);

/// One row of a design sweep: geometry, mirror model and coupling figures
/// at a single cavity length.
struct DesignRow {
  double cavity_length;
  double waist;
  double curved_spot;
  double overlap;
  double rho_plane;
  double rho_curved;
  double finesse;
  double contrast;
  double q_factor;
  double coupling_rate;
  double cavity_decay_rate;
  double cooperativity;
};

/// Evaluates the full model at one cavity length, leaving the rest of the
/// configuration untouched.
[[nodiscard]] DesignRow design_row(const ScanConfig& config, double cavity_length);

/// CSV with header
/// cavity_length_m,waist_m,curved_spot_m,mode_overlap,rho_plane,rho_curved,
/// finesse,contrast,q_factor,coupling_rate_per_s,cavity_decay_rate_per_s,
/// cooperativity
void write_design_csv(std::ostream& out, const std::vector<DesignRow>& rows);

/// Trace CSV with header position_m,intensity_norm.
void write_trace_csv(std::ostream& out, const ScanTrace& trace);

/// Parses a trace CSV written by write_trace_csv. The returned trace
/// carries samples only (no configuration or ground truth).
[[nodiscard]] ScanTrace read_trace_csv(std::istream& in);

/// Spectrum CSV with header detuning_per_s,reflected_no_atom,
/// reflected_with_atom. Both spectra must share their detuning grid.
void write_spectrum_csv(std::ostream& out,
                        const std::vector<SpectrumPoint>& without_atom,
                        const std::vector<SpectrumPoint>& with_atom);

/// Parses a reflectivity series CSV with header cavity_length_m,rho_plane.
[[nodiscard]] std::vector<std::pair<double, double>> read_length_rho_csv(
    std::istream& in);

/// Ground-truth sidecar for a simulated trace: exact model figures, the
/// number of principal dips inside the window, warnings, and a re-loadable
/// echo of the configuration.
[[nodiscard]] nlohmann::json truth_sidecar(const ScanTrace& trace);

/// Full analysis of one trace: finesse, contrast, the dip list, and scan
/// calibration (wavelength from the principal spacing, length from the
/// principal positions). Includes a radius estimate when a transverse
/// satellite is resolved.
[[nodiscard]] nlohmann::json analyze_trace_report(const ScanTrace& trace,
                                                  double prominence);

/// JSON form of an intrinsic-reflectivity fit.
[[nodiscard]] nlohmann::json fit_report(const FitResult& result);

}  // namespace microcav
