#include "microcav/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "microcav/config.hpp"
#include "microcav/errors.hpp"

namespace microcav {

namespace {

std::vector<double> parse_csv_line(const std::string& line, std::size_t expected,
                                   std::size_t line_number) {
  std::vector<double> fields;
  std::size_t begin = 0;
  while (begin <= line.size()) {
    const std::size_t comma = line.find(',', begin);
    const std::string cell = line.substr(
        begin, comma == std::string::npos ? std::string::npos : comma - begin);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0) {
      std::ostringstream msg;
      msg << "CSV line " << line_number << ": cannot parse '" << cell
          << "' as a number";
      throw std::invalid_argument(msg.str());
    }
    fields.push_back(value);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (fields.size() != expected) {
    std::ostringstream msg;
    msg << "CSV line " << line_number << ": expected " << expected
        << " columns, found " << fields.size();
    throw std::invalid_argument(msg.str());
  }
  return fields;
}

std::string expect_header(std::istream& in, const std::string& header) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw std::invalid_argument("unexpected CSV header '" + line + "', expected '" +
                                header + "'");
  }
  return line;
}

}  // namespace

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

DesignRow design_row(const ScanConfig& config, double cavity_length) {
  ScanConfig local = config;
  local.geometry.cavity_length = cavity_length;

  const ModeProfile profile = mode_profile(local.geometry);
  const CavityPerformance truth = ground_truth(local);
  const CqedParams params =
      cqed_params(local.geometry.wavelength, profile.waist, cavity_length,
                  truth.finesse, local.atomic_decay_rate);
  return DesignRow{
      .cavity_length = cavity_length,
      .waist = profile.waist,
      .curved_spot = profile.curved_mirror_spot,
      .overlap = profile.fiber_overlap,
      .rho_plane = truth.rho_plane,
      .rho_curved = truth.rho_curved,
      .finesse = truth.finesse,
      .contrast = truth.contrast,
      .q_factor = truth.q_factor,
      .coupling_rate = params.coupling_rate,
      .cavity_decay_rate = params.decay_rate,
      .cooperativity = params.cooperativity,
  };
}

void write_design_csv(std::ostream& out, const std::vector<DesignRow>& rows) {
  out << "cavity_length_m,waist_m,curved_spot_m,mode_overlap,rho_plane,"
         "rho_curved,finesse,contrast,q_factor,coupling_rate_per_s,"
         "cavity_decay_rate_per_s,cooperativity\n";
  for (const DesignRow& row : rows) {
    out << format_double(row.cavity_length) << ',' << format_double(row.waist) << ','
        << format_double(row.curved_spot) << ',' << format_double(row.overlap) << ','
        << format_double(row.rho_plane) << ',' << format_double(row.rho_curved) << ','
        << format_double(row.finesse) << ',' << format_double(row.contrast) << ','
        << format_double(row.q_factor) << ',' << format_double(row.coupling_rate)
        << ',' << format_double(row.cavity_decay_rate) << ','
        << format_double(row.cooperativity) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const ScanTrace& trace) {
  out << "position_m,intensity_norm\n";
  for (std::size_t i = 0; i < trace.positions.size(); ++i) {
    out << format_double(trace.positions[i]) << ','
        << format_double(trace.intensities[i]) << '\n';
  }
}

ScanTrace read_trace_csv(std::istream& in) {
  expect_header(in, "position_m,intensity_norm");
  ScanTrace trace;
  std::string line;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<double> fields = parse_csv_line(line, 2, line_number);
    trace.positions.push_back(fields[0]);
    trace.intensities.push_back(fields[1]);
  }
  if (trace.positions.empty()) {
    throw std::invalid_argument("trace CSV contains no samples");
  }
  return trace;
}

void write_spectrum_csv(std::ostream& out,
                        const std::vector<SpectrumPoint>& without_atom,
                        const std::vector<SpectrumPoint>& with_atom) {
  if (without_atom.size() != with_atom.size()) {
    throw std::invalid_argument("spectra differ in length");
  }
  out << "detuning_per_s,reflected_no_atom,reflected_with_atom\n";
  for (std::size_t i = 0; i < without_atom.size(); ++i) {
    if (without_atom[i].detuning != with_atom[i].detuning) {
      throw std::invalid_argument("spectra differ in their detuning grids");
    }
    out << format_double(without_atom[i].detuning) << ','
        << format_double(without_atom[i].reflected_fraction) << ','
        << format_double(with_atom[i].reflected_fraction) << '\n';
  }
}

std::vector<std::pair<double, double>> read_length_rho_csv(std::istream& in) {
  expect_header(in, "cavity_length_m,rho_plane");
  std::vector<std::pair<double, double>> series;
  std::string line;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<double> fields = parse_csv_line(line, 2, line_number);
    series.emplace_back(fields[0], fields[1]);
  }
  return series;
}

nlohmann::json truth_sidecar(const ScanTrace& trace) {
  if (!trace.config || !trace.truth) {
    throw std::invalid_argument("trace carries no simulation metadata");
  }
  const ScanConfig& config = *trace.config;
  const CavityPerformance& truth = *trace.truth;

  std::size_t principal_count = 0;
  const double window_end = config.scan_start + config.scan_span;
  for (const ResonancePosition& res : resonance_positions(config)) {
    if (res.transverse_order == 0 && res.position >= config.scan_start &&
        res.position <= window_end) {
      ++principal_count;
    }
  }

  return nlohmann::json{
      {"schema_version", 1},
      {"finesse", truth.finesse},
      {"contrast", truth.contrast},
      {"rho_plane", truth.rho_plane},
      {"rho_curved", truth.rho_curved},
      {"q_factor", truth.q_factor},
      {"linewidth_m", truth.linewidth},
      {"fsr_m", truth.fsr},
      {"principal_dip_count", principal_count},
      {"warnings", trace.warnings},
      {"config", config_to_json(config)},
  };
}

nlohmann::json analyze_trace_report(const ScanTrace& trace, double prominence) {
  std::vector<DipRecord> dips = find_dips(trace, prominence);
  classify_dips(dips);
  const MeasuredResponse response = finesse_contrast_from_trace(trace, prominence);

  std::vector<double> principal_positions;
  for (const DipRecord& dip : dips) {
    if (dip.transverse_order_hint == 0) {
      principal_positions.push_back(dip.position);
    }
  }
  double spacing_sum = 0.0;
  for (std::size_t i = 1; i < principal_positions.size(); ++i) {
    spacing_sum += principal_positions[i] - principal_positions[i - 1];
  }
  const double wavelength_estimate =
      2.0 * spacing_sum / static_cast<double>(principal_positions.size() - 1);
  double position_sum = 0.0;
  for (double p : principal_positions) position_sum += p;
  const double length_estimate =
      position_sum / static_cast<double>(principal_positions.size());

  nlohmann::json dips_json = nlohmann::json::array();
  for (const DipRecord& dip : dips) {
    nlohmann::json entry{
        {"position_m", dip.position},
        {"depth", dip.depth},
        {"fwhm_m", dip.fwhm ? nlohmann::json(*dip.fwhm) : nlohmann::json()},
        {"edge_truncated", dip.edge_truncated},
    };
    if (dip.transverse_order_hint) {
      entry["transverse_order"] = *dip.transverse_order_hint;
    }
    dips_json.push_back(std::move(entry));
  }

  nlohmann::json report{
      {"schema_version", 1},
      {"finesse", response.finesse},
      {"contrast", response.contrast},
      {"principal_dips", response.principal_dips},
      {"wavelength_estimate_m", wavelength_estimate},
      {"length_estimate_m", length_estimate},
      {"dips", std::move(dips_json)},
  };
  try {
    report["radius_estimate_m"] = radius_from_scan_pair(
        length_estimate, trace, wavelength_estimate, prominence);
  } catch (const InsufficientDataError&) {
    // no satellite in this trace; the estimate is simply absent
  }
  return report;
}

nlohmann::json fit_report(const FitResult& result) {
  nlohmann::json per_point = nlohmann::json::array();
  for (const FitPoint& point : result.per_point) {
    per_point.push_back({
        {"cavity_length_m", point.cavity_length},
        {"rho_measured", point.rho_measured},
        {"rho_model", point.rho_model},
    });
  }
  return nlohmann::json{
      {"schema_version", 1},
      {"rho_estimate", result.rho_estimate},
      {"residual_rms", result.residual_rms},
      {"points_used", result.points_used},
      {"per_point", std::move(per_point)},
  };
}

}  // namespace microcav
