#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "microcav/scan_simulator.hpp"

namespace microcav {

/// Optional overrides for the atom-spectrum command, replacing the values
/// otherwise derived from the cavity model.
struct CqedOverrides {
  std::optional<double> coupling_rate;
  std::optional<double> cavity_decay_rate;
  std::optional<double> contrast;
};

/// One fully resolved tool configuration. `explicit_scan` records which
/// scan-window fields were given by the user; the rest are (re)derived by
/// finalize_config after any command-line overrides.
struct AppConfig {
  ScanConfig scan;
  CqedOverrides atom_spectrum;
  struct {
    bool start = false;
    bool span = false;
    bool samples = false;
  } explicit_scan;
};

/// Length from a JSON value: plain numbers are metres, strings carry a
/// unit suffix ("150 um", "780nm", "2 nm", "0.15 mm", "1.5e-4 m").
/// Throws std::invalid_argument naming the key on anything else.
[[nodiscard]] double parse_length(const nlohmann::json& value,
                                  const std::string& key);

/// Length from command-line text: "150um", "780 nm", or a bare number
/// taken as metres.
[[nodiscard]] double parse_length_text(const std::string& text,
                                       const std::string& key);

/// Builds a configuration from a parsed JSON document. Unknown keys are
/// rejected; absent scan-window keys are left for finalize_config.
[[nodiscard]] AppConfig config_from_json(const nlohmann::json& doc);

/// Reads and parses a JSON configuration file.
[[nodiscard]] AppConfig load_config_file(const std::filesystem::path& path);

/// Built-in configurations mirroring the two coating generations:
/// "gold" (0.984 dielectric stack against a sputtered gold micro-mirror,
/// L = 150 um) and "dielectric" (99.99% coatings on both mirrors with 2 nm
/// curved-mirror roughness, L = 25 um). Both use R = 185 um, a 2.65 um
/// fibre mode and 780 nm light.
[[nodiscard]] AppConfig preset_config(std::string_view name);

/// Fills every scan-window field not explicitly configured:
/// span = one wavelength (two free spectral ranges), window centred on the
/// nominal length, sample pitch one twentieth of the model linewidth.
void finalize_config(AppConfig& config);

/// Full JSON echo of a configuration, re-loadable by config_from_json.
[[nodiscard]] nlohmann::json config_to_json(const ScanConfig& config);

}  // namespace microcav
