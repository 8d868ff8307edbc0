#include "microcav/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace microcav {

namespace {

const std::map<std::string, double, std::less<>> unit_scale = {
    {"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12},
};

[[noreturn]] void bad_key(const std::string& key, const std::string& detail) {
  throw std::invalid_argument("config key '" + key + "': " + detail);
}

double require_number(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number()) bad_key(key, "expected a number");
  return value.get<double>();
}

void check_known_keys(const nlohmann::json& object, const std::string& scope,
                      std::initializer_list<const char*> known) {
  for (const auto& item : object.items()) {
    bool found = false;
    for (const char* k : known) {
      if (item.key() == k) {
        found = true;
        break;
      }
    }
    if (!found) bad_key(scope + item.key(), "unknown key");
  }
}

MirrorSpec mirror_from_json(const nlohmann::json& object, const std::string& scope) {
  if (!object.is_object()) bad_key(scope, "expected an object");
  check_known_keys(object, scope + ".", {"intrinsic_reflectivity", "roughness_m"});
  MirrorSpec mirror{0.0, 0.0};
  if (!object.contains("intrinsic_reflectivity")) {
    bad_key(scope + ".intrinsic_reflectivity", "missing");
  }
  mirror.intrinsic_reflectivity =
      require_number(object.at("intrinsic_reflectivity"),
                     scope + ".intrinsic_reflectivity");
  if (object.contains("roughness_m")) {
    mirror.roughness = parse_length(object.at("roughness_m"), scope + ".roughness_m");
  }
  return mirror;
}

}  // namespace

namespace {

double parse_suffixed_length(const std::string& text, const std::string& key,
                             bool allow_bare_number) {
  std::size_t pos = 0;
  double magnitude = 0.0;
  try {
    magnitude = std::stod(text, &pos);
  } catch (const std::exception&) {
    bad_key(key, "cannot parse '" + text + "' as a length");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  const std::string suffix = text.substr(pos);
  if (suffix.empty() && allow_bare_number) {
    return magnitude;
  }
  const auto unit = unit_scale.find(suffix);
  if (unit == unit_scale.end()) {
    bad_key(key, "unknown unit suffix '" + suffix + "' in '" + text + "'");
  }
  return magnitude * unit->second;
}

}  // namespace

double parse_length(const nlohmann::json& value, const std::string& key) {
  if (value.is_number()) {
    return value.get<double>();
  }
  if (!value.is_string()) bad_key(key, "expected a number (metres) or a unit string");
  return parse_suffixed_length(value.get<std::string>(), key, false);
}

double parse_length_text(const std::string& text, const std::string& key) {
  return parse_suffixed_length(text, key, true);
}

AppConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("config root must be a JSON object");
  }
  check_known_keys(doc, "",
                   {"wavelength_m", "cavity_length_m", "radius_x_m", "radius_y_m",
                    "fiber_mode_radius_m", "atomic_decay_rate_per_s", "plane_mirror",
                    "curved_mirror", "scan", "atom_spectrum"});

  AppConfig config;
  ScanConfig& scan = config.scan;
  for (const char* key : {"wavelength_m", "cavity_length_m", "radius_x_m",
                          "radius_y_m", "fiber_mode_radius_m", "plane_mirror",
                          "curved_mirror"}) {
    if (!doc.contains(key)) bad_key(key, "missing");
  }
  scan.geometry.wavelength = parse_length(doc.at("wavelength_m"), "wavelength_m");
  scan.geometry.cavity_length =
      parse_length(doc.at("cavity_length_m"), "cavity_length_m");
  scan.geometry.radius_x = parse_length(doc.at("radius_x_m"), "radius_x_m");
  scan.geometry.radius_y = parse_length(doc.at("radius_y_m"), "radius_y_m");
  scan.geometry.fiber_mode_radius =
      parse_length(doc.at("fiber_mode_radius_m"), "fiber_mode_radius_m");
  scan.plane_mirror = mirror_from_json(doc.at("plane_mirror"), "plane_mirror");
  scan.curved_mirror = mirror_from_json(doc.at("curved_mirror"), "curved_mirror");
  if (doc.contains("atomic_decay_rate_per_s")) {
    scan.atomic_decay_rate = require_number(doc.at("atomic_decay_rate_per_s"),
                                            "atomic_decay_rate_per_s");
  }

  if (doc.contains("scan")) {
    const nlohmann::json& s = doc.at("scan");
    if (!s.is_object()) bad_key("scan", "expected an object");
    check_known_keys(s, "scan.",
                     {"start_m", "span_m", "samples", "noise_sigma", "seed",
                      "max_transverse_order", "transverse_depth_ratio",
                      "atom_present"});
    if (s.contains("start_m")) {
      scan.scan_start = parse_length(s.at("start_m"), "scan.start_m");
      config.explicit_scan.start = true;
    }
    if (s.contains("span_m")) {
      scan.scan_span = parse_length(s.at("span_m"), "scan.span_m");
      config.explicit_scan.span = true;
    }
    if (s.contains("samples")) {
      if (!s.at("samples").is_number_unsigned()) {
        bad_key("scan.samples", "expected a non-negative integer");
      }
      scan.samples = s.at("samples").get<std::size_t>();
      config.explicit_scan.samples = true;
    }
    if (s.contains("noise_sigma")) {
      scan.noise_sigma = require_number(s.at("noise_sigma"), "scan.noise_sigma");
    }
    if (s.contains("seed")) {
      if (!s.at("seed").is_number_unsigned()) {
        bad_key("scan.seed", "expected a non-negative integer");
      }
      scan.seed = s.at("seed").get<std::uint64_t>();
    }
    if (s.contains("max_transverse_order")) {
      if (!s.at("max_transverse_order").is_number_integer()) {
        bad_key("scan.max_transverse_order", "expected an integer");
      }
      scan.max_transverse_order = s.at("max_transverse_order").get<int>();
    }
    if (s.contains("transverse_depth_ratio")) {
      scan.transverse_depth_ratio =
          require_number(s.at("transverse_depth_ratio"), "scan.transverse_depth_ratio");
    }
    if (s.contains("atom_present")) {
      if (!s.at("atom_present").is_boolean()) {
        bad_key("scan.atom_present", "expected a boolean");
      }
      scan.atom_present = s.at("atom_present").get<bool>();
    }
  }

  if (doc.contains("atom_spectrum")) {
    const nlohmann::json& a = doc.at("atom_spectrum");
    if (!a.is_object()) bad_key("atom_spectrum", "expected an object");
    check_known_keys(a, "atom_spectrum.",
                     {"coupling_rate_per_s", "cavity_decay_rate_per_s", "contrast"});
    if (a.contains("coupling_rate_per_s")) {
      config.atom_spectrum.coupling_rate =
          require_number(a.at("coupling_rate_per_s"),
                         "atom_spectrum.coupling_rate_per_s");
    }
    if (a.contains("cavity_decay_rate_per_s")) {
      config.atom_spectrum.cavity_decay_rate =
          require_number(a.at("cavity_decay_rate_per_s"),
                         "atom_spectrum.cavity_decay_rate_per_s");
    }
    if (a.contains("contrast")) {
      config.atom_spectrum.contrast =
          require_number(a.at("contrast"), "atom_spectrum.contrast");
    }
  }
  return config;
}

AppConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw std::runtime_error("cannot open config file " + path.string());
  }
  nlohmann::json doc;
  try {
    stream >> doc;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("config file " + path.string() + ": " + err.what());
  }
  return config_from_json(doc);
}

AppConfig preset_config(std::string_view name) {
  AppConfig config;
  ScanConfig& scan = config.scan;
  scan.geometry = CavityGeometry{
      .wavelength = 780e-9,
      .cavity_length = 150e-6,
      .radius_x = 185e-6,
      .radius_y = 185e-6,
      .fiber_mode_radius = 2.65e-6,
  };
  if (name == "gold") {
    scan.plane_mirror = MirrorSpec{0.984, 0.0};
    scan.curved_mirror = MirrorSpec{0.975, 10e-9};
  } else if (name == "dielectric") {
    scan.geometry.cavity_length = 25e-6;
    scan.plane_mirror = MirrorSpec{0.9999, 0.0};
    scan.curved_mirror = MirrorSpec{0.9999, 2e-9};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "'; available: gold, dielectric");
  }
  return config;
}

void finalize_config(AppConfig& config) {
  ScanConfig& scan = config.scan;
  if (!config.explicit_scan.span) {
    scan.scan_span = scan.geometry.wavelength;  // two free spectral ranges
  }
  if (!config.explicit_scan.start) {
    scan.scan_start = scan.geometry.cavity_length - 0.5 * scan.scan_span;
  }
  if (!config.explicit_scan.samples) {
    const double linewidth = ground_truth(scan).linewidth;
    scan.samples =
        static_cast<std::size_t>(std::ceil(20.0 * scan.scan_span / linewidth)) + 1;
  }
}

nlohmann::json config_to_json(const ScanConfig& config) {
  return nlohmann::json{
      {"wavelength_m", config.geometry.wavelength},
      {"cavity_length_m", config.geometry.cavity_length},
      {"radius_x_m", config.geometry.radius_x},
      {"radius_y_m", config.geometry.radius_y},
      {"fiber_mode_radius_m", config.geometry.fiber_mode_radius},
      {"atomic_decay_rate_per_s", config.atomic_decay_rate},
      {"plane_mirror",
       {{"intrinsic_reflectivity", config.plane_mirror.intrinsic_reflectivity},
        {"roughness_m", config.plane_mirror.roughness}}},
      {"curved_mirror",
       {{"intrinsic_reflectivity", config.curved_mirror.intrinsic_reflectivity},
        {"roughness_m", config.curved_mirror.roughness}}},
      {"scan",
       {{"start_m", config.scan_start},
        {"span_m", config.scan_span},
        {"samples", config.samples},
        {"noise_sigma", config.noise_sigma},
        {"seed", config.seed},
        {"max_transverse_order", config.max_transverse_order},
        {"transverse_depth_ratio", config.transverse_depth_ratio},
        {"atom_present", config.atom_present}}},
  };
}

}  // namespace microcav
