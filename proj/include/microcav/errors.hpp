#pragma once

#include <stdexcept>
#include <string>

namespace microcav {

/// A measured (finesse, contrast) pair or trace feature set that no physical
/// mirror pair can produce.
class InconsistentMeasurementError : public std::domain_error {
 public:
  explicit InconsistentMeasurementError(const std::string& what)
      : std::domain_error(what) {}
};

/// A trace or series without enough resolved features for the requested
/// extraction (too few dips, no transverse satellite, ...).
class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace microcav
