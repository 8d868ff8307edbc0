#include "microcav/cqed.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "microcav/errors.hpp"

namespace microcav {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw std::domain_error(std::string(name) + " must be positive");
  }
}

// |f(D)|^2 for the reflection dip; the atom enters as a linear dipole
// response g^2 / (Gamma/2 + iD) added to the cavity pole.
double dip_lineshape(double detuning, double coupling, double cavity_decay,
                     double atomic_decay, bool atom_present) {
  std::complex<double> denom(cavity_decay, detuning);
  if (atom_present) {
    denom += coupling * coupling /
             std::complex<double>(0.5 * atomic_decay, detuning);
  }
  const double mag = std::abs(cavity_decay / denom);
  return mag * mag;
}

}  // namespace

double coupling_rate(double wavelength, double waist, double cavity_length,
                     double atomic_decay) {
  require_positive(wavelength, "wavelength");
  require_positive(waist, "waist");
  require_positive(cavity_length, "cavity_length");
  require_positive(atomic_decay, "atomic decay rate");
  const double geometric = 3.0 * wavelength * wavelength /
                           (std::numbers::pi * std::numbers::pi * waist * waist);
  return std::sqrt(geometric * speed_of_light * atomic_decay / cavity_length);
}

double cavity_decay_rate(double cavity_length, double finesse_value) {
  require_positive(cavity_length, "cavity_length");
  require_positive(finesse_value, "finesse");
  return std::numbers::pi * speed_of_light / (2.0 * cavity_length * finesse_value);
}

double cooperativity(double coupling, double cavity_decay, double atomic_decay) {
  if (!(coupling >= 0.0)) {
    throw std::domain_error("coupling rate must be non-negative");
  }
  require_positive(cavity_decay, "cavity decay rate");
  require_positive(atomic_decay, "atomic decay rate");
  return coupling * coupling / (cavity_decay * atomic_decay);
}

CqedParams cqed_params(double wavelength, double waist, double cavity_length,
                       double finesse_value, double atomic_decay) {
  const double g = coupling_rate(wavelength, waist, cavity_length, atomic_decay);
  const double kappa = cavity_decay_rate(cavity_length, finesse_value);
  return CqedParams{
      .coupling_rate = g,
      .decay_rate = kappa,
      .atomic_decay_rate = atomic_decay,
      .cooperativity = cooperativity(g, kappa, atomic_decay),
  };
}

LineCentreReflection line_centre_reflection(double contrast_value, double coupling,
                                            double cavity_decay,
                                            double atomic_decay) {
  if (!(contrast_value >= 0.0) || !(contrast_value <= 1.0)) {
    throw std::domain_error("contrast must lie in [0, 1]");
  }
  const double coop = cooperativity(coupling, cavity_decay, atomic_decay);
  const double suppression = (2.0 * coop + 1.0) * (2.0 * coop + 1.0);
  return LineCentreReflection{
      .without_atom = 1.0 - contrast_value,
      .with_atom = 1.0 - contrast_value / suppression,
  };
}

double reflected_fraction(double detuning, double contrast_value, double coupling,
                          double cavity_decay, double atomic_decay,
                          bool atom_present) {
  if (!(contrast_value >= 0.0) || !(contrast_value <= 1.0)) {
    throw std::domain_error("contrast must lie in [0, 1]");
  }
  require_positive(cavity_decay, "cavity decay rate");
  require_positive(atomic_decay, "atomic decay rate");
  return 1.0 - contrast_value * dip_lineshape(detuning, coupling, cavity_decay,
                                              atomic_decay, atom_present);
}

std::vector<SpectrumPoint> reflection_spectrum(const std::vector<double>& detunings,
                                               double contrast_value, double coupling,
                                               double cavity_decay,
                                               double atomic_decay,
                                               bool atom_present) {
  std::vector<SpectrumPoint> spectrum;
  spectrum.reserve(detunings.size());
  for (double detuning : detunings) {
    spectrum.push_back({detuning,
                        reflected_fraction(detuning, contrast_value, coupling,
                                           cavity_decay, atomic_decay,
                                           atom_present)});
  }
  return spectrum;
}

std::vector<double> find_rabi_peaks(const std::vector<SpectrumPoint>& spectrum) {
  std::vector<double> minima;
  for (std::size_t i = 1; i + 1 < spectrum.size(); ++i) {
    const double left = spectrum[i - 1].reflected_fraction;
    const double here = spectrum[i].reflected_fraction;
    const double right = spectrum[i + 1].reflected_fraction;
    if (here < left && here <= right) {
      minima.push_back(spectrum[i].detuning);
    }
  }
  if (minima.empty()) {
    throw InsufficientDataError("no reflection dip found in the sampled spectrum");
  }
  return minima;
}

double length_to_detuning(double length_offset, double cavity_length,
                          double wavelength) {
  require_positive(cavity_length, "cavity_length");
  require_positive(wavelength, "wavelength");
  return 2.0 * std::numbers::pi * speed_of_light * length_offset /
         (wavelength * cavity_length);
}

}  // namespace microcav
