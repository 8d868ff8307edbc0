#pragma once

#include <vector>

#include "microcav/constants.hpp"

namespace microcav {

/**
 * Atom-cavity coupling bundle for a single atom at a field antinode.
 *
 * decay_rate follows the field-amplitude (half-width) convention: the
 * empty-cavity intensity resonance has FWHM 2*kappa in angular frequency.
 */
struct CqedParams {
  double coupling_rate;      ///< single-photon Rabi frequency g (s^-1)
  double decay_rate;         ///< cavity field decay rate kappa (s^-1)
  double atomic_decay_rate;  ///< atomic spontaneous decay rate Gamma (s^-1)
  double cooperativity;      ///< g^2 / (kappa Gamma)
};

/// One sample of a reflection spectrum.
struct SpectrumPoint {
  double detuning;            ///< angular frequency offset from resonance (s^-1)
  double reflected_fraction;  ///< normalized reflected intensity, in [1-C, 1]
};

/// On-resonance reflected fractions with and without the atom.
struct LineCentreReflection {
  double without_atom;  ///< 1 - C
  double with_atom;     ///< 1 - C / (2 g^2/(kappa Gamma) + 1)^2
};

/// Single-photon Rabi frequency at an antinode:
/// sqrt(3 lambda^2 / (pi^2 w^2) * c Gamma / L), with w the mode waist.
[[nodiscard]] double coupling_rate(double wavelength, double waist,
                                   double cavity_length,
                                   double atomic_decay = default_atomic_decay_rate);

/// Cavity field decay rate pi c / (2 L F).
[[nodiscard]] double cavity_decay_rate(double cavity_length, double finesse_value);

/// Single-atom cooperativity g^2 / (kappa Gamma).
[[nodiscard]] double cooperativity(double coupling, double cavity_decay,
                                   double atomic_decay);

/// Assembles the coupling bundle for a cavity of given waist, length and
/// finesse, with the atom at an antinode.
[[nodiscard]] CqedParams cqed_params(double wavelength, double waist,
                                     double cavity_length, double finesse_value,
                                     double atomic_decay = default_atomic_decay_rate);

/// Reflected fraction at line centre before and after a resonant atom is
/// placed in the cavity mode.
[[nodiscard]] LineCentreReflection line_centre_reflection(double contrast_value,
                                                          double coupling,
                                                          double cavity_decay,
                                                          double atomic_decay);

/// Weak-drive reflected fraction of the (possibly atom-loaded) cavity at
/// one detuning:
///
///   reflected(D) = 1 - C |f(D)|^2,
///   f(D) = kappa / (kappa + iD + [atom] g^2 / (Gamma/2 + iD)).
///
/// Without the atom this is a Lorentzian dip of depth C and FWHM 2 kappa;
/// with the atom the line-centre value reproduces line_centre_reflection
/// and the dip splits into a vacuum-Rabi doublet near +-g for g >> kappa,
/// Gamma. Atom and cavity are assumed co-resonant.
[[nodiscard]] double reflected_fraction(double detuning, double contrast_value,
                                        double coupling, double cavity_decay,
                                        double atomic_decay, bool atom_present);

/// reflected_fraction sampled over a detuning grid.
[[nodiscard]] std::vector<SpectrumPoint> reflection_spectrum(
    const std::vector<double>& detunings, double contrast_value, double coupling,
    double cavity_decay, double atomic_decay, bool atom_present);

/// Detunings of the local minima of the reflected fraction (dip positions).
/// Throws InsufficientDataError when the spectrum has no interior minimum.
[[nodiscard]] std::vector<double> find_rabi_peaks(
    const std::vector<SpectrumPoint>& spectrum);

/// First-order frequency pull of a cavity-length change:
/// D = 2 pi c dL / (lambda L). Maps a length-scan axis onto detuning.
[[nodiscard]] double length_to_detuning(double length_offset, double cavity_length,
                                        double wavelength);

}  // namespace microcav
