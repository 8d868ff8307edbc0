#pragma once

namespace microcav {

/// Speed of light in vacuum (m/s), CODATA exact value.
inline constexpr double speed_of_light = 2.99792458e8;

/// Spontaneous decay rate of the rubidium D2 transition at 780 nm (s^-1),
/// the default atomic dipole used for coupling estimates.
inline constexpr double default_atomic_decay_rate = 4.0e7;

}  // namespace microcav
