// SPDX-License-Identifier: Apache-2.0
//
// Shared parameter sets and small test-side oracles.
#pragma once

#include <cmath>
#include <numbers>

#include "ensb/ensb.hpp"

namespace support {

inline constexpr double tau_ref = 0.1 * ensb::units::ps;
inline constexpr double theta_i_ref = 163.0 * ensb::units::degree;

//! Reference field: omega = 2.35 / 1 eV, eta = 0.1, tau = 0.1 ps, delta1 = -delta2 = 1.
inline ensb::TwoWaveField reference_field(double delta_angle = 0.0, double tau = tau_ref)
{
    return {{2.35, 0.1, +1, tau}, {1.0, 0.1, -1, tau}, delta_angle};
}

inline ensb::ElectronState peak_electron() { return ensb::ElectronState::from_energy(1.02e6, theta_i_ref); }

inline ensb::ResonantSetup enhancement_setup(double v, double theta_f_deg, double tau = tau_ref)
{
    auto const e = ensb::ElectronState::from_velocity(v, theta_i_ref);
    return ensb::interference_setup(e, theta_f_deg * ensb::units::degree, 0.0, reference_field(0.0, tau));
}

//! Nonrelativistic Rutherford cross section (Z alpha)^2 m^2 / (4 p^4 sin^4(theta/2)).
inline double rutherford(double z, double p, double theta)
{
    double const s = std::sin(theta / 2.0);
    double const za = z * ensb::alpha_fs;
    return za * za * ensb::electron_mass * ensb::electron_mass / (4.0 * p * p * p * p * s * s * s * s);
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace support
