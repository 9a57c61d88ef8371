// SPDX-License-Identifier: Apache-2.0
//
// Physical constants and laboratory-unit conversions.
//
// Everything inside the library is expressed in powers of the electron-volt
// with hbar = c = 1: energies, momenta and frequencies in eV, times in 1/eV,
// lengths and areas in 1/eV and 1/eV^2. Laboratory units (ps, MeV, degrees,
// V/cm) are converted exactly once, at the boundary, with the helpers below.
#pragma once

#include <numbers>

namespace ensb {

struct PhysicalConstants
{
    double electron_mass_eV;
    double fine_structure_alpha;
    double hbar_eV_s;
    double hbar_c_eV_cm;

    //! Classical electron radius r_e = alpha / m, in 1/eV.
    [[nodiscard]] constexpr double classical_electron_radius() const
    {
        return fine_structure_alpha / electron_mass_eV;
    }
};

//! CODATA 2018 values.
inline constexpr PhysicalConstants codata{
    .electron_mass_eV = 0.51099895000e6,
    .fine_structure_alpha = 1.0 / 137.035999084,
    .hbar_eV_s = 6.582119569e-16,
    .hbar_c_eV_cm = 1.973269804e-5,
};

inline constexpr double electron_mass = codata.electron_mass_eV;
inline constexpr double alpha_fs = codata.fine_structure_alpha;

namespace units {

inline constexpr double eV = 1.0;
inline constexpr double keV = 1e3;
inline constexpr double MeV = 1e6;

//! Seconds expressed in 1/eV.
inline constexpr double second = 1.0 / codata.hbar_eV_s;
inline constexpr double ps = 1e-12 * second;
inline constexpr double fs = 1e-15 * second;

//! Centimetres expressed in 1/eV.
inline constexpr double cm = 1.0 / codata.hbar_c_eV_cm;

inline constexpr double degree = std::numbers::pi / 180.0;

[[nodiscard]] constexpr double to_degrees(double rad) { return rad / degree; }
[[nodiscard]] constexpr double to_ps(double inverse_eV) { return inverse_eV / ps; }

}  // namespace units
}  // namespace ensb
