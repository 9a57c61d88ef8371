// SPDX-License-Identifier: Apache-2.0
//
// Field-free baselines: Mott scattering and the factorized Bethe-Heitler
// bremsstrahlung cross section.
#pragma once

#include <cmath>
#include <numbers>

#include "ensb/constants.hpp"
#include "ensb/errors.hpp"
#include "ensb/four_vector.hpp"
#include "ensb/kinematics.hpp"

namespace ensb {

namespace detail {

inline double transfer_fourth(Vec3 const& q, double reference)
{
    double const q2 = dot(q, q);
    if (!(q2 > 1e-28 * reference * reference))
        throw DomainError("momentum transfer vanishes (forward scattering)");
    return q2 * q2;
}

inline double coulomb_prefactor(double z)
{
    double const re = codata.classical_electron_radius();
    return 2.0 * z * z * re * re * electron_mass * electron_mass;
}

}  // namespace detail

//! dsigma_Mott/dOmega_f = (2 Z^2 r_e^2 m^2 / q^4)(E_i E_f + m^2 + p_i.p_f), in 1/eV^2.
[[nodiscard]] inline double mott(double z, ElectronState const& initial, ElectronState const& final_state)
{
    Vec3 const pi = initial.momentum_vector();
    Vec3 const pf = final_state.momentum_vector();
    double const q4 = detail::transfer_fourth(pf - pi, initial.momentum() + final_state.momentum());
    double const m2 = electron_mass * electron_mass;
    return detail::coulomb_prefactor(z) / q4 * (initial.energy() * final_state.energy() + m2 + dot(pi, pf));
}

//! (2 Z^2 r_e^2 m^2 / q^4)(m^2 + (q_i p_f) + 2 q_i.p_f) with q the spatial transfer.
[[nodiscard]] inline double scattering_partial(double z, FourVector const& q_i, FourVector const& p_f,
                                               FourVector const& q)
{
    double const q4 = detail::transfer_fourth(q.s, norm(q_i.s) + norm(p_f.s));
    double const m2 = electron_mass * electron_mass;
    return detail::coulomb_prefactor(z) / q4 * (m2 + minkowski_dot(q_i, p_f) + 2.0 * dot(q_i.s, p_f.s));
}

/*!
 * Photon emission probability per unit photon energy and solid angle:
 *   (alpha / 4 pi^2) {q^2 - (n' q)^2 m^2/(k'_i k'_f)} / (omega' k'_i k'_f),
 *   k'_{i,f} = E_{i,f} - n'.p_{i,f}
 */
[[nodiscard]] inline double bh_photon_probability(ElectronState const& initial, ElectronState const& final_state,
                                                  PhotonDirection const& photon, double omega_prime)
{
    if (!(omega_prime > 0.0))
        throw DomainError("photon energy must be positive");
    Vec3 const n = photon.unit();
    Vec3 const pi = initial.momentum_vector();
    Vec3 const pf = final_state.momentum_vector();
    double const ki = initial.energy() - dot(n, pi);
    double const kf = final_state.energy() - dot(n, pf);
    if (!(ki > 0.0) || !(kf > 0.0))
        throw DomainError("k' = E - n'.p must be positive");
    Vec3 const q = pf - pi;
    double const nq = dot(n, q);
    double const brace = dot(q, q) - nq * nq * electron_mass * electron_mass / (ki * kf);
    return alpha_fs / (4.0 * std::numbers::pi * std::numbers::pi) * brace / (omega_prime * ki * kf);
}

//! dsigma_BH/(d omega' dOmega' dOmega_f) = Mott x photon emission probability.
[[nodiscard]] inline double bethe_heitler(double z, ElectronState const& initial, ElectronState const& final_state,
                                         PhotonDirection const& photon, double omega_prime)
{
    return mott(z, initial, final_state) * bh_photon_probability(initial, final_state, photon, omega_prime);
}

}  // namespace ensb
