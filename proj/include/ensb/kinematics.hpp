// SPDX-License-Identifier: Apache-2.0
//
// Kinematics of resonant bremsstrahlung in two co-propagating waves.
//
// Frame: both waves travel along n_hat = +z, the first polarization axis is
// +x, azimuths are measured from +x. n = (1, 0, 0, 1).
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ensb/constants.hpp"
#include "ensb/errors.hpp"
#include "ensb/four_vector.hpp"

namespace ensb {

inline constexpr Vec3 wave_direction{0.0, 0.0, 1.0};

//! n = k_j / omega_j, shared by both waves.
[[nodiscard]] constexpr FourVector wave_null_vector() { return null_vector(wave_direction); }

//! Light-cone component (n p) = p0 - p_z.
[[nodiscard]] constexpr double light_cone(FourVector const& p) { return minkowski_dot(wave_null_vector(), p); }

//---------------------------------------------------------------------------//
// States
//---------------------------------------------------------------------------//

/*!
 * Free electron with energy E, momentum magnitude |p| and direction
 * (theta, phi) relative to the wave propagation axis.
 */
class ElectronState
{
  public:
    [[nodiscard]] static ElectronState from_energy(double energy, double theta, double phi = 0.0)
    {
        if (!(energy >= electron_mass))
            throw DomainError("electron energy " + std::to_string(energy) + " eV is below the rest mass");
        check_angles(theta, phi);
        double const p = std::sqrt((energy - electron_mass) * (energy + electron_mass));
        return ElectronState(energy, p, theta, phi);
    }

    [[nodiscard]] static ElectronState from_velocity(double v, double theta, double phi = 0.0)
    {
        if (!(v >= 0.0 && v < 1.0))
            throw DomainError("electron velocity must lie in [0, 1), got " + std::to_string(v));
        check_angles(theta, phi);
        double const gamma = 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
        return ElectronState(gamma * electron_mass, gamma * v * electron_mass, theta, phi);
    }

    [[nodiscard]] double energy() const { return energy_; }
    [[nodiscard]] double momentum() const { return momentum_; }
    [[nodiscard]] double theta() const { return theta_; }
    [[nodiscard]] double phi() const { return phi_; }
    [[nodiscard]] double velocity() const { return momentum_ / energy_; }

    [[nodiscard]] Vec3 direction() const { return unit_vector(theta_, phi_); }
    [[nodiscard]] Vec3 momentum_vector() const { return momentum_ * direction(); }
    [[nodiscard]] FourVector four_momentum() const { return {energy_, momentum_vector()}; }

    //! Same |p| and E, new direction.
    [[nodiscard]] ElectronState rotated(double theta, double phi) const
    {
        check_angles(theta, phi);
        return ElectronState(energy_, momentum_, theta, phi);
    }

  private:
    ElectronState(double e, double p, double theta, double phi)
        : energy_(e), momentum_(p), theta_(theta), phi_(phi)
    {
    }

    static void check_angles(double theta, double phi)
    {
        if (!(theta >= 0.0 && theta <= std::numbers::pi) || !std::isfinite(phi))
            throw DomainError("polar angle must lie in [0, pi]");
    }

    double energy_;
    double momentum_;
    double theta_;
    double phi_;
};

struct PhotonDirection
{
    double theta{0};  //!< polar angle from the wave axis, [0, pi]
    double phi{0};    //!< azimuth from +x

    [[nodiscard]] Vec3 unit() const { return unit_vector(theta, phi); }
    //! n' = k'/omega' = (1, n'_hat)
    [[nodiscard]] FourVector null() const { return null_vector(unit()); }
};

//---------------------------------------------------------------------------//
// Interference geometry
//---------------------------------------------------------------------------//

//! a = |p| sin(theta) / (n p).
[[nodiscard]] inline double a_parameter(ElectronState const& state)
{
    double const np = state.energy() - state.momentum() * std::cos(state.theta());
    if (!(np > 0.0))
        throw DomainError("(n p) vanishes: electron collinear with the wave at v = 1");
    return state.momentum() * std::sin(state.theta()) / np;
}

//! Photon direction for which the emission-vertex Bunkin-Fedorov parameters
//! vanish: cot(theta'/2) = a_i, phi' = phi_i.
[[nodiscard]] inline PhotonDirection interference_photon_angle(ElectronState const& state)
{
    double const a = a_parameter(state);
    return {2.0 * std::atan2(1.0, a), state.phi()};
}

struct FinalPolarSolutions
{
    //! Roots ordered by increasing |theta_f - theta_i|; empty when none exist.
    std::vector<double> theta_f;
    double a_i{0};

    [[nodiscard]] bool empty() const { return theta_f.empty(); }
};

/*!
 * Outgoing polar angles with a_f = a_i at final energy E_f.
 *
 * |p_f| sin(t) + a |p_f| cos(t) = a E_f  =>  sin(t + psi) = a E_f / (|p_f| sqrt(1+a^2)),
 * psi = atan(a). Both branches inside [0, pi] are returned.
 */
[[nodiscard]] inline FinalPolarSolutions interference_final_polar(ElectronState const& initial, double final_energy)
{
    if (!(final_energy > electron_mass))
        throw DomainError("final energy must exceed the electron mass");
    FinalPolarSolutions out;
    double const a = a_parameter(initial);
    out.a_i = a;
    double const pf = std::sqrt((final_energy - electron_mass) * (final_energy + electron_mass));
    double const rhs = a * final_energy / (pf * std::hypot(1.0, a));
    if (rhs > 1.0)
        return out;
    double const psi = std::atan(a);
    double const base = std::asin(rhs);
    constexpr double pi = std::numbers::pi;
    for (double cand : {base - psi, pi - base - psi})
    {
        if (cand < -1e-15 || cand > pi + 1e-15)
            continue;
        cand = std::clamp(cand, 0.0, pi);
        bool const duplicate = std::any_of(out.theta_f.begin(), out.theta_f.end(),
                                           [&](double t) { return std::abs(t - cand) < 1e-14; });
        if (!duplicate)
            out.theta_f.push_back(cand);
    }
    std::sort(out.theta_f.begin(), out.theta_f.end(), [&](double l, double r) {
        return std::abs(l - initial.theta()) < std::abs(r - initial.theta());
    });
    return out;
}

//---------------------------------------------------------------------------//
// Resonance
//---------------------------------------------------------------------------//

enum class Correlation
{
    equal_numbers,   //!< s1 = s2: omega = s1 (w1 + w2)
    first_fewer,     //!< s1 = s2 - 1: omega = s1 (w1 + w2) + w2
    first_more,      //!< s1 = s2 + 1: omega = s1 (w1 + w2) - w2
    uncorrelated,
};

struct CombinedEnergy
{
    double omega{0};
    bool resonant{false};  //!< only omega > 0 admits a resonance
    Correlation correlation{Correlation::uncorrelated};
};

//! omega = s1 w1 + s2 w2 for photon numbers absorbed at the emission vertex.
[[nodiscard]] inline CombinedEnergy combined_energy(int s1, int s2, double omega1, double omega2)
{
    if (!(omega1 > omega2 && omega2 > 0.0))
        throw DomainError("wave frequencies must satisfy omega1 > omega2 > 0");
    CombinedEnergy out;
    out.omega = s1 * omega1 + s2 * omega2;
    out.resonant = out.omega > 0.0;
    if (s1 == s2)
        out.correlation = Correlation::equal_numbers;
    else if (s1 == s2 - 1)
        out.correlation = Correlation::first_fewer;
    else if (s1 == s2 + 1)
        out.correlation = Correlation::first_more;
    return out;
}

//! q_i = p_i - k' + s1 k1 + s2 k2.
[[nodiscard]] constexpr FourVector intermediate_momentum(FourVector const& p_i, FourVector const& k_prime, int s1,
                                                         int s2, FourVector const& k1, FourVector const& k2)
{
    return p_i - k_prime + static_cast<double>(s1) * k1 + static_cast<double>(s2) * k2;
}

/*!
 * Resonant frequency of the spontaneous photon:
 *   omega'_res = omega'_i / (1 + d_i),  omega'_i = omega (n p_i)/(n' p_i),
 *   d_i = omega (n n')/(n' p_i).
 * With this frequency q_i lies exactly on the mass shell.
 */
[[nodiscard]] inline double resonant_frequency(FourVector const& p_i, FourVector const& n_prime, double omega)
{
    double const np_prime = minkowski_dot(n_prime, p_i);
    if (!(np_prime > 0.0))
        throw DomainError("(n' p_i) must be positive");
    double const omega_i = omega * light_cone(p_i) / np_prime;
    double const d_i = omega * minkowski_dot(wave_null_vector(), n_prime) / np_prime;
    return omega_i / (1.0 + d_i);
}

/*!
 * Closed form omega (1 + a^2)/(1 - a^2 + a cot(theta_i)) for photons emitted
 * at the interference angle.
 *
 * This expression coincides with resonant_frequency() only to leading order
 * in the electron velocity; the library uses resonant_frequency() for all
 * observables. resonant_frequency_interference_exact() is the full form.
 */
[[nodiscard]] inline double resonant_frequency_interference(double a_i, double theta_i, double omega)
{
    double const den = 1.0 - a_i * a_i + a_i / std::tan(theta_i);
    if (!(std::abs(den) > 1e-14) || !std::isfinite(den))
        throw SingularityError("resonant frequency denominator 1 - a^2 + a cot(theta_i) vanishes");
    return omega * (1.0 + a_i * a_i) / den;
}

/*!
 * Resonant frequency at the interference angle with the complete denominator,
 *   omega (1 + a^2) / (1 - a^2 + 2 a cot(theta_i) + 2 omega/(n p_i)),
 * equal to resonant_frequency() evaluated at that angle.
 */
[[nodiscard]] inline double resonant_frequency_interference_exact(double a_i, double theta_i, double omega,
                                                                  double n_p)
{
    if (!(n_p > 0.0))
        throw DomainError("(n p_i) must be positive");
    double const den = 1.0 - a_i * a_i + 2.0 * a_i / std::tan(theta_i) + 2.0 * omega / n_p;
    if (!(std::abs(den) > 1e-14) || !std::isfinite(den))
        throw SingularityError("resonant frequency denominator vanishes");
    return omega * (1.0 + a_i * a_i) / den;
}

//! beta = (1 - omega'/omega'_res) omega tau / 2.
[[nodiscard]] constexpr double resonance_parameter(double omega_prime, double omega_res, double omega, double tau)
{
    return (1.0 - omega_prime / omega_res) * omega * tau / 2.0;
}

//! Inverse of resonance_parameter().
[[nodiscard]] constexpr double frequency_at_beta(double beta, double omega_res, double omega, double tau)
{
    return omega_res * (1.0 - 2.0 * beta / (omega * tau));
}

//! Gamma = sqrt(2) omega'_res / (omega tau), the offset where beta = 1/sqrt(2).
[[nodiscard]] inline double transit_width(double omega_res, double omega, double tau)
{
    if (!(omega * tau > 0.0))
        throw DomainError("transit width needs omega tau > 0");
    return std::numbers::sqrt2 * omega_res / (omega * tau);
}

//! Order-of-magnitude scattering angle below which both diagrams resonate
//! simultaneously; negative estimates are reported as zero.
[[nodiscard]] inline double small_angle_threshold(FourVector const& p_i, double omega_combination)
{
    double const p = norm(p_i.s);
    if (!(p > 0.0))
        throw DomainError("small-angle threshold needs |p_i| > 0");
    double const theta = (1.0 - light_cone(p_i) / p_i.t) * omega_combination / p;
    return std::max(theta, 0.0);
}

inline constexpr double small_angle_safety_factor = 10.0;

//! True when the scattering angle is safely above the excluded small-angle region.
[[nodiscard]] inline bool passes_small_angle_gate(double scattering_angle, double threshold)
{
    return scattering_angle > small_angle_safety_factor * threshold;
}

struct UInvariants
{
    double u{0};        //!< 2 omega (n p_i) / m^2
    double u_prime{0};  //!< (n k') / (n q_i)
};

[[nodiscard]] inline UInvariants u_invariants(double omega, FourVector const& p_i, FourVector const& k_prime,
                                              FourVector const& q_i)
{
    double const nq = light_cone(q_i);
    if (!(nq > 0.0))
        throw DomainError("(n q_i) must be positive");
    return {2.0 * omega * light_cone(p_i) / (electron_mass * electron_mass), light_cone(k_prime) / nq};
}

//---------------------------------------------------------------------------//
// Resonance channel
//---------------------------------------------------------------------------//

/*!
 * Photon numbers absorbed at the emission vertex together with the resonance
 * quantities they imply for one photon direction.
 */
struct ResonanceChannel
{
    int s1{1};
    int s2{0};
    double omega{0};              //!< s1 w1 + s2 w2
    double resonant_frequency{0};  //!< omega'_res
    double beta{0};               //!< at the frequency the channel was built for
    double transit_width{0};      //!< Gamma
};

[[nodiscard]] inline bool is_supported_channel(int s1, int s2)
{
    return (s1 == 0 || s1 == 1) && (s2 == 0 || s2 == 1) && s1 + s2 >= 1;
}

/*!
 * Build a channel for photon numbers (s1, s2), initial momentum p_i and photon
 * direction n'. omega_prime defaults to the resonant frequency (beta = 0).
 */
[[nodiscard]] inline ResonanceChannel make_channel(int s1, int s2, double omega1, double omega2, double tau,
                                                   FourVector const& p_i, FourVector const& n_prime,
                                                   std::optional<double> omega_prime = std::nullopt)
{
    if (!is_supported_channel(s1, s2))
        throw DomainError("unsupported photon numbers (" + std::to_string(s1) + ", " + std::to_string(s2) + ")");
    auto const ce = combined_energy(s1, s2, omega1, omega2);
    ResonanceChannel ch;
    ch.s1 = s1;
    ch.s2 = s2;
    ch.omega = ce.omega;
    ch.resonant_frequency = resonant_frequency(p_i, n_prime, ce.omega);
    ch.beta = omega_prime ? resonance_parameter(*omega_prime, ch.resonant_frequency, ce.omega, tau) : 0.0;
    ch.transit_width = transit_width(ch.resonant_frequency, ce.omega, tau);
    return ch;
}

}  // namespace ensb
