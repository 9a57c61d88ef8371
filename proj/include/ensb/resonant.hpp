// SPDX-License-Identifier: Apache-2.0
//
// Resonant cross sections and their ratio to the field-free baseline.
#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ensb/baseline.hpp"
#include "ensb/emission.hpp"
#include "ensb/errors.hpp"
#include "ensb/kinematics.hpp"
#include "ensb/profile.hpp"
#include "ensb/waves.hpp"

namespace ensb {

struct Channel
{
    int s1{1};
    int s2{0};

    [[nodiscard]] std::string label() const { return "(" + std::to_string(s1) + "," + std::to_string(s2) + ")"; }
    friend bool operator==(Channel, Channel) = default;
};

inline constexpr Channel channel_10{1, 0};
inline constexpr Channel channel_01{0, 1};
inline constexpr Channel channel_11{1, 1};

/*!
 * Geometry and field of one resonant observation: the incoming electron,
 * the outgoing electron direction, the photon direction and the target.
 */
struct ResonantSetup
{
    ElectronState initial;
    double theta_f{0};
    double phi_f{0};
    PhotonDirection photon;
    TwoWaveField field;
    double z{1.0};
    double rho{default_rho};

    //! Outgoing electron in the elastic approximation, E_f = E_i.
    [[nodiscard]] ElectronState elastic_final() const { return initial.rotated(theta_f, phi_f); }

    [[nodiscard]] double scattering_angle() const
    {
        return angle_between(initial.direction(), unit_vector(theta_f, phi_f));
    }
};

//! Setup with the photon emitted at the interference angle of the incoming electron.
[[nodiscard]] inline ResonantSetup interference_setup(ElectronState const& initial, double theta_f, double phi_f,
                                                      TwoWaveField const& field, double z = 1.0,
                                                      double rho = default_rho)
{
    return {initial, theta_f, phi_f, interference_photon_angle(initial), field, z, rho};
}

struct CrossSectionResult
{
    double value{0};
    std::string differential;
    std::map<std::string, double> channels;
};

//! Resonance data of one channel for the setup's photon direction.
struct ChannelResonance
{
    Channel channel;
    double omega{0};
    double omega_res{0};
    double transit_width{0};
    FourVector q_i{};
    double nq_i{0};
    EmissionProbability emission;
};

[[nodiscard]] inline ChannelResonance channel_resonance(ResonantSetup const& s, Channel ch)
{
    auto const& f = s.field;
    if (!f.counter_rotating())
        throw CapabilityError("resonant cross sections are derived only for delta1 = -delta2 = 1");
    ChannelResonance r;
    r.channel = ch;
    r.omega = combined_energy(ch.s1, ch.s2, f.wave1().omega, f.wave2().omega).omega;
    FourVector const p_i = s.initial.four_momentum();
    r.omega_res = resonant_frequency(p_i, s.photon.null(), r.omega);
    r.transit_width = transit_width(r.omega_res, r.omega, f.tau());
    r.emission = emission_probability(ch.s1, ch.s2, s.initial, s.photon, f, r.omega_res);
    r.q_i = r.emission.q_i;
    r.nq_i = light_cone(r.q_i);
    return r;
}

//! Rejects geometries inside the small-angle region where both diagrams resonate.
inline void check_scattering_angle(ResonantSetup const& s)
{
    auto const [wp, wm] = combination_frequencies(s.field);
    double const threshold = small_angle_threshold(s.initial.four_momentum(), wp);
    double const theta = s.scattering_angle();
    if (!passes_small_angle_gate(theta, threshold))
        throw SingularityError("scattering angle " + detail::fmt(theta) + " rad is inside the small-angle region");
}

//---------------------------------------------------------------------------//
// Partial cross section
//---------------------------------------------------------------------------//

/*!
 * Partial cross section for stimulated photon numbers (l1, l2):
 *   (omega' tau^2 E_i / (2 (n q_i)^2)) dW' dsigma^(s)_{l+s} P_{l1 l2}(beta),
 * differential in omega', Omega', Omega_f. The final electron energy is
 * E_i - omega' - l1 omega1 - l2 omega2 along (theta_f, phi_f).
 */
[[nodiscard]] inline CrossSectionResult resonant_partial_xsec(ResonantSetup const& s, Channel ch, int l1, int l2,
                                                             double omega_prime, QuadratureControl ctrl = {},
                                                             SeriesControl series = {})
{
    auto const res = channel_resonance(s, ch);
    auto const& f = s.field;
    double const w1 = f.wave1().omega;
    double const w2 = f.wave2().omega;
    double const tau = f.tau();
    double const e_f = s.initial.energy() - omega_prime - l1 * w1 - l2 * w2;
    if (!(e_f > electron_mass))
        throw DomainError("final electron energy falls below the rest mass");
    ElectronState const final_state = ElectronState::from_energy(e_f, s.theta_f, s.phi_f);
    FourVector const p_f = final_state.four_momentum();

    // scattering vertex: p = p_f, p' = q_i at the resonant photon energy
    FourVector const q_i = res.q_i;
    FourVector const q = p_f - q_i + static_cast<double>(l1 + ch.s1) * f.wave1().k()
                         + static_cast<double>(l2 + ch.s2) * f.wave2().k();
    double const dsigma_s = scattering_partial(s.z, q_i, p_f, q);

    ScatteringArgs args;
    args.series = series;
    args.peak.gamma1 = gamma0_general(f.wave1().eta0, w1, p_f, q_i);
    args.peak.gamma2 = gamma0_general(f.wave2().eta0, w2, p_f, q_i);
    args.peak.alpha = alpha0_general(f, +1, p_f, q_i);
    auto const chi = chi_phases(p_f, q_i, f.delta_angle());
    args.peak.chi1 = chi.chi1;
    args.peak.chi2 = chi.chi2;
    args.peak.delta_angle = f.delta_angle();
    args.peak.rotation_sign = +1;

    double const beta = resonance_parameter(omega_prime, res.omega_res, res.omega, tau);
    double const p = profile_partial(l1, l2, {beta, s.rho, ch.s1, ch.s2}, args, ctrl);
    double const pre = omega_prime * tau * tau * s.initial.energy() / (2.0 * res.nq_i * res.nq_i);

    CrossSectionResult out;
    out.value = pre * res.emission.value * dsigma_s * p;
    out.differential = "d omega' d Omega' d Omega_f";
    out.channels[ch.label()] = out.value;
    return out;
}

//---------------------------------------------------------------------------//
// Summed and integrated cross sections
//---------------------------------------------------------------------------//

/*!
 * Cross section summed over stimulated photon numbers,
 *   dsigma_{s1 s2} = (E_i tau^2 / (2 (n q_i)^2)) dsigma_Mott omega'_{s1 s2} dW'_{s1 s2} P_res(beta),
 * differential in omega', Omega', Omega_f.
 */
[[nodiscard]] inline CrossSectionResult resonant_summed_xsec(ResonantSetup const& s, double omega_prime,
                                                            std::vector<Channel> const& channels =
                                                                {channel_10, channel_01, channel_11},
                                                            QuadratureControl ctrl = {})
{
    double const tau = s.field.tau();
    double const mott_value = mott(s.z, s.initial, s.elastic_final());
    CrossSectionResult out;
    out.differential = "d omega' d Omega' d Omega_f";
    for (Channel const ch : channels)
    {
        auto const r = channel_resonance(s, ch);
        double const beta = resonance_parameter(omega_prime, r.omega_res, r.omega, tau);
        double const p = profile_res({beta, s.rho, ch.s1, ch.s2}, ctrl);
        double const v = s.initial.energy() * tau * tau / (2.0 * r.nq_i * r.nq_i) * mott_value * r.omega_res
                         * r.emission.value * p;
        out.channels[ch.label()] = v;
        out.value += v;
    }
    return out;
}

//! Prefactor-free piece of the integrated cross section for one channel.
[[nodiscard]] inline double integrated_channel_term(ResonantSetup const& s, ChannelResonance const& r,
                                                    double mott_value)
{
    double const tau = s.field.tau();
    return std::sqrt(std::numbers::pi / 2.0) * s.initial.energy() * tau / (r.nq_i * r.nq_i * r.omega) * mott_value
           * r.omega_res * r.omega_res * r.emission.value;
}

/*!
 * Cross section integrated over the resonance peak,
 *   sqrt(pi/2) E_i tau / ((n q_i)^2 omega) dsigma_Mott omega'^2_res dW'/dOmega',
 * summed over the single-photon channels, differential in Omega', Omega_f.
 */
[[nodiscard]] inline CrossSectionResult resonant_integrated_xsec(ResonantSetup const& s,
                                                                std::vector<Channel> const& channels =
                                                                    {channel_10, channel_01})
{
    double const mott_value = mott(s.z, s.initial, s.elastic_final());
    CrossSectionResult out;
    out.differential = "d Omega' d Omega_f";
    for (Channel const ch : channels)
    {
        if (ch == channel_11)
            throw CapabilityError("the integrated cross section covers the single-photon channels only");
        auto const r = channel_resonance(s, ch);
        double const v = integrated_channel_term(s, r, mott_value);
        out.channels[ch.label()] = v;
        out.value += v;
    }
    return out;
}

//---------------------------------------------------------------------------//
// Ratio to the Bethe-Heitler baseline
//---------------------------------------------------------------------------//

struct RatioGeometry
{
    double kappa_i{0};      //!< E_i - n'.p_i
    double kappa_f{0};      //!< E_f - n'.p_f
    double cos_theta_i{0};  //!< cos of angle(n', p_i)
    double cos_theta_f{0};  //!< cos of angle(n', p_f)
    double theta{0};        //!< scattering angle
};

[[nodiscard]] inline RatioGeometry ratio_geometry(ResonantSetup const& s)
{
    ElectronState const fin = s.elastic_final();
    Vec3 const n = s.photon.unit();
    RatioGeometry g;
    g.kappa_i = s.initial.energy() - dot(n, s.initial.momentum_vector());
    g.kappa_f = fin.energy() - dot(n, fin.momentum_vector());
    g.cos_theta_i = std::cos(angle_between(n, s.initial.direction()));
    g.cos_theta_f = std::cos(angle_between(n, fin.direction()));
    g.theta = s.scattering_angle();
    return g;
}

//! f = (k'_f/k'_i) / (4 sin^2(theta/2) - (cos theta'_f - cos theta'_i)^2 m^2/(k'_i k'_f))
[[nodiscard]] inline double ratio_shape_factor(ResonantSetup const& s)
{
    auto const g = ratio_geometry(s);
    double const sh = std::sin(g.theta / 2.0);
    double const dc = g.cos_theta_f - g.cos_theta_i;
    double const den = 4.0 * sh * sh - dc * dc * electron_mass * electron_mass / (g.kappa_i * g.kappa_f);
    if (!(den > 0.0))
        throw SingularityError("shape-factor denominator is not positive (" + detail::fmt(den) + ")");
    return (g.kappa_f / g.kappa_i) / den;
}

/*!
 * Closed-form enhancement for a single-photon channel,
 *   R = (pi sqrt(2 pi)/8) eta0j^2 (omega_j tau)^2 (omega'_res/omega_j) (m^2/p_i^2) f.
 */
[[nodiscard]] inline double ratio_closed_form(ResonantSetup const& s, Channel ch = channel_10)
{
    if (!(ch == channel_10 || ch == channel_01))
        throw DomainError("closed-form ratio covers channels (1,0) and (0,1)");
    check_scattering_angle(s);
    int const j = ch == channel_10 ? 1 : 2;
    auto const& w = s.field.wave(j);
    double const p = s.initial.momentum();
    if (!(p > 0.0))
        throw DomainError("closed-form ratio needs |p_i| > 0");
    double const omega_res = resonant_frequency(s.initial.four_momentum(), s.photon.null(), w.omega);
    double const wt = w.omega * s.field.tau();
    double const m2p2 = electron_mass * electron_mass / (p * p);
    return std::numbers::pi * std::sqrt(2.0 * std::numbers::pi) / 8.0 * w.eta0 * w.eta0 * wt * wt
           * (omega_res / w.omega) * m2p2 * ratio_shape_factor(s);
}

//! Photon-energy window 4/tau over which the baseline is integrated for the ratio.
[[nodiscard]] inline double baseline_window(double tau) { return 4.0 / tau; }

/*!
 * Enhancement by direct division: the integrated resonant term over the
 * baseline evaluated at omega'_res and integrated over baseline_window().
 */
[[nodiscard]] inline double ratio_direct(ResonantSetup const& s, Channel ch = channel_10)
{
    if (!(ch == channel_10 || ch == channel_01))
        throw DomainError("direct ratio covers channels (1,0) and (0,1)");
    check_scattering_angle(s);
    ElectronState const fin = s.elastic_final();
    double const mott_value = mott(s.z, s.initial, fin);
    auto const r = channel_resonance(s, ch);
    double const num = integrated_channel_term(s, r, mott_value);
    double const bh = mott_value * bh_photon_probability(s.initial, fin, s.photon, r.omega_res);
    double const den = bh * baseline_window(s.field.tau());
    if (!(den > 0.0))
        throw SingularityError("Bethe-Heitler baseline vanishes");
    return num / den;
}

struct RatioSet
{
    double r10_closed{0};
    double r10_direct{0};
    double r01{0};
    double r_res{0};
};

//! R_res = R(1,0) + R(0,1), both from the closed form, plus the direct (1,0) value.
[[nodiscard]] inline RatioSet ratio_all(ResonantSetup const& s)
{
    RatioSet r;
    r.r10_closed = ratio_closed_form(s, channel_10);
    r.r10_direct = ratio_direct(s, channel_10);
    r.r01 = ratio_closed_form(s, channel_01);
    r.r_res = r.r10_closed + r.r01;
    return r;
}

}  // namespace ensb
