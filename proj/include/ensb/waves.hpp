// SPDX-License-Identifier: Apache-2.0
//
// Two co-propagating, circularly polarized, Gaussian-envelope laser pulses
// and the multiphoton parameters they induce at the diagram vertices.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ensb/constants.hpp"
#include "ensb/errors.hpp"
#include "ensb/four_vector.hpp"
#include "ensb/kinematics.hpp"

namespace ensb {

namespace detail {
inline std::string fmt(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
}  // namespace detail

//---------------------------------------------------------------------------//
// Field-strength conversions and limits
//---------------------------------------------------------------------------//

inline constexpr double eta_upper_bound = 0.3;
inline constexpr double eta_warning_threshold = 0.1;
inline constexpr double quasimono_warning = 10.0;
inline constexpr double quasimono_reject = 1.0;

//! eta0 = e F0 / (m omega) for a peak field F0 in V/cm and omega in eV.
[[nodiscard]] inline double eta_from_field_strength(double field_V_per_cm, double omega)
{
    if (!(field_V_per_cm > 0.0) || !(omega > 0.0))
        throw DomainError("field strength and frequency must be positive");
    return field_V_per_cm * codata.hbar_c_eV_cm / (electron_mass * omega);
}

//! Inverse of eta_from_field_strength(), returns V/cm.
[[nodiscard]] inline double field_strength_from_eta(double eta, double omega)
{
    if (!(eta > 0.0) || !(omega > 0.0))
        throw DomainError("eta and frequency must be positive");
    return eta * electron_mass * omega / codata.hbar_c_eV_cm;
}

//! omega tau, the number of carrier radians per envelope width.
[[nodiscard]] inline double quasimono_margin(double omega, double tau)
{
    if (!(tau > 0.0))
        throw DomainError("pulse width must be positive");
    return omega * tau;
}

//---------------------------------------------------------------------------//
// Envelopes
//---------------------------------------------------------------------------//

enum class Envelope
{
    gaussian,
};

[[nodiscard]] inline double envelope_gaussian(double phi) { return std::exp(-phi * phi); }

[[nodiscard]] inline double evaluate_envelope(Envelope env, double phi)
{
    switch (env)
    {
        case Envelope::gaussian:
            return envelope_gaussian(phi);
    }
    throw CapabilityError("unknown envelope");
}

//---------------------------------------------------------------------------//
// Waves
//---------------------------------------------------------------------------//

struct Validation
{
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    [[nodiscard]] bool ok() const { return errors.empty(); }
    void merge(Validation const& other, std::string const& prefix = {})
    {
        for (auto const& e : other.errors)
            errors.push_back(prefix + e);
        for (auto const& w : other.warnings)
            warnings.push_back(prefix + w);
    }
};

struct LaserWave
{
    double omega{0};  //!< carrier frequency, eV
    double eta0{0};   //!< peak intensity parameter
    int delta{1};     //!< +1 or -1 (circular)
    double tau{0};    //!< envelope width, 1/eV
    Envelope envelope{Envelope::gaussian};

    [[nodiscard]] Validation validate() const
    {
        Validation v;
        if (!(omega > 0.0))
            v.errors.push_back("omega must be positive, got " + detail::fmt(omega));
        if (!(eta0 >= 0.0) || !(eta0 < eta_upper_bound))
            v.errors.push_back("eta0 must lie in [0, " + detail::fmt(eta_upper_bound) + "), got " + detail::fmt(eta0));
        else if (eta0 > eta_warning_threshold)
            v.warnings.push_back("eta0 = " + detail::fmt(eta0) + " is above 0.1; field corrections may matter");
        if (delta != 1 && delta != -1)
            v.errors.push_back("delta must be +1 or -1, got " + std::to_string(delta));
        if (!(tau > 0.0))
            v.errors.push_back("tau must be positive, got " + detail::fmt(tau));
        else if (omega > 0.0)
        {
            double const m = omega * tau;
            if (m < quasimono_reject)
                v.errors.push_back("omega tau = " + detail::fmt(m) + " is below 1");
            else if (m < quasimono_warning)
                v.warnings.push_back("omega tau = " + detail::fmt(m) + " is below 10; pulse is not quasimonochromatic");
        }
        return v;
    }

    [[nodiscard]] double quasimono() const { return quasimono_margin(omega, tau); }
    [[nodiscard]] FourVector k() const { return photon_four_vector(omega, wave_direction); }
};

//! Polarization basis of one wave: e_x rotated by angle about z.
struct PolarizationBasis
{
    FourVector ex;
    FourVector ey;

    [[nodiscard]] static PolarizationBasis rotated(double angle)
    {
        double const c = std::cos(angle);
        double const s = std::sin(angle);
        return {{0.0, {c, s, 0.0}}, {0.0, {-s, c, 0.0}}};
    }

    //! e_x + i sign delta e_y
    [[nodiscard]] ComplexFourVector epsilon(int sign, int delta) const
    {
        std::complex<double> const i_d{0.0, static_cast<double>(sign * delta)};
        return ComplexFourVector(ex) + i_d * ComplexFourVector(ey);
    }
};

class TwoWaveField
{
  public:
    TwoWaveField(LaserWave w1, LaserWave w2, double delta_angle = 0.0)
        : wave1_(w1), wave2_(w2), delta_angle_(delta_angle)
    {
        auto const v = validate();
        if (!v.ok())
            throw ConfigError(v.errors);
        warnings_ = v.warnings;
    }

    [[nodiscard]] LaserWave const& wave1() const { return wave1_; }
    [[nodiscard]] LaserWave const& wave2() const { return wave2_; }
    [[nodiscard]] LaserWave const& wave(int j) const { return j == 1 ? wave1_ : wave2_; }
    [[nodiscard]] double delta_angle() const { return delta_angle_; }
    [[nodiscard]] std::vector<std::string> const& warnings() const { return warnings_; }

    //! The configuration with derived cross sections: delta1 = -delta2 = +1.
    [[nodiscard]] bool counter_rotating() const { return wave1_.delta == 1 && wave2_.delta == -1; }

    //! Common pulse width; both waves share one envelope width.
    [[nodiscard]] double tau() const { return wave1_.tau; }

    [[nodiscard]] PolarizationBasis basis(int j) const
    {
        return PolarizationBasis::rotated(j == 1 ? 0.0 : delta_angle_);
    }

    //! epsilon_j^(sign) = e_jx + i sign delta_j e_jy
    [[nodiscard]] ComplexFourVector epsilon(int j, int sign) const { return basis(j).epsilon(sign, wave(j).delta); }

    [[nodiscard]] Validation validate() const
    {
        Validation v;
        v.merge(wave1_.validate(), "wave1: ");
        v.merge(wave2_.validate(), "wave2: ");
        if (wave1_.omega > 0.0 && wave2_.omega > 0.0 && !(wave1_.omega > wave2_.omega))
            v.errors.push_back("omega1 must exceed omega2, got " + detail::fmt(wave1_.omega) + " <= " +
                               detail::fmt(wave2_.omega));
        if (wave1_.tau > 0.0 && wave2_.tau > 0.0 && std::abs(wave1_.tau - wave2_.tau) > 1e-12 * wave1_.tau)
            v.errors.push_back("both pulses must share one width tau");
        if (!std::isfinite(delta_angle_))
            v.errors.push_back("polarization angle must be finite");
        return v;
    }

  private:
    LaserWave wave1_;
    LaserWave wave2_;
    double delta_angle_;
    std::vector<std::string> warnings_;
};

//! (omega_+, omega_-) = (omega1 + omega2, omega1 - omega2)
[[nodiscard]] inline std::pair<double, double> combination_frequencies(TwoWaveField const& field)
{
    double const w1 = field.wave1().omega;
    double const w2 = field.wave2().omega;
    return {w1 + w2, w1 - w2};
}

//---------------------------------------------------------------------------//
// Multiphoton parameters
//---------------------------------------------------------------------------//

struct VertexParams
{
    double gamma01{0};
    double gamma02{0};
    double alpha0_plus{0};
    double alpha0_minus{0};
    double chi1{0};
    double chi2{0};
    bool phases_defined{false};  //!< false when Q_perp vanishes
};

namespace detail {

struct QVector
{
    FourVector q;
    double scale;  //!< sum of squared components of both terms, for relative tolerances
};

inline QVector q_vector(FourVector const& p, FourVector const& pp)
{
    double const np = light_cone(p);
    double const npp = light_cone(pp);
    if (!(np > 0.0) || !(npp > 0.0))
        throw DomainError("(n p) and (n p') must be positive");
    FourVector const a = (1.0 / np) * p;
    FourVector const b = (1.0 / npp) * pp;
    double const scale = a.t * a.t + dot(a.s, a.s) + b.t * b.t + dot(b.s, b.s);
    return {a - b, scale};
}

}  // namespace detail

//! |Q_perp| below this fraction of the term magnitude is rounding noise.
inline constexpr double q_perp_clamp = 1e-12;

/*!
 * Bunkin-Fedorov parameter gamma_0j = eta0j (m / omega_j) sqrt(-Q^2) with
 * Q = p/(n p) - p'/(n p'). Since (n Q) = 0, -Q^2 = |Q_perp|^2 exactly.
 */
[[nodiscard]] inline double gamma0_general(double eta0j, double omega_j, FourVector const& p, FourVector const& pp)
{
    auto const [q, scale] = detail::q_vector(p, pp);
    double const perp2 = q.s.x * q.s.x + q.s.y * q.s.y;
    if (!(perp2 > q_perp_clamp * q_perp_clamp * scale))
        return 0.0;
    return eta0j * electron_mass / omega_j * std::sqrt(perp2);
}

struct ChiPhases
{
    double chi1{0};
    double chi2{0};
    bool defined{false};
};

//! Azimuth of Q_perp in the wave-1 polarization basis, chi2 = chi1 - Delta.
[[nodiscard]] inline ChiPhases chi_phases(FourVector const& p, FourVector const& pp, double delta_angle)
{
    auto const [q, scale] = detail::q_vector(p, pp);
    double const perp2 = q.s.x * q.s.x + q.s.y * q.s.y;
    if (!(perp2 > q_perp_clamp * q_perp_clamp * scale))
        return {};
    double const chi1 = std::atan2(q.s.y, q.s.x);
    return {chi1, chi1 - delta_angle, true};
}

//! alpha_0(+/-) = eta01 eta02 m^2 / (omega1 +/- omega2) (1/(n p) - 1/(n p')).
[[nodiscard]] inline double alpha0_general(TwoWaveField const& field, int sign, FourVector const& p,
                                           FourVector const& pp)
{
    double const np = light_cone(p);
    double const npp = light_cone(pp);
    if (!(np > 0.0) || !(npp > 0.0))
        throw DomainError("(n p) and (n p') must be positive");
    auto const [wp, wm] = combination_frequencies(field);
    double const wc = sign >= 0 ? wp : wm;
    double const m2 = electron_mass * electron_mass;
    return field.wave1().eta0 * field.wave2().eta0 * m2 / wc * (1.0 / np - 1.0 / npp);
}

//! Full parameter set on a pair of momenta.
[[nodiscard]] inline VertexParams vertex_params_general(TwoWaveField const& field, FourVector const& p,
                                                        FourVector const& pp)
{
    VertexParams v;
    v.gamma01 = gamma0_general(field.wave1().eta0, field.wave1().omega, p, pp);
    v.gamma02 = gamma0_general(field.wave2().eta0, field.wave2().omega, p, pp);
    v.alpha0_plus = alpha0_general(field, +1, p, pp);
    v.alpha0_minus = alpha0_general(field, -1, p, pp);
    auto const chi = chi_phases(p, pp, field.delta_angle());
    v.chi1 = chi.chi1;
    v.chi2 = chi.chi2;
    v.phases_defined = chi.defined;
    return v;
}

/*!
 * Emission-vertex parameters (q_i, p_i) on resonance, expressed through
 * u and u'. Phases are not fixed by u, u' and are left undefined.
 */
[[nodiscard]] inline VertexParams emission_vertex_params(double omega, double u, double u_prime,
                                                         TwoWaveField const& field)
{
    if (!(u > 0.0))
        throw DomainError("u must be positive");
    double r = u_prime / u;
    if (r < 0.0 && r > -1e-9)
        r = 0.0;
    if (r > 1.0 && r < 1.0 + 1e-9)
        r = 1.0;
    if (!(r >= 0.0 && r <= 1.0))
        throw DomainError("emission vertex requires 0 <= u' <= u, got u'/u = " + detail::fmt(r));
    auto const [wp, wm] = combination_frequencies(field);
    double const root = std::sqrt(r * (1.0 - r));
    double const e1 = field.wave1().eta0;
    double const e2 = field.wave2().eta0;
    VertexParams v;
    v.gamma01 = 2.0 * e1 * omega / field.wave1().omega * root;
    v.gamma02 = 2.0 * e2 * omega / field.wave2().omega * root;
    v.alpha0_plus = 2.0 * e1 * e2 * omega / wp * r;
    v.alpha0_minus = 2.0 * e1 * e2 * omega / wm * r;
    return v;
}

//! gamma_0j at the scattering vertex, eta0j (m/omega_j) sqrt(a_i^2 + a_f^2 - 2 a_i a_f cos dphi).
[[nodiscard]] inline std::pair<double, double> scattering_vertex_gamma(TwoWaveField const& field, double a_i,
                                                                       double a_f, double dphi)
{
    if (!(a_i >= 0.0) || !(a_f >= 0.0))
        throw DomainError("a parameters must be non-negative");
    double const s2 = std::max(0.0, a_i * a_i + a_f * a_f - 2.0 * a_i * a_f * std::cos(dphi));
    double const s = std::sqrt(s2);
    return {field.wave1().eta0 * electron_mass / field.wave1().omega * s,
            field.wave2().eta0 * electron_mass / field.wave2().omega * s};
}

}  // namespace ensb
