// SPDX-License-Identifier: Apache-2.0
//
// Spontaneous-emission probabilities at the first vertex under resonance.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "ensb/constants.hpp"
#include "ensb/errors.hpp"
#include "ensb/four_vector.hpp"
#include "ensb/kinematics.hpp"
#include "ensb/waves.hpp"

namespace ensb {

//! W''(1,0) = eta01^2 [1 + u'^2/(2(1+u')) - (4u'/u)(1 - u'/u)], with 1 - 4r(1-r) = (1-2r)^2
[[nodiscard]] inline double w2_10(double eta01, double u, double u_prime)
{
    if (!(u > 0.0))
        throw DomainError("u must be positive");
    double const r = u_prime / u;
    double const c = 1.0 - 2.0 * r;
    return eta01 * eta01 * (c * c + u_prime * u_prime / (2.0 * (1.0 + u_prime)));
}

//! u_omega = 1 - (omega^2 / (omega1 omega2)) (1 - u'/u)
[[nodiscard]] inline double u_omega(double omega, double omega1, double omega2, double u, double u_prime)
{
    if (!(u > 0.0))
        throw DomainError("u must be positive");
    return 1.0 - omega * omega / (omega1 * omega2) * (1.0 - u_prime / u);
}

//! D = -(1/2)(eta01 e^{i chi2} gamma02 eps1^- + eta02 e^{i chi1} gamma01 eps2^-)
[[nodiscard]] inline ComplexFourVector d_vector(TwoWaveField const& field, VertexParams const& v)
{
    using namespace std::complex_literals;
    std::complex<double> const c1 = field.wave1().eta0 * v.gamma02 * std::polar(1.0, v.chi2);
    std::complex<double> const c2 = field.wave2().eta0 * v.gamma01 * std::polar(1.0, v.chi1);
    return std::complex<double>(-0.5) * (c1 * field.epsilon(1, -1) + c2 * field.epsilon(2, -1));
}

/*!
 * W''(1,1) for arbitrary photon direction:
 *
 *   eta01^2 eta02^2 [ -4 (u'/u)^2 u_w^2 (1 - u u'/(2(1+u'))) + 4 (u'/u) u_w
 *                     - (D D*)/2 (1 + u'^2/(2(1+u')))
 *                     - 4 u'^2/(m u) u_w Re{(q_i D*) - (p_i D*)/(1+u')} ]
 */
[[nodiscard]] inline double w2_11_general(TwoWaveField const& field, double u, double u_prime, double u_w,
                                          FourVector const& p_i, FourVector const& q_i, VertexParams const& vertex)
{
    if (!(u > 0.0))
        throw DomainError("u must be positive");
    double const e1 = field.wave1().eta0;
    double const e2 = field.wave2().eta0;
    double const r = u_prime / u;
    double const up = u_prime;
    ComplexFourVector const d = d_vector(field, vertex);
    ComplexFourVector const dc = d.conj();
    double const dd = minkowski_dot(d, dc).real();
    std::complex<double> const mixed = minkowski_dot(q_i, dc) - minkowski_dot(p_i, dc) / (1.0 + up);
    // the first two terms regrouped so that u' = u, u_w = 1 cancels exactly
    double const bracket = 4.0 * r * u_w * (1.0 - r * u_w) + 2.0 * r * r * u_w * u_w * u * up / (1.0 + up)
                           - 0.5 * dd * (1.0 + up * up / (2.0 * (1.0 + up)))
                           - 4.0 * up * up / (electron_mass * u) * u_w * mixed.real();
    return e1 * e1 * e2 * e2 * bracket;
}

enum class EmissionRegime
{
    general,
    interference,
};

struct EmissionProbability
{
    double value{0};  //!< dW'/(d omega' d Omega'), 1/(eV sr) per unit time
    int s1{1};
    int s2{0};
    EmissionRegime regime{EmissionRegime::general};
    double u{0};
    double u_prime{0};
    double omega_prime{0};
    FourVector q_i{};
};

inline constexpr double interference_tolerance = 1e-9;

/*!
 * Emission probability alpha m^2 W'' / (4 pi E_i) for channel (s1, s2) and
 * photon direction n'. The photon energy defaults to the channel's resonant
 * frequency.
 */
[[nodiscard]] inline EmissionProbability emission_probability(int s1, int s2, ElectronState const& initial,
                                                              PhotonDirection const& photon,
                                                              TwoWaveField const& field,
                                                              std::optional<double> omega_prime = std::nullopt)
{
    if (!is_supported_channel(s1, s2))
        throw DomainError("unsupported channel (" + std::to_string(s1) + ", " + std::to_string(s2) + ")");
    if (s1 == 1 && s2 == 1 && !field.counter_rotating())
        throw CapabilityError("the two-photon channel is derived only for delta1 = -delta2 = 1");
    double const w1 = field.wave1().omega;
    double const w2 = field.wave2().omega;
    double const omega = combined_energy(s1, s2, w1, w2).omega;
    FourVector const p_i = initial.four_momentum();
    FourVector const n_prime = photon.null();
    double const wp = omega_prime ? *omega_prime : resonant_frequency(p_i, n_prime, omega);
    if (!(wp > 0.0))
        throw DomainError("photon energy must be positive");
    FourVector const k_prime = wp * n_prime;
    FourVector const k_sum = omega * wave_null_vector();
    FourVector const q_i = p_i - k_prime + k_sum;
    auto const [u, u_prime] = u_invariants(omega, p_i, k_prime, q_i);
    if (u_prime > u * (1.0 + interference_tolerance))
        throw DomainError("u' exceeds u; photon energy is off resonance");

    EmissionProbability out;
    out.s1 = s1;
    out.s2 = s2;
    out.u = u;
    out.u_prime = u_prime;
    out.omega_prime = wp;
    out.q_i = q_i;
    out.regime = std::abs(1.0 - u_prime / u) < interference_tolerance ? EmissionRegime::interference
                                                                      : EmissionRegime::general;
    double bracket = 0.0;
    if (s2 == 0)
        bracket = w2_10(field.wave1().eta0, u, u_prime);
    else if (s1 == 0)
        bracket = w2_10(field.wave2().eta0, u, u_prime);
    else
    {
        VertexParams vertex = emission_vertex_params(omega, u, u_prime, field);
        auto const chi = chi_phases(q_i, p_i, field.delta_angle());
        vertex.chi1 = chi.chi1;
        vertex.chi2 = chi.chi2;
        vertex.phases_defined = chi.defined;
        double const uw = u_omega(omega, w1, w2, u, u_prime);
        bracket = w2_11_general(field, u, u_prime, uw, p_i, q_i, vertex);
    }
    out.value = alpha_fs * electron_mass * electron_mass * bracket / (4.0 * std::numbers::pi * initial.energy());
    return out;
}

//! Interference-region closed forms of the emission probability.
[[nodiscard]] inline double emission_interference_10(double eta01, double u_prime, double energy)
{
    return alpha_fs * electron_mass * electron_mass * eta01 * eta01 / (4.0 * std::numbers::pi * energy)
           * (1.0 + u_prime * u_prime / (2.0 * (1.0 + u_prime)));
}

[[nodiscard]] inline double emission_interference_11(double eta01, double eta02, double u_prime, double energy)
{
    return alpha_fs * electron_mass * electron_mass * eta01 * eta01 * eta02 * eta02 / (2.0 * std::numbers::pi * energy)
           * u_prime * u_prime / (1.0 + u_prime);
}

}  // namespace ensb
