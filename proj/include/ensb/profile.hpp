// SPDX-License-Identifier: Apache-2.0
//
// Resonance peak profiles.
//
//   P(1,0)(beta) = exp(-2 beta^2) int_{-rho}^{rho} dphi/(4 rho) |erf(phi + i beta) + 1|^2
//   P(1,1)(beta) = exp(-beta^2)   int_{-rho}^{rho} dphi/(8 rho) |erf(sqrt2 phi + i beta/sqrt2) + 1|^2
//
// The partial profiles carry an extra |I_{l1+s1, l2+s2}(phi)|^2 with
// envelope-modulated scattering-vertex arguments.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ensb/complex_erf.hpp"
#include "ensb/errors.hpp"
#include "ensb/generalized_bessel.hpp"
#include "ensb/kinematics.hpp"
#include "ensb/quadrature.hpp"
#include "ensb/waves.hpp"

namespace ensb {

inline constexpr double default_rho = 5.0;

struct ProfileParams
{
    double beta{0};
    double rho{default_rho};
    int s1{1};
    int s2{0};
};

namespace detail {

inline void check_profile(ProfileParams const& p)
{
    if (!(p.rho > 0.0) || !std::isfinite(p.rho))
        throw DomainError("rho must be positive, got " + fmt(p.rho));
    if (!is_supported_channel(p.s1, p.s2))
        throw DomainError("unsupported channel (" + std::to_string(p.s1) + ", " + std::to_string(p.s2) + ")");
    if (!std::isfinite(p.beta))
        throw DomainError("beta must be finite");
}

inline bool double_photon(ProfileParams const& p) { return p.s1 == 1 && p.s2 == 1; }

//! Integrand of the summed profile; the Gaussian weight is exp(-2 b^2) in both channels.
struct ProfileKernel
{
    double norm;
    double scale;
    double beta_arg;

    explicit ProfileKernel(ProfileParams const& p)
    {
        if (double_photon(p))
        {
            norm = 1.0 / (8.0 * p.rho);
            scale = std::numbers::sqrt2;
            beta_arg = p.beta / std::numbers::sqrt2;
        }
        else
        {
            norm = 1.0 / (4.0 * p.rho);
            scale = 1.0;
            beta_arg = p.beta;
        }
    }

    [[nodiscard]] double operator()(double phi) const
    {
        return norm * std::norm(scaled_erf_plus_one(scale * phi, beta_arg));
    }
};

}  // namespace detail

//! Summed peak profile P_res for a channel.
[[nodiscard]] inline double profile_res(ProfileParams const& p, QuadratureControl ctrl = {})
{
    detail::check_profile(p);
    detail::ProfileKernel const kernel(p);
    return integrate(kernel, -p.rho, p.rho, ctrl).value;
}

//! The Gaussian exp(-2 beta^2) drawn alongside the profile.
[[nodiscard]] inline double profile_gaussian(double beta) { return std::exp(-2.0 * beta * beta); }

/*!
 * Scattering-vertex arguments at the pulse peak. Inside the pulse
 * gamma_j(phi) = gamma0j g(phi) and alpha(phi) = alpha0 g(phi)^2.
 */
struct ScatteringArgs
{
    IArgs peak;
    Envelope envelope{Envelope::gaussian};
    SeriesControl series{};
};

inline constexpr double partial_alpha_limit = 1e3;

//! Partial profile for stimulated photon numbers (l1, l2).
[[nodiscard]] inline double profile_partial(int l1, int l2, ProfileParams const& p, ScatteringArgs const& args,
                                            QuadratureControl ctrl = {})
{
    detail::check_profile(p);
    IArgs const& a0 = args.peak;
    if (std::abs(a0.alpha) > partial_alpha_limit || a0.gamma1 > partial_alpha_limit || a0.gamma2 > partial_alpha_limit)
        throw CapabilityError("scattering-vertex arguments above " + detail::fmt(partial_alpha_limit)
                              + " are outside the supported Bessel regime");
    detail::ProfileKernel const kernel(p);
    int const n1 = l1 + p.s1;
    int const n2 = l2 + p.s2;
    auto f = [&](double phi) {
        double const g = evaluate_envelope(args.envelope, phi);
        IArgs a = a0;
        a.gamma1 *= g;
        a.gamma2 *= g;
        a.alpha *= g * g;
        return kernel(phi) * std::norm(i_two_wave(n1, n2, a, args.series));
    };
    return integrate(f, -p.rho, p.rho, ctrl).value;
}

}  // namespace ensb
