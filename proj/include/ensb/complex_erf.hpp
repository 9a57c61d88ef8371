// SPDX-License-Identifier: Apache-2.0
//
// Error function of complex argument.
//
// Small |z| uses the Maclaurin series. Elsewhere erfc(z) = exp(-z^2) w(iz)
// with the Faddeeva function w evaluated by Gautschi's continued fraction
// and Laplace-continued-fraction/Taylor hybrid (Poppe & Wijers, TOMS 680).
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace ensb {

using cplx = std::complex<double>;

inline constexpr double erf_domain_re = 20.0;
inline constexpr double erf_domain_im = 10.0;
inline constexpr double erf_series_radius = 2.5;
//! Beyond this Re z, 1 - erf(z) from the series cancels and w(z) is used.
inline constexpr double erf_cancellation_re = 0.5;

//! True when z lies inside the region where the documented accuracy holds.
[[nodiscard]] inline bool erf_accuracy_guaranteed(cplx z)
{
    return std::abs(z.real()) <= erf_domain_re && std::abs(z.imag()) <= erf_domain_im;
}

namespace detail {

inline constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;

inline cplx erf_series(cplx z)
{
    cplx const z2 = z * z;
    cplx term = z;
    cplx sum = z;
    for (int k = 1; k < 200; ++k)
    {
        term *= -z2 / static_cast<double>(k);
        cplx const add = term / static_cast<double>(2 * k + 1);
        sum += add;
        if (std::abs(add) <= 1e-17 * std::abs(sum))
            break;
    }
    return two_over_sqrt_pi * sum;
}

//! w(z) for Im z >= 0.
inline cplx faddeeva_upper(cplx z)
{
    double const xi = z.real();
    double const xabs = std::abs(xi);
    double const yabs = z.imag();
    double const x = xabs / 6.3;
    double const y = yabs / 4.4;
    double qrho = x * x + y * y;
    double const xquad = xabs * xabs - yabs * yabs;
    double const yquad = 2.0 * xabs * yabs;

    double u = 0.0;
    double v = 0.0;
    if (qrho < 0.085264)
    {
        qrho = (1.0 - 0.85 * y) * std::sqrt(qrho);
        int const n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
        int j = 2 * n + 1;
        double xsum = 1.0 / j;
        double ysum = 0.0;
        for (int i = n; i >= 1; --i)
        {
            j -= 2;
            double const xaux = (xsum * xquad - ysum * yquad) / i;
            ysum = (xsum * yquad + ysum * xquad) / i;
            xsum = xaux + 1.0 / j;
        }
        double const u1 = -two_over_sqrt_pi * (xsum * yabs + ysum * xabs) + 1.0;
        double const v1 = two_over_sqrt_pi * (xsum * xabs - ysum * yabs);
        double const daux = std::exp(-xquad);
        double const u2 = daux * std::cos(yquad);
        double const v2 = -daux * std::sin(yquad);
        u = u1 * u2 - v1 * v2;
        v = u1 * v2 + v1 * u2;
    }
    else
    {
        double h = 0.0;
        int kapn = 0;
        int nu = 0;
        if (qrho > 1.0)
        {
            qrho = std::sqrt(qrho);
            nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
        }
        else
        {
            qrho = (1.0 - y) * std::sqrt(1.0 - qrho);
            h = 1.88 * qrho;
            kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
            nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
        }
        double const h2 = 2.0 * h;
        double qlambda = h > 0.0 ? std::pow(h2, kapn) : 0.0;
        double rx = 0.0;
        double ry = 0.0;
        double sx = 0.0;
        double sy = 0.0;
        for (int n = nu; n >= 0; --n)
        {
            double const np1 = n + 1.0;
            double tx = yabs + h + np1 * rx;
            double const ty = xabs - np1 * ry;
            double const c = 0.5 / (tx * tx + ty * ty);
            rx = c * tx;
            ry = c * ty;
            if (h > 0.0 && n <= kapn)
            {
                tx = qlambda + sx;
                sx = rx * tx - ry * sy;
                sy = ry * tx + rx * sy;
                qlambda /= h2;
            }
        }
        if (h == 0.0)
        {
            u = two_over_sqrt_pi * rx;
            v = two_over_sqrt_pi * ry;
        }
        else
        {
            u = two_over_sqrt_pi * sx;
            v = two_over_sqrt_pi * sy;
        }
        if (yabs == 0.0)
            u = std::exp(-xabs * xabs);
    }
    if (xi < 0.0)
        v = -v;
    return {u, v};
}

//! erfc(z) for Re z >= 0 and |z| outside the series disc.
inline cplx erfc_right(cplx z)
{
    cplx const iz{-z.imag(), z.real()};
    return std::exp(-z * z) * faddeeva_upper(iz);
}

}  // namespace detail

//! Faddeeva function w(z) = exp(-z^2) erfc(-iz) in the closed upper half plane.
[[nodiscard]] inline cplx faddeeva_w(cplx z)
{
    if (z.imag() >= 0.0)
        return detail::faddeeva_upper(z);
    // w(z) = 2 exp(-z^2) - w(-z)
    return 2.0 * std::exp(-z * z) - detail::faddeeva_upper(-z);
}

[[nodiscard]] inline cplx complex_erf(cplx z)
{
    if (std::abs(z) <= erf_series_radius)
        return detail::erf_series(z);
    if (z.real() < 0.0)
        return -(1.0 - detail::erfc_right(-z));
    return 1.0 - detail::erfc_right(z);
}

//! erfc(z) = 1 - erf(z), accurate where erf(z) is close to 1.
[[nodiscard]] inline cplx complex_erfc(cplx z)
{
    if (std::abs(z) <= erf_series_radius && z.real() < erf_cancellation_re)
        return 1.0 - detail::erf_series(z);
    if (z.real() < 0.0)
        return 2.0 - detail::erfc_right(-z);
    return detail::erfc_right(z);
}

/*!
 * exp(-b^2) (erf(x + i b) + 1), finite for every real b.
 *
 * erf(z) + 1 = erfc(-z); the Gaussian factor is folded into the exponent of
 * erfc(w) = exp(-w^2) w(i w) so neither factor overflows.
 */
[[nodiscard]] inline cplx scaled_erf_plus_one(double x, double b)
{
    cplx const z{x, b};
    if (std::abs(z) <= erf_series_radius && x > -erf_cancellation_re)
        return std::exp(-b * b) * (1.0 + detail::erf_series(z));
    // -b^2 - z^2 = -x^2 - 2 i x b
    cplx const e = std::exp(cplx{-x * x, -2.0 * x * b});
    if (x <= 0.0)
    {
        cplx const zeta = -z;
        cplx const izeta{-zeta.imag(), zeta.real()};
        return e * detail::faddeeva_upper(izeta);
    }
    cplx const iz{-z.imag(), z.real()};
    return 2.0 * std::exp(-b * b) - e * detail::faddeeva_upper(iz);
}

}  // namespace ensb
