// SPDX-License-Identifier: Apache-2.0
//
// Two-wave generalized Bessel function
//
//   I_{n1 n2} = exp(-i(n1 chi1 + n2 chi2))
//             * sum_s exp(i s (chi1 +/- chi2 - Delta)) J_s(alpha) J_{n1-s}(gamma1) J_{n2 -/+ s}(gamma2)
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "ensb/bessel.hpp"
#include "ensb/errors.hpp"

namespace ensb {

struct IArgs
{
    double chi1{0};
    double chi2{0};
    double gamma1{0};
    double gamma2{0};
    double alpha{0};
    double delta_angle{0};
    int rotation_sign{+1};  //!< +1 for counter-rotating waves (delta1 = -delta2 = 1)
};

struct SeriesControl
{
    double absolute_tolerance{1e-12};
    long max_terms{1000000};
};

//! Half-width in s outside of which J_s(alpha) is negligible.
[[nodiscard]] inline int alpha_window(double alpha)
{
    double const a = std::abs(alpha);
    return static_cast<int>(std::ceil(a + 10.0 * std::sqrt(a + 1.0) + 10.0));
}

//! Order beyond which J_n(gamma) is negligible.
[[nodiscard]] inline int gamma_window(double gamma) { return alpha_window(gamma); }

/*!
 * Bessel tables for a fixed argument set, reused across many (n1, n2).
 */
class TwoWaveSeries
{
  public:
    //! Tables cover |n1|, |n2| <= max_order.
    TwoWaveSeries(IArgs const& args, int max_order, SeriesControl ctrl = {}) : args_(args), ctrl_(ctrl)
    {
        if (!std::isfinite(args.gamma1) || !std::isfinite(args.gamma2) || !std::isfinite(args.alpha)
            || !std::isfinite(args.chi1) || !std::isfinite(args.chi2) || !std::isfinite(args.delta_angle))
            throw DomainError("generalized Bessel arguments must be finite");
        if (!(ctrl.absolute_tolerance > 0.0))
            throw DomainError("series tolerance must be positive");
        if (args.rotation_sign != 1 && args.rotation_sign != -1)
            throw DomainError("rotation sign must be +1 or -1");
        window_ = alpha_window(args.alpha);
        int const reach = std::abs(max_order) + window_;
        ja_ = BesselTable(args.alpha, window_ + 10);
        jg1_ = BesselTable(args.gamma1, std::max(reach, gamma_window(args.gamma1)) + 10);
        jg2_ = BesselTable(args.gamma2, std::max(reach, gamma_window(args.gamma2)) + 10);
        max_order_ = std::abs(max_order);
        g1_window_ = gamma_window(args.gamma1);
        g2_window_ = gamma_window(args.gamma2);
    }

    [[nodiscard]] int window() const { return window_; }
    [[nodiscard]] int max_order() const { return max_order_; }

    [[nodiscard]] std::complex<double> operator()(int n1, int n2) const
    {
        if (std::abs(n1) > max_order_ || std::abs(n2) > max_order_)
            throw CapabilityError("order (" + std::to_string(n1) + ", " + std::to_string(n2)
                                  + ") exceeds the precomputed table");
        int const sg = args_.rotation_sign;
        double const theta = args_.chi1 + sg * args_.chi2 - args_.delta_angle;

        auto term = [&](int s) {
            double const mag = ja_(s) * jg1_(n1 - s) * jg2_(n2 - sg * s);
            return std::polar(mag, s * theta);
        };

        // s range where all three factors are above their negligible tails
        int lo = -window_;
        int hi = window_;
        lo = std::max(lo, n1 - g1_window_);
        hi = std::min(hi, n1 + g1_window_);
        int const a2 = sg * n2 - g2_window_;
        int const b2 = sg * n2 + g2_window_;
        lo = std::max(lo, a2);
        hi = std::min(hi, b2);

        std::complex<double> sum{0.0, 0.0};
        long evaluated = 0;
        for (int s = lo; s <= hi; ++s)
        {
            sum += term(s);
            ++evaluated;
        }
        if (lo > hi)
        {
            lo = hi = 0;
            sum = term(0);
            evaluated = 1;
        }
        // extend outward until five consecutive terms drop below tolerance on each side
        double const tol = ctrl_.absolute_tolerance;
        int const limit = window_ + 10;
        int quiet = 0;
        for (int s = hi + 1; s <= limit && quiet < 5; ++s)
        {
            auto const t = term(s);
            sum += t;
            quiet = std::abs(t) < tol ? quiet + 1 : 0;
            if (++evaluated >= ctrl_.max_terms)
                throw ConvergenceError("generalized Bessel series did not converge within max_terms",
                                       std::abs(sum), tol);
        }
        quiet = 0;
        for (int s = lo - 1; s >= -limit && quiet < 5; --s)
        {
            auto const t = term(s);
            sum += t;
            quiet = std::abs(t) < tol ? quiet + 1 : 0;
            if (++evaluated >= ctrl_.max_terms)
                throw ConvergenceError("generalized Bessel series did not converge within max_terms",
                                       std::abs(sum), tol);
        }
        double const phase = -(n1 * args_.chi1 + n2 * args_.chi2);
        return std::polar(1.0, phase) * sum;
    }

  private:
    IArgs args_;
    SeriesControl ctrl_;
    int window_{0};
    int max_order_{0};
    int g1_window_{0};
    int g2_window_{0};
    BesselTable ja_;
    BesselTable jg1_;
    BesselTable jg2_;
};

//! Single evaluation of I_{n1 n2}.
[[nodiscard]] inline std::complex<double> i_two_wave(int n1, int n2, IArgs const& args, SeriesControl ctrl = {})
{
    TwoWaveSeries const series(args, std::max(std::abs(n1), std::abs(n2)), ctrl);
    return series(n1, n2);
}

//! Interference-region reduction exp(-i n1 Delta) J_n1(alpha) delta_{n2, sign n1}.
[[nodiscard]] inline std::complex<double> i_interference(int n1, int n2, double alpha, double delta_angle,
                                                         int rotation_sign = +1)
{
    if (n2 != rotation_sign * n1)
        return {0.0, 0.0};
    return std::polar(1.0, -n1 * delta_angle) * bessel_j(n1, alpha);
}

//! |n| beyond which |I_{n1 n2}| is negligible for the given arguments.
[[nodiscard]] inline int two_wave_order_bound(IArgs const& args)
{
    return alpha_window(std::abs(args.alpha) + std::max(std::abs(args.gamma1), std::abs(args.gamma2)));
}

}  // namespace ensb
