// SPDX-License-Identifier: Apache-2.0
//
// Adaptive Gauss-Kronrod quadrature with an absolute error target.
#pragma once

#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ensb/errors.hpp"

namespace ensb {

struct QuadratureControl
{
    double absolute_tolerance{1e-9};
    unsigned max_depth{20};
};

struct QuadratureResult
{
    double value{0};
    double error{0};
};

/*!
 * Integrate f over [a, b]. Boost's refinement criterion is relative to the
 * L1 norm, so the absolute target is enforced on the returned estimate.
 */
template<class F>
[[nodiscard]] QuadratureResult integrate(F&& f, double a, double b, QuadratureControl ctrl = {})
{
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    double l1 = 0.0;
    double const value = gauss_kronrod<double, 15>::integrate(f, a, b, ctrl.max_depth, 1e-13, &error, &l1);
    double const target = ctrl.absolute_tolerance;
    if (!(error <= target))
        throw ConvergenceError("quadrature error " + std::to_string(error) + " above target " + std::to_string(target),
                               value, error);
    return {value, error};
}

}  // namespace ensb
