// SPDX-License-Identifier: Apache-2.0
//
// Integer-order Bessel functions of the first kind by Miller's backward
// recurrence, normalized with J_0 + 2 sum J_2k = 1.
#pragma once

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "ensb/errors.hpp"

namespace ensb {

namespace detail {

//! Starting order for the backward recurrence that covers orders up to n.
inline int miller_start(int n, double ax)
{
    double const top = std::max(static_cast<double>(n), ax);
    int start = static_cast<int>(top + 20.0 + std::sqrt(200.0 * (top + 1.0)));
    start += start % 2;  // normalization sum wants an even start
    return start;
}

inline constexpr double miller_rescale = 1e250;

}  // namespace detail

/*!
 * J_0(x) ... J_nmax(x) for x >= 0, with negative orders served by parity.
 */
class BesselTable
{
  public:
    BesselTable() = default;

    BesselTable(double x, int nmax) : x_(x), nmax_(nmax < 0 ? 0 : nmax)
    {
        if (!std::isfinite(x))
            throw DomainError("Bessel argument must be finite");
        double const ax = std::abs(x);
        values_.assign(nmax_ + 1, 0.0);
        if (ax == 0.0)
        {
            values_[0] = 1.0;
            return;
        }
        fill(ax);
        if (x < 0.0)
        {
            for (int k = 1; k <= nmax_; k += 2)
                values_[k] = -values_[k];
        }
    }

    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] int nmax() const { return nmax_; }

    //! J_n(x); orders beyond the table return 0.
    [[nodiscard]] double operator()(int n) const
    {
        int const an = std::abs(n);
        if (an > nmax_)
            return 0.0;
        double const v = values_[an];
        return (n < 0 && (an % 2)) ? -v : v;
    }

    //! True when |n| lies in the table but the value underflowed to zero.
    [[nodiscard]] bool underflow(int n) const
    {
        int const an = std::abs(n);
        return an <= nmax_ && x_ != 0.0 && std::abs(values_[an]) < DBL_MIN;
    }

  private:
    void fill(double ax)
    {
        int const start = detail::miller_start(nmax_, ax);
        // f_{k-1} = (2k/x) f_k - f_{k+1}, starting from f_{start+1} = 0, f_start = tiny
        std::vector<double> f(start + 2, 0.0);
        f[start] = 1e-30;
        double norm = 0.0;
        for (int k = start; k >= 1; --k)
        {
            f[k - 1] = (2.0 * k / ax) * f[k] - f[k + 1];
            if (std::abs(f[k - 1]) > detail::miller_rescale)
            {
                for (int j = k - 1; j <= start; ++j)
                    f[j] /= detail::miller_rescale;
                norm /= detail::miller_rescale;
            }
            if ((k - 1) % 2 == 0 && k - 1 > 0)
                norm += 2.0 * f[k - 1];
        }
        norm += f[0];
        for (int k = 0; k <= nmax_; ++k)
            values_[k] = f[k] / norm;
    }

    double x_{0};
    int nmax_{0};
    std::vector<double> values_{1.0};
};

struct BesselValue
{
    double value{0};
    bool underflow{false};
};

//! J_n(x) with an underflow flag for orders far beyond the turning point.
[[nodiscard]] inline BesselValue bessel_j_checked(int n, double x)
{
    BesselTable const t(x, std::abs(n));
    return {t(n), t.underflow(n)};
}

//! Integer-order J_n(x); J_{-n}(x) = (-1)^n J_n(x).
[[nodiscard]] inline double bessel_j(int n, double x) { return bessel_j_checked(n, x).value; }

}  // namespace ensb
