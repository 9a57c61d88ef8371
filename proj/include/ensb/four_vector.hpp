// SPDX-License-Identifier: Apache-2.0
//
// Real and complex Minkowski four-vectors with metric (+,-,-,-).
#pragma once

#include <cmath>
#include <complex>

namespace ensb {

struct Vec3
{
    double x{0}, y{0}, z{0};

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
    friend constexpr bool operator==(Vec3, Vec3) = default;
};

[[nodiscard]] constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
[[nodiscard]] inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

//! Unit vector with polar angle theta from +z and azimuth phi from +x.
[[nodiscard]] inline Vec3 unit_vector(double theta, double phi)
{
    double const s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

//! Angle between two non-null vectors, in [0, pi].
[[nodiscard]] inline double angle_between(Vec3 a, Vec3 b)
{
    // atan2 form stays accurate near 0 and pi where acos loses digits
    Vec3 const c{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    return std::atan2(norm(c), dot(a, b));
}

struct FourVector
{
    double t{0};
    Vec3 s{};

    friend constexpr FourVector operator+(FourVector a, FourVector b) { return {a.t + b.t, a.s + b.s}; }
    friend constexpr FourVector operator-(FourVector a, FourVector b) { return {a.t - b.t, a.s - b.s}; }
    friend constexpr FourVector operator*(double k, FourVector a) { return {k * a.t, k * a.s}; }
    friend constexpr FourVector operator*(FourVector a, double k) { return k * a; }
    friend constexpr bool operator==(FourVector, FourVector) = default;
};

//! (ab) = a0 b0 - a.b
[[nodiscard]] constexpr double minkowski_dot(FourVector const& a, FourVector const& b)
{
    return a.t * b.t - dot(a.s, b.s);
}

[[nodiscard]] constexpr double minkowski_square(FourVector const& a) { return minkowski_dot(a, a); }

//! Null vector n = (1, n_hat) for a direction.
[[nodiscard]] constexpr FourVector null_vector(Vec3 direction) { return {1.0, direction}; }

//! Photon four-momentum omega * (1, n_hat); n_hat must be a unit vector.
[[nodiscard]] constexpr FourVector photon_four_vector(double omega, Vec3 direction)
{
    return omega * null_vector(direction);
}

struct ComplexFourVector
{
    using value_type = std::complex<double>;

    value_type t{}, x{}, y{}, z{};

    ComplexFourVector() = default;
    constexpr ComplexFourVector(value_type t_, value_type x_, value_type y_, value_type z_)
        : t(t_), x(x_), y(y_), z(z_)
    {
    }
    explicit constexpr ComplexFourVector(FourVector const& a) : t(a.t), x(a.s.x), y(a.s.y), z(a.s.z) {}

    [[nodiscard]] ComplexFourVector conj() const
    {
        return {std::conj(t), std::conj(x), std::conj(y), std::conj(z)};
    }

    friend ComplexFourVector operator+(ComplexFourVector const& a, ComplexFourVector const& b)
    {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend ComplexFourVector operator-(ComplexFourVector const& a, ComplexFourVector const& b)
    {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend ComplexFourVector operator*(value_type k, ComplexFourVector const& a)
    {
        return {k * a.t, k * a.x, k * a.y, k * a.z};
    }
    friend bool operator==(ComplexFourVector const&, ComplexFourVector const&) = default;
};

//! Bilinear Minkowski product (no conjugation); conjugate explicitly when needed.
[[nodiscard]] inline std::complex<double> minkowski_dot(ComplexFourVector const& a, ComplexFourVector const& b)
{
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

[[nodiscard]] inline std::complex<double> minkowski_dot(ComplexFourVector const& a, FourVector const& b)
{
    return minkowski_dot(a, ComplexFourVector(b));
}

[[nodiscard]] inline std::complex<double> minkowski_dot(FourVector const& a, ComplexFourVector const& b)
{
    return minkowski_dot(ComplexFourVector(a), b);
}

}  // namespace ensb
