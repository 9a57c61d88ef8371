// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ensb {

//! Base of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Arguments outside the mathematical domain of an operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

//! A kinematic configuration where a formula has a vanishing denominator.
class SingularityError : public Error
{
  public:
    using Error::Error;
};

//! Requested evaluation lies outside the documented numerical capability.
class CapabilityError : public Error
{
  public:
    using Error::Error;
};

//! An iterative or adaptive procedure stopped before reaching its tolerance.
class ConvergenceError : public Error
{
  public:
    ConvergenceError(std::string const& what, double partial, double bound)
        : Error(what), partial_(partial), bound_(bound)
    {
    }

    //! Best available estimate when the procedure stopped.
    [[nodiscard]] double partial() const { return partial_; }
    //! Error bound achieved at that point.
    [[nodiscard]] double bound() const { return bound_; }

  private:
    double partial_;
    double bound_;
};

//! Invalid user-facing configuration. Carries every violated rule.
class ConfigError : public Error
{
  public:
    explicit ConfigError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations))
    {
    }

    [[nodiscard]] std::vector<std::string> const& violations() const { return violations_; }

  private:
    static std::string join(std::vector<std::string> const& v)
    {
        std::string out;
        for (auto const& s : v)
        {
            if (!out.empty())
                out += "; ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

}  // namespace ensb
