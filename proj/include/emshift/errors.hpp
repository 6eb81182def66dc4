#pragma once

#include <stdexcept>
#include <string>

namespace emshift
{
//! Base class for every failure raised by a physics operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public DomainError
{
  public:
    QuadratureError(std::string const& what, double achieved_error)
        : DomainError(what), achieved_error_(achieved_error)
    {
    }

    double achieved_error() const noexcept { return achieved_error_; }

  private:
    double achieved_error_;
};

//! Step size collapsed during time integration.
class StiffnessError : public DomainError
{
  public:
    StiffnessError(std::string const& what, double time_reached)
        : DomainError(what), time_reached_(time_reached)
    {
    }

    double time_reached() const noexcept { return time_reached_; }

  private:
    double time_reached_;
};

//! Probability ladder too short for the distribution it should hold.
class TruncationError : public DomainError
{
  public:
    TruncationError(std::string const& what, long suggested_n_max)
        : DomainError(what), suggested_n_max_(suggested_n_max)
    {
    }

    long suggested_n_max() const noexcept { return suggested_n_max_; }

  private:
    long suggested_n_max_;
};

}  // namespace emshift
