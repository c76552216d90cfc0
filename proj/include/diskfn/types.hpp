#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskfn {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Input outside the domain of an operation (|z| >= 1, empty arc list, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested at (or numerically at) a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An infinite product or series could not be truncated to the requested
/// tolerance with the zeros that are available.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved_bound_(achieved_bound) {}
    double achieved_bound() const { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// A quadrature did not reach its tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}
    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

/// Iterative root finder failed; carries whatever roots it had.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<cplx> partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const std::vector<cplx>& partial() const { return partial_; }

private:
    std::vector<cplx> partial_;
};

}  // namespace diskfn
