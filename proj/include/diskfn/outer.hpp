#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "diskfn/arc_set.hpp"
#include "diskfn/disk_point.hpp"
#include "diskfn/quadrature.hpp"

namespace diskfn {

/// Boundary modulus h sampled at theta_j = (j + 1/2) 2 pi / N.
///
/// Samples are stored as logs clamped below at `log_floor`.  A grid built
/// from a log-profile keeps the profile, so it can be refined and evaluated
/// between nodes exactly; otherwise values between nodes come from periodic
/// cubic interpolation of the log samples.
class BoundaryModulusGrid {
public:
    using LogProfile = std::function<double(double)>;

    static constexpr double default_floor = 1e-300;

    static BoundaryModulusGrid from_values(const std::vector<double>& h, double floor = default_floor);
    static BoundaryModulusGrid from_log_values(std::vector<double> log_h, double log_floor);
    static BoundaryModulusGrid from_log_profile(LogProfile log_h, std::size_t n, double log_floor);
    static BoundaryModulusGrid constant(double value, std::size_t n = 64);

    std::size_t size() const { return log_samples_.size(); }
    double angle(std::size_t j) const;
    double log_floor() const { return log_floor_; }
    const std::vector<double>& log_samples() const { return log_samples_; }
    double value(std::size_t j) const;
    double max_value() const;
    bool has_profile() const { return static_cast<bool>(profile_); }

    /// Same data on n points (n a power of two); needs a profile unless n
    /// divides the current size.
    BoundaryModulusGrid resampled(std::size_t n) const;
    /// log h at an arbitrary angle (profile or interpolation), clamped.
    double log_value_at(double angle) const;

    void write_csv(std::ostream& out) const;
    /// Reads "angle,value" lines; the angles must form the half-step grid.
    static BoundaryModulusGrid read_csv(std::istream& in, double floor = default_floor);

private:
    std::vector<double> log_samples_;
    double log_floor_ = 0.0;
    LogProfile profile_;
};

struct OuterValue {
    cplx value;
    double quadrature_error = 0.0;
    std::size_t grid_size = 0;
};

/// F(z) by trapezoid Herglotz sums.  The error estimate compares the grid with
/// its every-other subgrid; grids with a profile are doubled until the
/// estimate is below tol or max_grid is reached.
OuterValue outer_eval(const BoundaryModulusGrid& grid, const DiskPoint& z, double tol = 1e-10,
                      std::size_t max_grid = std::size_t{1} << 16);
/// F'/F(z) = int 2 zeta/(zeta - z)^2 log h dm, same quadrature.
cplx outer_log_derivative(const BoundaryModulusGrid& grid, const DiskPoint& z);

/// Outer function through its Taylor series log F(z) = sum c_n z^n, with the
/// c_n taken from the FFT of the log samples.  Valid on the closed disk.
class OuterFunction {
public:
    OuterFunction() = default;
    explicit OuterFunction(const BoundaryModulusGrid& grid);

    bool trivial() const { return coeffs_.empty(); }
    std::size_t terms() const { return coeffs_.size(); }
    const std::vector<cplx>& coefficients() const { return coeffs_; }

    cplx log_value(cplx z) const;
    cplx value(cplx z) const { return std::exp(log_value(z)); }
    /// F'/F(z).
    cplx log_derivative(cplx z) const;
    /// (log F(z), F'/F(z)) in one Horner pass.
    std::pair<cplx, cplx> log_value_and_derivative(cplx z) const;
    double value_at_zero() const;

private:
    std::vector<cplx> coeffs_;
};

/// G_E(z) = exp(int_E (zeta+z)/(zeta-z) log h dm) by adaptive quadrature of
/// the log modulus over E.
struct RestrictedOuterValue {
    cplx value;
    double log_modulus = 0.0;
    double quadrature_error = 0.0;
};
RestrictedOuterValue restricted_outer_eval(const BoundaryModulusGrid& log_modulus, const ArcSet& e,
                                           const DiskPoint& z, double tol = 1e-10);
/// Modulus-only variant (no conjugate integral).
RestrictedOuterValue restricted_outer_modulus(const BoundaryModulusGrid& log_modulus,
                                              const ArcSet& e, const DiskPoint& z,
                                              double tol = 1e-10);

struct DefectValue {
    double defect = 0.0;
    double quadrature_error = 0.0;
};

/// int log|g| dw_z - log|g(z)|.
DefectValue outerness_defect(const BoundaryModulusGrid& boundary_log_modulus, cplx value_at_z,
                             const DiskPoint& z, double tol = 1e-10);
/// Same with the boundary log-modulus given as a function and breakpoints at
/// its singularities.
DefectValue outerness_defect(const std::function<double(double)>& boundary_log_modulus,
                             const std::vector<double>& singular_angles, double log_value_at_z,
                             const DiskPoint& z, double tol = 1e-10);

}  // namespace diskfn
