#pragma once

#include "json.hpp"

#include "diskfn/blaschke.hpp"
#include "diskfn/outer.hpp"
#include "diskfn/singular.hpp"

namespace diskfn {

/// f = B S F.  The outer factor is evaluated through its Taylor series
/// (OuterFunction); outer_eval stays available as the quadrature reference.
class FactoredFunction {
public:
    FactoredFunction(BlaschkeSpec b, AtomicMeasure s, BoundaryModulusGrid outer,
                     double truncation_tol = 1e-12, bool unit_norm = false);

    const BlaschkeSpec& blaschke() const { return b_; }
    const AtomicMeasure& singular() const { return s_; }
    const BoundaryModulusGrid& outer_grid() const { return grid_; }
    const OuterFunction& outer() const { return outer_; }
    double truncation_tol() const { return tol_; }
    bool unit_norm() const { return unit_norm_; }

    nlohmann::json to_json() const;

private:
    BlaschkeSpec b_;
    AtomicMeasure s_;
    BoundaryModulusGrid grid_;
    OuterFunction outer_;
    double tol_;
    bool unit_norm_;
};

struct FactoredValue {
    cplx value;
    cplx derivative;
    double error_bound = 0.0;  // Blaschke truncation only
};

/// (f(z), f'(z)) with f' = B'SF + B S'F + B S F'.
FactoredValue factored_eval(const FactoredFunction& f, const DiskPoint& z);

/// Boundary values at zeta for a finite Blaschke part (or a generated one
/// truncated to its materialized zeros), away from atoms.
struct BoundaryValue {
    cplx value;
    /// |f'(zeta)| = | |theta'(zeta)| F(zeta) + zeta F'(zeta) | with theta = B S.
    double derivative_modulus = 0.0;
    /// Upper bound on the error of derivative_modulus from the Blaschke tail.
    double derivative_error = 0.0;
};
BoundaryValue factored_boundary(const FactoredFunction& f, const BoundaryPoint& zeta);

/// f'(r zeta) for r -> 1 by Richardson extrapolation from r = 1 - h and 1 - 2h
/// (diagnostic cross-check for the boundary identity).
cplx radial_derivative_limit(const FactoredFunction& f, const BoundaryPoint& zeta, double h = 1e-6);

/// log|f'| on the circle as a grid with the exact boundary formula as profile.
BoundaryModulusGrid fprime_boundary_grid(const FactoredFunction& f, std::size_t n);

}  // namespace diskfn
