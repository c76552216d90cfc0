#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diskfn/arc_set.hpp"
#include "diskfn/disk_point.hpp"

namespace diskfn {

class BlaschkeSpec;

/// phi_w(z) = (w - z)/(1 - conj(w) z).
cplx mobius_to_origin(const DiskPoint& w, const DiskPoint& z);
cplx mobius_to_origin(const DiskPoint& w, const BoundaryPoint& zeta);
/// Plain complex version for points that need not be DiskPoints (|w| < 1).
cplx mobius_to_origin(cplx w, cplx z);

double pseudo_hyperbolic_distance(const DiskPoint& z, const DiskPoint& w);
/// 1 - rho(z, w)^2 = (1-|z|^2)(1-|w|^2)/|1 - conj(w) z|^2, without cancellation.
double one_minus_rho2(const DiskPoint& z, const DiskPoint& w);

/// P_z(zeta) = (1 - |z|^2)/|zeta - z|^2.
double poisson_kernel(const DiskPoint& z, const BoundaryPoint& zeta);
double poisson_kernel(const DiskPoint& z, double angle);

/// Harmonic measure of the counterclockwise arc [a, b] seen from z (closed form).
double harmonic_measure_arc(const DiskPoint& z, double a, double b);
double harmonic_measure(const DiskPoint& z, const ArcSet& e);

/// |f'(z)| (1 - |z|^2)/(1 - |f(z)|^2).
double schwarz_pick_quotient(cplx f_value, cplx f_derivative, const DiskPoint& z);

enum class SeriesVerdict { converged, diverging, inconclusive };
enum class LimitVerdict { to_zero, bounded_away, inconclusive };

std::string to_string(SeriesVerdict v);
std::string to_string(LimitVerdict v);

struct SeriesReport {
    std::vector<double> partial_sums;
    SeriesVerdict verdict = SeriesVerdict::inconclusive;
    double estimate = 0.0;       // last partial sum plus tail estimate
    double tail_estimate = 0.0;  // infinity when diverging
};

/// Doubling protocol on nonnegative terms: S_2n/S_n > 1.5 means diverging;
/// a geometric extrapolation of the block increments below rel_tol * S_2n
/// means converged; anything else is inconclusive.
SeriesReport series_verdict(const std::vector<double>& terms, double rel_tol = 1e-2);

/// Limit of a sequence of values: compares the largest magnitude over
/// (M/4, M/2] with the one over (M/2, M].
LimitVerdict limit_verdict(const std::vector<double>& values);

/// Partial sums of sum_n (1 - |z_n|^2)/|zeta - z_n|^2 with a series verdict.
SeriesReport angular_derivative_sum(const BlaschkeSpec& seq, const BoundaryPoint& zeta,
                                    std::size_t n_terms, double rel_tol = 1e-2);

}  // namespace diskfn
