#pragma once

#include <functional>
#include <vector>

#include "diskfn/arc_set.hpp"
#include "diskfn/disk_point.hpp"

namespace diskfn {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive tanh-sinh integral of g over [a, b], split at the given interior
/// breakpoints.  Error is the sum of the per-piece estimates.
QuadResult integrate(const std::function<double(double)>& g, double a, double b, double tol,
                     std::vector<double> breakpoints = {});

/// Breakpoints t +- s 4^j (clipped to [a, b]) that resolve a Poisson peak of
/// width s centred at t, plus the peak itself.
std::vector<double> peak_breakpoints(double a, double b, double center, double width);

/// int_E g(t) P_z(e^{it}) dt/(2 pi).  The peak of P_z is resolved in the
/// offset variable t - arg z, so z may sit far closer to the circle than the
/// spacing of doubles near arg z.
QuadResult poisson_integral(const std::function<double(double)>& g, const DiskPoint& z,
                            const ArcSet& e, double tol,
                            const std::vector<double>& extra_breakpoints = {});

/// int_E g(t) Q_z(e^{it}) dt/(2 pi) with Q_z(zeta) = 2 Im(conj(zeta) z)/|zeta - z|^2,
/// the imaginary part of the Herglotz kernel.
QuadResult conjugate_poisson_integral(const std::function<double(double)>& g, const DiskPoint& z,
                                      const ArcSet& e, double tol,
                                      const std::vector<double>& extra_breakpoints = {});

}  // namespace diskfn
