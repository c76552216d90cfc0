#include "diskfn/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "diskfn/disk_core.hpp"

namespace diskfn {

namespace {

boost::math::quadrature::tanh_sinh<double>& integrator() {
    thread_local boost::math::quadrature::tanh_sinh<double> ts(12);
    return ts;
}

// Angle of z unwrapped next to [a, b].
double nearest_copy(double center, double a, double b) {
    const double mid = 0.5 * (a + b);
    return mid + std::remainder(center - mid, two_pi);
}

// The integration variable is u = t - c with c the copy of arg z nearest the
// arc, so the Poisson peak at u = 0 is resolved at the scale 1 - |z| even
// when that is far below the spacing of doubles near c.
using Weight = std::function<double(double, double)>;

QuadResult weighted_integral(const std::function<double(double)>& g, const Weight& weight,
                             const DiskPoint& z, const ArcSet& e, double tol,
                             const std::vector<double>& extra) {
    QuadResult total;
    if (e.is_empty()) {
        return total;
    }
    const double width = z.one_minus_abs();
    // the full circle is cut opposite the peak rather than at angle 0
    const std::vector<Arc> arcs = e.is_full() ? std::vector<Arc>{{z.arg() - pi, z.arg() + pi}} : e.arcs();
    for (const Arc& arc : arcs) {
        const double c = e.is_full() ? z.arg() : nearest_copy(z.arg(), arc.start, arc.end);
        const double lo = e.is_full() ? -pi : arc.start - c;
        const double hi = e.is_full() ? pi : arc.end - c;
        std::vector<double> bps;
        for (double copy : {-two_pi, 0.0, two_pi}) {
            std::vector<double> more = peak_breakpoints(lo, hi, copy, width);
            bps.insert(bps.end(), more.begin(), more.end());
        }
        // singular points get their own geometric refinement
        for (double x : extra) {
            const double u = std::remainder(x - c, two_pi);
            for (double s : {-two_pi, 0.0, two_pi}) {
                std::vector<double> more = peak_breakpoints(lo, hi, u + s, 1e-10);
                bps.insert(bps.end(), more.begin(), more.end());
            }
        }
        const QuadResult r =
            integrate([&](double u) { return g(c + u) * weight(c, u); }, lo, hi, tol, bps);
        total.value += r.value;
        total.error += r.error;
    }
    total.value /= two_pi;
    total.error /= two_pi;
    return total;
}

cplx boundary_minus(double c, double u, const DiskPoint& z) {
    return difference(Anchored{c, expm1i(u)}, anchored_form(z));
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& g, double a, double b, double tol,
                     std::vector<double> breakpoints) {
    QuadResult out;
    if (!(b > a)) {
        return out;
    }
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> pts;
    for (double x : breakpoints) {
        if (x < a || x > b) {
            continue;
        }
        if (pts.empty() || x > pts.back()) {
            pts.push_back(x);
        }
    }
    auto& ts = integrator();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double width = pts[i + 1] - pts[i];
        if (width < 1e-12 * std::max(std::abs(pts[i]), std::abs(pts[i + 1]))) {
            // too narrow for tanh-sinh nodes to separate from the ends
            out.value += g(pts[i] + 0.5 * width) * width;
            continue;
        }
        double err = 0.0;
        double l1 = 0.0;
        std::size_t levels = 0;
        // Map to [-1, 1] ourselves: boost misreports the error on narrow pieces,
        // and the complement argument keeps nodes distinct from the ends.
        const double lo = pts[i];
        const double hi = pts[i + 1];
        const double hw = 0.5 * width;
        auto g2 = [&](double x, double xc) {
            const double t = x < 0.0 ? lo - hw * xc : hi - hw * xc;
            return g(std::clamp(t, std::nextafter(lo, hi), std::nextafter(hi, lo))) * hw;
        };
        const double v = ts.integrate(g2, tol, &err, &l1, &levels);
        out.value += v;
        out.error += err;
    }
    return out;
}

std::vector<double> peak_breakpoints(double a, double b, double center, double width) {
    std::vector<double> out;
    if (center > a && center < b) {
        out.push_back(center);
    }
    double s = std::max(width, 1e-15 * std::max(1.0, std::abs(center)));
    for (; s < (b - a); s *= 4.0) {
        for (double x : {center - s, center + s}) {
            if (x > a && x < b) {
                out.push_back(x);
            }
        }
    }
    return out;
}

QuadResult poisson_integral(const std::function<double(double)>& g, const DiskPoint& z,
                            const ArcSet& e, double tol, const std::vector<double>& extra_breakpoints) {
    const double num = z.one_minus_abs2();
    return weighted_integral(
        g, [&](double c, double u) { return num / std::norm(boundary_minus(c, u, z)); }, z, e, tol,
        extra_breakpoints);
}

QuadResult conjugate_poisson_integral(const std::function<double(double)>& g, const DiskPoint& z,
                                      const ArcSet& e, double tol,
                                      const std::vector<double>& extra_breakpoints) {
    auto weight = [&](double c, double u) {
        // Im(conj(zeta) z) = -Im(conj(zeta) (zeta - z))
        const cplx d = boundary_minus(c, u, z);
        const double im = -(std::polar(1.0, -(c + u)) * d).imag();
        return 2.0 * im / std::norm(d);
    };
    return weighted_integral(g, weight, z, e, tol, extra_breakpoints);
}

}  // namespace diskfn
