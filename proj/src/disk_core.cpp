#include "diskfn/disk_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diskfn/blaschke.hpp"

namespace diskfn {

cplx mobius_to_origin(const DiskPoint& w, const DiskPoint& z) {
    return difference(w, z) / one_minus_conj_product(w, z);
}

cplx mobius_to_origin(const DiskPoint& w, const BoundaryPoint& zeta) {
    return -difference(zeta, w) / one_minus_conj_product(w, zeta);
}

cplx mobius_to_origin(cplx w, cplx z) {
    if (!(std::abs(w) < 1.0)) {
        throw DomainError("mobius_to_origin requires |w| < 1");
    }
    return (w - z) / (1.0 - std::conj(w) * z);
}

double one_minus_rho2(const DiskPoint& z, const DiskPoint& w) {
    const double den = std::norm(one_minus_conj_product(w, z));
    return z.one_minus_abs2() * w.one_minus_abs2() / den;
}

double pseudo_hyperbolic_distance(const DiskPoint& z, const DiskPoint& w) {
    const double d = std::abs(difference(z, w));
    if (d == 0.0) {
        return 0.0;
    }
    return std::min(d / std::abs(one_minus_conj_product(w, z)), std::nextafter(1.0, 0.0));
}

double poisson_kernel(const DiskPoint& z, const BoundaryPoint& zeta) {
    return z.one_minus_abs2() / std::norm(difference(zeta, z));
}

double poisson_kernel(const DiskPoint& z, double angle) {
    return poisson_kernel(z, BoundaryPoint(angle));
}

double harmonic_measure_arc(const DiskPoint& z, double a, double b) {
    const double len = b - a;
    if (!(len > 0.0)) {
        return 0.0;
    }
    if (len >= two_pi) {
        return 1.0;
    }
    // Angles are measured from arg z; the half-angle parities of the two
    // reductions are tracked so that y = sin(L/2) stays consistent with x.
    const double alpha = z.anchor();
    const double tau = z.offset_angle();
    const double delta = z.one_minus_abs();
    const double k = (2.0 - delta) / delta;  // (1+|z|)/(1-|z|)

    auto reduce = [&](double t, int& parity) {
        const double raw = t - alpha;
        const double rem = std::remainder(raw, two_pi);
        const long m = std::lround((raw - rem) / two_pi);
        parity = static_cast<int>(m & 1L);
        return rem - tau;
    };
    int pa = 0;
    int pb = 0;
    const double ua = reduce(a, pa);
    const double ub = reduce(b, pb);
    const double sign = ((pa + pb) % 2 == 0) ? 1.0 : -1.0;
    const double x = sign * (std::cos(0.5 * ua) * std::cos(0.5 * ub) / k +
                             k * std::sin(0.5 * ua) * std::sin(0.5 * ub));
    const double y = std::sin(0.5 * len);
    return std::clamp(std::atan2(y, x) / pi, 0.0, 1.0);
}

double harmonic_measure(const DiskPoint& z, const ArcSet& e) {
    if (e.is_full()) {
        return 1.0;
    }
    double total = 0.0;
    for (const Arc& a : e.arcs()) {
        total += harmonic_measure_arc(z, a.start, a.end);
    }
    return std::clamp(total, 0.0, 1.0);
}

double schwarz_pick_quotient(cplx f_value, cplx f_derivative, const DiskPoint& z) {
    const double fv2 = std::norm(f_value);
    if (!(fv2 < 1.0)) {
        throw DomainError("schwarz_pick_quotient requires |f(z)| < 1");
    }
    return std::abs(f_derivative) * z.one_minus_abs2() / (1.0 - fv2);
}

std::string to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::converged: return "converged";
        case SeriesVerdict::diverging: return "diverging";
        default: return "inconclusive";
    }
}

std::string to_string(LimitVerdict v) {
    switch (v) {
        case LimitVerdict::to_zero: return "to_zero";
        case LimitVerdict::bounded_away: return "bounded_away";
        default: return "inconclusive";
    }
}

SeriesReport series_verdict(const std::vector<double>& terms, double rel_tol) {
    SeriesReport rep;
    rep.partial_sums.reserve(terms.size());
    double s = 0.0;
    for (double t : terms) {
        s += t;
        rep.partial_sums.push_back(s);
    }
    rep.estimate = s;
    if (terms.empty() || s == 0.0) {
        rep.verdict = SeriesVerdict::converged;
        return rep;
    }
    if (terms.size() < 4) {
        return rep;
    }
    const std::size_t n = terms.size() / 2;
    const double s_quarter = rep.partial_sums[n / 2 - 1];
    const double s_n = rep.partial_sums[n - 1];
    const double s_2n = rep.partial_sums[2 * n - 1];
    if (s_n > 0.0 && s_2n / s_n > 1.5) {
        rep.verdict = SeriesVerdict::diverging;
        rep.tail_estimate = std::numeric_limits<double>::infinity();
        return rep;
    }
    const double d1 = s_n - s_quarter;
    const double d2 = s_2n - s_n;
    if (d2 <= 0.0) {
        rep.verdict = SeriesVerdict::converged;
        return rep;
    }
    if (d1 > 0.0) {
        const double rho = d2 / d1;
        if (rho < 1.0) {
            rep.tail_estimate = d2 * rho / (1.0 - rho);
            rep.estimate = s + rep.tail_estimate;
            if (rep.tail_estimate <= rel_tol * std::abs(s_2n)) {
                rep.verdict = SeriesVerdict::converged;
            }
            return rep;
        }
    }
    rep.tail_estimate = std::numeric_limits<double>::infinity();
    return rep;
}

LimitVerdict limit_verdict(const std::vector<double>& values) {
    const std::size_t m = values.size();
    if (m < 8) {
        return LimitVerdict::inconclusive;
    }
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = m / 4; i < m / 2; ++i) {
        a = std::max(a, std::abs(values[i]));
    }
    for (std::size_t i = m / 2; i < m; ++i) {
        b = std::max(b, std::abs(values[i]));
    }
    if (b < 1e-12 || b <= 0.75 * a) {
        return LimitVerdict::to_zero;
    }
    if (b >= 0.9 * a) {
        return LimitVerdict::bounded_away;
    }
    return LimitVerdict::inconclusive;
}

SeriesReport angular_derivative_sum(const BlaschkeSpec& seq, const BoundaryPoint& zeta,
                                    std::size_t n_terms, double rel_tol) {
    if (n_terms > seq.size()) {
        throw DomainError("angular_derivative_sum: not enough zeros available");
    }
    std::vector<double> terms;
    terms.reserve(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) {
        terms.push_back(poisson_kernel(seq.zero(i), zeta));
    }
    return series_verdict(terms, rel_tol);
}

}  // namespace diskfn
