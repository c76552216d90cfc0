#include "diskfn/blaschke.hpp"

#include <cmath>
#include <limits>

#include "diskfn/disk_core.hpp"

namespace diskfn {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// |a|/a, with the convention -1 at a = 0.
cplx unit_phase(const DiskPoint& a) {
    if (a.one_minus_abs() >= 1.0) {
        return {-1.0, 0.0};
    }
    return std::polar(1.0, -a.arg());
}

cplx unit_phase(cplx a) {
    const double r = std::abs(a);
    return r == 0.0 ? cplx{-1.0, 0.0} : std::conj(a) / r;
}

cplx factor(const DiskPoint& a, const DiskPoint& z) {
    return unit_phase(a) * difference(a, z) / one_minus_conj_product(a, z);
}

cplx factor_derivative(const DiskPoint& a, const DiskPoint& z) {
    const cplx den = one_minus_conj_product(a, z);
    return -unit_phase(a) * a.one_minus_abs2() / (den * den);
}

cplx factor(cplx a, cplx z) { return unit_phase(a) * (a - z) / (1.0 - std::conj(a) * z); }

cplx factor_derivative(cplx a, cplx z) {
    const cplx den = 1.0 - std::conj(a) * z;
    return -unit_phase(a) * (1.0 - std::norm(a)) / (den * den);
}

// Number of leading zeros needed at z, and the resulting truncation bound.
std::size_t truncation_point(const BlaschkeSpec& spec, const DiskPoint& z, double tol,
                             double& bound) {
    if (spec.is_finite() || !spec.tail_verified()) {
        bound = spec.is_finite() ? 0.0 : inf;
        return spec.size();
    }
    const double scale = (2.0 - z.one_minus_abs()) / z.one_minus_abs();
    auto tail_bound = [&](std::size_t n) { return std::expm1(scale * spec.blaschke_tail(n)); };
    std::size_t lo = 0;
    std::size_t hi = spec.size();
    if (!(tail_bound(hi) < tol)) {
        bound = tail_bound(hi);
        throw TruncationError("blaschke_eval: tail bound not reachable with available zeros",
                              bound);
    }
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (tail_bound(mid) < tol) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    bound = tail_bound(lo);
    return lo;
}

template <class Pt, class Z>
cplx derivative_product_rule(const std::vector<Pt>& zeros, std::size_t n, Z z) {
    // prefix/suffix products keep this finite at the zeros
    std::vector<cplx> vals(n);
    for (std::size_t j = 0; j < n; ++j) {
        vals[j] = factor(zeros[j], z);
    }
    std::vector<cplx> suffix(n + 1, cplx{1.0, 0.0});
    for (std::size_t j = n; j-- > 0;) {
        suffix[j] = suffix[j + 1] * vals[j];
    }
    cplx prefix{1.0, 0.0};
    cplx sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        sum += factor_derivative(zeros[j], z) * prefix * suffix[j + 1];
        prefix *= vals[j];
    }
    return sum;
}

}  // namespace

BlaschkeSpec BlaschkeSpec::finite(std::vector<DiskPoint> zeros, std::vector<BoundaryPoint> limit_points) {
    BlaschkeSpec s;
    s.zeros_ = std::move(zeros);
    s.limits_ = std::move(limit_points);
    return s;
}

BlaschkeSpec BlaschkeSpec::generated(std::string name, const std::function<DiskPoint(std::size_t)>& gen,
                                     std::size_t count, std::vector<BoundaryPoint> limit_points,
                                     TailBound blaschke_tail, TailBound angular_tail) {
    BlaschkeSpec s;
    s.name_ = std::move(name);
    s.finite_ = false;
    s.zeros_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        s.zeros_.push_back(gen(i));
    }
    s.limits_ = std::move(limit_points);
    s.blaschke_tail_ = std::move(blaschke_tail);
    s.angular_tail_ = std::move(angular_tail);
    return s;
}

double BlaschkeSpec::blaschke_tail(std::size_t n) const {
    if (!finite_) {
        return blaschke_tail_ ? blaschke_tail_(n + shift_) : inf;
    }
    double s = 0.0;
    for (std::size_t j = n; j < zeros_.size(); ++j) {
        s += zeros_[j].one_minus_abs();
    }
    return s;
}

double BlaschkeSpec::angular_tail(std::size_t n) const {
    if (!finite_) {
        return angular_tail_ ? angular_tail_(n + shift_) : inf;
    }
    double s = 0.0;
    for (std::size_t j = n; j < zeros_.size(); ++j) {
        s += poisson_kernel(zeros_[j], BoundaryPoint(0.0));
    }
    return s;
}

std::vector<double> BlaschkeSpec::blaschke_partial_sums() const {
    std::vector<double> out;
    out.reserve(zeros_.size());
    double s = 0.0;
    for (const DiskPoint& a : zeros_) {
        s += a.one_minus_abs();
        out.push_back(s);
    }
    return out;
}

BlaschkeSpec BlaschkeSpec::prefix(std::size_t n) const {
    if (n > zeros_.size()) {
        throw DomainError("BlaschkeSpec::prefix: not enough zeros");
    }
    return finite(std::vector<DiskPoint>(zeros_.begin(), zeros_.begin() + static_cast<long>(n)),
                  n == zeros_.size() && finite_ ? limits_ : std::vector<BoundaryPoint>{});
}

BlaschkeSpec BlaschkeSpec::suffix(std::size_t n) const {
    if (n > zeros_.size()) {
        throw DomainError("BlaschkeSpec::suffix: not enough zeros");
    }
    BlaschkeSpec s = *this;
    s.zeros_.erase(s.zeros_.begin(), s.zeros_.begin() + static_cast<long>(n));
    s.shift_ += n;
    return s;
}

BlaschkeValue blaschke_eval(const BlaschkeSpec& spec, const DiskPoint& z, double tol) {
    BlaschkeValue out;
    const std::size_t n = truncation_point(spec, z, tol, out.error_bound);
    cplx v{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        v *= factor(spec.zero(j), z);
    }
    out.value = v;
    out.terms_used = n;
    return out;
}

cplx blaschke_eval_finite(const std::vector<DiskPoint>& zeros, cplx z) {
    cplx v{1.0, 0.0};
    for (const DiskPoint& a : zeros) {
        v *= factor(a.value(), z);
    }
    return v;
}

cplx blaschke_log_derivative(const BlaschkeSpec& spec, const DiskPoint& z) {
    double bound = 0.0;
    const std::size_t n = truncation_point(spec, z, 1e-12, bound);
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const DiskPoint& a = spec.zero(j);
        const cplx d = difference(z, a);
        if (std::abs(d) <= 1e-12) {
            throw PoleError("blaschke_log_derivative: z is at a zero");
        }
        s += a.one_minus_abs2() / (d * one_minus_conj_product(a, z));
    }
    return s;
}

cplx blaschke_log_derivative_finite(const std::vector<DiskPoint>& zeros, cplx z) {
    cplx s{0.0, 0.0};
    for (const DiskPoint& a : zeros) {
        const cplx av = a.value();
        const cplx d = z - av;
        if (std::abs(d) <= 1e-12) {
            throw PoleError("blaschke_log_derivative: z is at a zero");
        }
        s += a.one_minus_abs2() / (d * (1.0 - std::conj(av) * z));
    }
    return s;
}

cplx blaschke_derivative(const BlaschkeSpec& spec, const DiskPoint& z, double tol) {
    double bound = 0.0;
    const std::size_t n = truncation_point(spec, z, tol, bound);
    return derivative_product_rule(spec.zeros(), n, z);
}

cplx blaschke_derivative_finite(const std::vector<DiskPoint>& zeros, cplx z) {
    std::vector<cplx> vals;
    vals.reserve(zeros.size());
    for (const DiskPoint& a : zeros) {
        vals.push_back(a.value());
    }
    return derivative_product_rule(vals, vals.size(), z);
}

double blaschke_boundary_derivative_modulus(const BlaschkeSpec& spec, const BoundaryPoint& zeta,
                                            std::size_t n) {
    n = std::min(n, spec.size());
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        s += poisson_kernel(spec.zero(j), zeta);
    }
    return s;
}

BlaschkeSpec tangential_generator(double p, std::size_t count) {
    if (!(p > 1.0)) {
        throw DomainError("tangential_generator needs p > 1");
    }
    const double r_min = 1.0 - std::pow(2.0, -p);
    auto gen = [p](std::size_t i) {
        const double n = static_cast<double>(i + 2);
        return DiskPoint::polar(std::pow(n, -p), 1.0 / n);
    };
    auto btail = [p](std::size_t big_n) {
        return std::pow(static_cast<double>(big_n + 1), 1.0 - p) / (p - 1.0);
    };
    BlaschkeSpec::TailBound atail = [p, r_min](std::size_t big_n) {
        if (!(p > 3.0)) {
            return inf;
        }
        return pi * pi / (2.0 * r_min) * std::pow(static_cast<double>(big_n + 1), 3.0 - p) / (p - 3.0);
    };
    return BlaschkeSpec::generated("tangential(p=" + std::to_string(p) + ")", gen, count,
                                   {BoundaryPoint(0.0)}, btail, atail);
}

BlaschkeSpec paired_tangential_generator(double p, std::size_t count) {
    if (!(p > 1.0)) {
        throw DomainError("paired_tangential_generator needs p > 1");
    }
    const double r_min = 1.0 - std::pow(2.0, -p);
    auto gen = [p](std::size_t i) {
        const double n = static_cast<double>(i / 2 + 2);
        const double delta = std::pow(n, -p);
        const double angle = 1.0 / n + ((i % 2 == 1) ? delta : 0.0);
        return DiskPoint::polar(delta, angle);
    };
    auto btail = [p](std::size_t big_n) {
        return 2.0 * std::pow(static_cast<double>(big_n / 2 + 1), 1.0 - p) / (p - 1.0);
    };
    BlaschkeSpec::TailBound atail = [p, r_min](std::size_t big_n) {
        if (!(p > 3.0)) {
            return inf;
        }
        return pi * pi / r_min * std::pow(static_cast<double>(big_n / 2 + 1), 3.0 - p) / (p - 3.0);
    };
    return BlaschkeSpec::generated("paired-tangential(p=" + std::to_string(p) + ")", gen, count,
                                   {BoundaryPoint(0.0)}, btail, atail);
}

BlaschkeSpec radial_geometric(std::size_t count) {
    auto gen = [](std::size_t i) { return DiskPoint::polar(std::ldexp(1.0, -static_cast<int>(i + 1)), 0.0); };
    auto btail = [](std::size_t big_n) { return std::ldexp(1.0, -static_cast<int>(big_n)); };
    return BlaschkeSpec::generated("radial-geometric", gen, count, {BoundaryPoint(0.0)}, btail);
}

BlaschkeSpec radial_superexponential(std::size_t count) {
    auto gen = [](std::size_t i) {
        const double n = static_cast<double>(i + 1);
        return DiskPoint::polar(std::exp(-n * std::log(n + 1.0)), 0.0);
    };
    auto btail = [](std::size_t big_n) {
        const double n = static_cast<double>(big_n + 1);
        return 2.0 * std::exp(-n * std::log(n + 1.0));
    };
    return BlaschkeSpec::generated("radial-thin", gen, count, {BoundaryPoint(0.0)}, btail);
}

}  // namespace diskfn
