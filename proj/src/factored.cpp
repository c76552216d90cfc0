#include "diskfn/factored.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "json.hpp"

#include "diskfn/disk_core.hpp"

namespace diskfn {

FactoredFunction::FactoredFunction(BlaschkeSpec b, AtomicMeasure s, BoundaryModulusGrid outer,
                                   double truncation_tol, bool unit_norm)
    : b_(std::move(b)), s_(std::move(s)), grid_(std::move(outer)), tol_(truncation_tol), unit_norm_(unit_norm) {
    if (!(tol_ > 0.0)) {
        throw DomainError("FactoredFunction: truncation tolerance must be positive");
    }
    if (unit_norm_) {
        for (double l : grid_.log_samples()) {
            if (l > 0.0) {
                throw DomainError("FactoredFunction: unit-norm flag needs outer samples <= 1");
            }
        }
    }
    outer_ = OuterFunction(grid_);
}

nlohmann::json FactoredFunction::to_json() const {
    nlohmann::json j;
    nlohmann::json zeros = nlohmann::json::array();
    for (const DiskPoint& a : b_.zeros()) {
        zeros.push_back({{"re", a.re()}, {"im", a.im()}, {"one_minus_abs", a.one_minus_abs()}, {"arg", a.arg()}});
    }
    j["blaschke"] = {{"name", b_.name()}, {"finite", b_.is_finite()}, {"zeros", zeros}};
    nlohmann::json limits = nlohmann::json::array();
    for (const BoundaryPoint& p : b_.declared_limit_points()) {
        limits.push_back(p.angle());
    }
    j["blaschke"]["declared_limit_points"] = limits;
    nlohmann::json atoms = nlohmann::json::array();
    for (const Atom& a : s_.atoms()) {
        atoms.push_back({{"angle", a.point.angle()}, {"mass", a.mass}});
    }
    j["atoms"] = atoms;
    j["outer_grid"] = {{"size", grid_.size()}, {"log_floor", grid_.log_floor()}, {"has_profile", grid_.has_profile()}};
    j["truncation_tol"] = tol_;
    j["unit_norm"] = unit_norm_;
    return j;
}

FactoredValue factored_eval(const FactoredFunction& f, const DiskPoint& z) {
    const BlaschkeValue bv = blaschke_eval(f.blaschke(), z, f.truncation_tol());
    const cplx db = blaschke_derivative(f.blaschke(), z, f.truncation_tol());
    const cplx s = singular_eval(f.singular(), z);
    const cplx ds_over_s = singular_log_derivative(f.singular(), z);
    const auto [log_f, df_over_f] = f.outer().log_value_and_derivative(z.value());
    const cplx outer = std::exp(log_f);
    FactoredValue out;
    out.value = bv.value * s * outer;
    out.derivative = s * outer * (db + bv.value * (ds_over_s + df_over_f));
    out.error_bound = bv.error_bound;
    return out;
}

BoundaryValue factored_boundary(const FactoredFunction& f, const BoundaryPoint& zeta) {
    const BlaschkeSpec& b = f.blaschke();
    const cplx z = zeta.value();
    const double theta_prime = blaschke_boundary_derivative_modulus(b, zeta) +
                               singular_boundary_derivative_modulus(f.singular(), zeta);
    const auto [log_f, df_over_f] = f.outer().log_value_and_derivative(z);
    const cplx outer = std::exp(log_f);
    BoundaryValue out;
    out.value = blaschke_eval_finite(b.zeros(), z) * singular_eval(f.singular(), z) * outer;
    out.derivative_modulus = std::abs(outer) * std::abs(theta_prime + z * df_over_f);
    if (!b.is_finite()) {
        double bound = std::numeric_limits<double>::infinity();
        const double t = zeta.angle();
        // lower right quarter circle: P_{z_n}(zeta) <= (pi^2/2) P_{z_n}(1) for Im z_n >= 0
        if (t >= 1.5 * pi && b.has_angular_tail()) {
            bound = 0.5 * pi * pi * b.angular_tail(b.size());
        }
        // away from the limit points, once the tail sits within half the distance
        for (const BoundaryPoint& lim : b.declared_limit_points()) {
            const double dist = std::abs(expm1i(t - lim.angle()));
            if (b.size() > 0 && dist > 0.0 &&
                std::abs(difference(lim, b.zero(b.size() - 1))) <= 0.5 * dist) {
                bound = std::min(bound, 8.0 * b.blaschke_tail(b.size()) / (dist * dist));
            }
        }
        out.derivative_error = std::abs(outer) * bound;
    }
    return out;
}

cplx radial_derivative_limit(const FactoredFunction& f, const BoundaryPoint& zeta, double h) {
    const cplx d1 = factored_eval(f, DiskPoint::polar(h, zeta.angle())).derivative;
    const cplx d2 = factored_eval(f, DiskPoint::polar(2.0 * h, zeta.angle())).derivative;
    return 2.0 * d1 - d2;
}

BoundaryModulusGrid fprime_boundary_grid(const FactoredFunction& f, std::size_t n) {
    auto fp = std::make_shared<const FactoredFunction>(f);
    auto profile = [fp](double t) {
        const double m = factored_boundary(*fp, BoundaryPoint(t)).derivative_modulus;
        return m > 0.0 ? std::log(m) : -std::numeric_limits<double>::infinity();
    };
    return BoundaryModulusGrid::from_log_profile(profile, n, std::log(BoundaryModulusGrid::default_floor));
}

}  // namespace diskfn
