#include "diskfn/singular.hpp"

#include <algorithm>
#include <cmath>

namespace diskfn {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const Atom& a : atoms_) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
            throw DomainError("AtomicMeasure: masses must be positive and finite");
        }
    }
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& x, const Atom& y) { return x.point.angle() < y.point.angle(); });
    for (std::size_t i = 1; i < atoms_.size(); ++i) {
        if (atoms_[i].point.angle() == atoms_[i - 1].point.angle()) {
            throw DomainError("AtomicMeasure: atoms must sit at distinct angles");
        }
    }
}

double AtomicMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms_) {
        m += a.mass;
    }
    return m;
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
    std::vector<Atom> out = atoms_;
    for (Atom& a : out) {
        a.mass *= factor;
    }
    return AtomicMeasure(std::move(out));
}

cplx singular_eval(const AtomicMeasure& mu, const DiskPoint& z) {
    cplx expo{0.0, 0.0};
    const cplx zv = z.value();
    for (const Atom& a : mu.atoms()) {
        // zeta - z kept accurate near the circle
        const cplx d = difference(a.point, z);
        expo -= a.mass * (a.point.value() + zv) / d;
    }
    return std::exp(expo);
}

cplx singular_eval(const AtomicMeasure& mu, cplx z) {
    cplx expo{0.0, 0.0};
    for (const Atom& a : mu.atoms()) {
        const cplx zeta = a.point.value();
        expo -= a.mass * (zeta + z) / (zeta - z);
    }
    return std::exp(expo);
}

cplx singular_log_derivative(const AtomicMeasure& mu, const DiskPoint& z) {
    cplx s{0.0, 0.0};
    for (const Atom& a : mu.atoms()) {
        const cplx d = difference(a.point, z);
        s -= 2.0 * a.point.value() * a.mass / (d * d);
    }
    return s;
}

cplx singular_log_derivative(const AtomicMeasure& mu, cplx z) {
    cplx s{0.0, 0.0};
    for (const Atom& a : mu.atoms()) {
        const cplx zeta = a.point.value();
        s -= 2.0 * zeta * a.mass / ((zeta - z) * (zeta - z));
    }
    return s;
}

double singular_boundary_derivative_modulus(const AtomicMeasure& mu, const BoundaryPoint& zeta) {
    double s = 0.0;
    for (const Atom& a : mu.atoms()) {
        const double chord = std::abs(expm1i(zeta.angle() - a.point.angle()));
        s += 2.0 * a.mass / (chord * chord);
    }
    return s;
}

}  // namespace diskfn
