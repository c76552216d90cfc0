#pragma once

#include <utility>
#include <vector>

#include "diskfn/disk_point.hpp"

namespace diskfn {

struct Atom {
    BoundaryPoint point;
    double mass = 0.0;
};

/// Finite positive atomic measure on the circle.
class AtomicMeasure {
public:
    AtomicMeasure() = default;
    explicit AtomicMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    double total_mass() const;
    AtomicMeasure scaled(double factor) const;

private:
    std::vector<Atom> atoms_;
};

/// S(z) = exp(-sum_j m_j (zeta_j + z)/(zeta_j - z)).
cplx singular_eval(const AtomicMeasure& mu, const DiskPoint& z);
cplx singular_eval(const AtomicMeasure& mu, cplx z);
/// S'/S(z) = -sum_j 2 zeta_j m_j/(zeta_j - z)^2.
cplx singular_log_derivative(const AtomicMeasure& mu, const DiskPoint& z);
cplx singular_log_derivative(const AtomicMeasure& mu, cplx z);
/// |S'(zeta)| = sum_j 2 m_j/|zeta_j - zeta|^2 at a boundary point off the atoms.
double singular_boundary_derivative_modulus(const AtomicMeasure& mu, const BoundaryPoint& zeta);

}  // namespace diskfn
