#pragma once

#include <vector>

#include "diskfn/types.hpp"

namespace diskfn {

/// Polynomial with coefficients in ascending degree.
struct PolySpec {
    std::vector<cplx> coefficients;

    PolySpec() = default;
    explicit PolySpec(std::vector<cplx> c);
    /// Monic polynomial with the given roots.
    static PolySpec from_roots(const std::vector<cplx>& roots);

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    cplx operator()(cplx z) const;
    PolySpec derivative() const;
    /// sum |c_k| |z|^k, the natural scale for residuals at z.
    double scale_at(cplx z) const;
};

PolySpec operator*(const PolySpec& a, const PolySpec& b);
PolySpec operator-(const PolySpec& a, const PolySpec& b);
PolySpec operator+(const PolySpec& a, const PolySpec& b);

/// Drops leading coefficients below rel * max|c|.
PolySpec trimmed(const PolySpec& p, double rel = 1e-14);

/// All roots with multiplicity, sorted by real then imaginary part.
/// Aberth-Ehrlich iteration with Newton polish; companion-matrix eigenvalues
/// as fallback.  Throws ConvergenceError carrying the best roots found.
std::vector<cplx> poly_roots(const PolySpec& p);

}  // namespace diskfn
