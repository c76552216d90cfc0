#include "diskfn/poly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace diskfn {

namespace {

constexpr int max_iterations = 500;

// p(z) and p'(z) by Horner.
std::pair<cplx, cplx> eval_with_derivative(const std::vector<cplx>& c, cplx z) {
    cplx p{0.0, 0.0};
    cplx d{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) {
        d = d * z + p;
        p = p * z + c[k];
    }
    return {p, d};
}

bool residual_ok(const PolySpec& p, cplx r) {
    return std::abs(p(r)) <= 1e-9 * p.scale_at(r);
}

void polish(const PolySpec& p, std::vector<cplx>& roots) {
    for (cplx& r : roots) {
        for (int it = 0; it < 3; ++it) {
            const auto [v, d] = eval_with_derivative(p.coefficients, r);
            if (d == cplx{0.0, 0.0}) {
                break;
            }
            const cplx step = v / d;
            const cplx next = r - step;
            if (std::abs(p(next)) < std::abs(v)) {
                r = next;
            } else {
                break;
            }
        }
    }
}

bool aberth(const PolySpec& p, std::vector<cplx>& z) {
    const int n = p.degree();
    const auto& c = p.coefficients;
    // initial guesses on a circle of radius from the Fujiwara-type bound
    double radius = 0.0;
    for (int k = 0; k < n; ++k) {
        radius = std::max(radius, std::pow(std::abs(c[k] / c[n]), 1.0 / (n - k)));
    }
    radius = std::max(radius, 1e-3);
    z.resize(n);
    for (int k = 0; k < n; ++k) {
        z[k] = std::polar(radius, two_pi * k / n + 0.4);
    }
    for (int it = 0; it < max_iterations; ++it) {
        double biggest = 0.0;
        for (int k = 0; k < n; ++k) {
            const auto [v, d] = eval_with_derivative(c, z[k]);
            if (v == cplx{0.0, 0.0}) {
                continue;
            }
            const cplx ratio = v / d;
            cplx sum{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                if (j != k) {
                    sum += 1.0 / (z[k] - z[j]);
                }
            }
            const cplx step = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                return false;
            }
            z[k] -= step;
            biggest = std::max(biggest, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        if (biggest < 1e-15) {
            return true;
        }
    }
    // slow convergence at multiple roots is fine once residuals are small
    return std::all_of(z.begin(), z.end(), [&](cplx r) { return residual_ok(p, r); });
}

std::vector<cplx> companion_roots(const PolySpec& p) {
    const int n = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        m(i, i - 1) = 1.0;
    }
    for (int i = 0; i < n; ++i) {
        m(i, n - 1) = -p.coefficients[i] / p.coefficients[n];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = es.eigenvalues()[i];
    }
    return out;
}

}  // namespace

PolySpec::PolySpec(std::vector<cplx> c) : coefficients(std::move(c)) {
    if (coefficients.size() < 2 || coefficients.back() == cplx{0.0, 0.0}) {
        throw DomainError("PolySpec needs degree >= 1 and a nonzero leading coefficient");
    }
}

PolySpec PolySpec::from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{cplx{1.0, 0.0}};
    for (cplx r : roots) {
        std::vector<cplx> next(c.size() + 1, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    PolySpec p;
    p.coefficients = std::move(c);
    return p;
}

cplx PolySpec::operator()(cplx z) const { return eval_with_derivative(coefficients, z).first; }

PolySpec PolySpec::derivative() const {
    PolySpec d;
    if (coefficients.size() <= 1) {
        d.coefficients = {cplx{0.0, 0.0}};
        return d;
    }
    d.coefficients.resize(coefficients.size() - 1);
    for (std::size_t k = 1; k < coefficients.size(); ++k) {
        d.coefficients[k - 1] = static_cast<double>(k) * coefficients[k];
    }
    return d;
}

double PolySpec::scale_at(cplx z) const {
    const double r = std::abs(z);
    double s = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 0;) {
        s = s * r + std::abs(coefficients[k]);
    }
    return s;
}

PolySpec operator*(const PolySpec& a, const PolySpec& b) {
    PolySpec out;
    out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
            out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
        }
    }
    return out;
}

PolySpec operator+(const PolySpec& a, const PolySpec& b) {
    PolySpec out;
    out.coefficients.assign(std::max(a.coefficients.size(), b.coefficients.size()), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        out.coefficients[i] += a.coefficients[i];
    }
    for (std::size_t i = 0; i < b.coefficients.size(); ++i) {
        out.coefficients[i] += b.coefficients[i];
    }
    return out;
}

PolySpec operator-(const PolySpec& a, const PolySpec& b) {
    PolySpec nb = b;
    for (cplx& c : nb.coefficients) {
        c = -c;
    }
    return a + nb;
}

PolySpec trimmed(const PolySpec& p, double rel) {
    double biggest = 0.0;
    for (cplx c : p.coefficients) {
        biggest = std::max(biggest, std::abs(c));
    }
    PolySpec out = p;
    while (out.coefficients.size() > 1 && std::abs(out.coefficients.back()) <= rel * biggest) {
        out.coefficients.pop_back();
    }
    return out;
}

std::vector<cplx> poly_roots(const PolySpec& p) {
    if (p.degree() < 1 || p.coefficients.back() == cplx{0.0, 0.0}) {
        throw DomainError("poly_roots needs degree >= 1");
    }
    std::vector<cplx> roots;
    if (p.degree() == 1) {
        roots = {-p.coefficients[0] / p.coefficients[1]};
    } else if (!aberth(p, roots)) {
        roots = companion_roots(p);
    }
    polish(p, roots);
    if (!std::all_of(roots.begin(), roots.end(), [&](cplx r) { return residual_ok(p, r); })) {
        std::vector<cplx> alt = companion_roots(p);
        polish(p, alt);
        if (!std::all_of(alt.begin(), alt.end(), [&](cplx r) { return residual_ok(p, r); })) {
            throw ConvergenceError("poly_roots: residuals above tolerance", alt);
        }
        roots = std::move(alt);
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    return roots;
}

}  // namespace diskfn
