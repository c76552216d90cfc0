#include "diskfn/hull_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

#include "diskfn/disk_core.hpp"

namespace diskfn {

namespace {

constexpr double circle_band = 1e-9;

double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(cplx a, cplx b, cplx w) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) {
        return std::abs(w - a);
    }
    const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(w - (a + t * ab));
}

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

PolySpec blaschke_derivative_numerator(const std::vector<DiskPoint>& zeros) {
    const std::size_t n = zeros.size();
    PolySpec total;
    total.coefficients = {cplx{0.0, 0.0}};
    for (std::size_t j = 0; j < n; ++j) {
        PolySpec term;
        term.coefficients = {cplx{zeros[j].one_minus_abs2(), 0.0}};
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) {
                continue;
            }
            const cplx a = zeros[i].value();
            PolySpec lin;
            lin.coefficients = {-a, cplx{1.0, 0.0}};
            PolySpec lin2;
            lin2.coefficients = {cplx{1.0, 0.0}, -std::conj(a)};
            term = term * lin * lin2;
        }
        total = total + term;
    }
    return total;
}

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double radius) {
    std::vector<RootCluster> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) {
            continue;
        }
        RootCluster c{roots[i], 1};
        used[i] = true;
        cplx sum = roots[i];
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (!used[j] && std::abs(roots[j] - roots[i]) <= radius) {
                used[j] = true;
                sum += roots[j];
                ++c.multiplicity;
            }
        }
        c.center = sum / static_cast<double>(c.multiplicity);
        out.push_back(c);
    }
    return out;
}

CriticalPointReport blaschke_critical_points(const BlaschkeSpec& spec) {
    if (!spec.is_finite()) {
        throw DomainError("blaschke_critical_points needs a finite spec");
    }
    const std::size_t n = spec.size();
    if (n < 2) {
        throw DomainError("blaschke_critical_points needs degree >= 2");
    }
    const PolySpec num = trimmed(blaschke_derivative_numerator(spec.zeros()));
    CriticalPointReport rep;
    rep.at_infinity = static_cast<int>(2 * n - 2) - num.degree();
    std::vector<cplx> roots;
    if (num.degree() >= 1) {
        roots = poly_roots(PolySpec(num.coefficients));
    }
    std::vector<cplx> inside_values;
    for (cplx r : roots) {
        rep.residual_norms.push_back(std::abs(num(r)) / num.scale_at(r));
        const double m = std::abs(r);
        if (std::abs(m - 1.0) < circle_band) {
            rep.on_circle.emplace_back(std::arg(r));
        } else if (m < 1.0) {
            rep.in_disk.emplace_back(r);
            inside_values.push_back(r);
        } else {
            rep.outside.push_back(r);
        }
    }
    rep.in_disk_clusters = cluster_roots(inside_values);

    // pair every inside root with an outside partner 1/conj(r)
    std::vector<bool> used(rep.outside.size(), false);
    int infinity_left = rep.at_infinity;
    double worst = 0.0;
    for (cplx r : inside_values) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = rep.outside.size();
        for (std::size_t j = 0; j < rep.outside.size(); ++j) {
            if (used[j]) {
                continue;
            }
            const double d = std::abs(r - 1.0 / std::conj(rep.outside[j]));
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (infinity_left > 0 && std::abs(r) <= best) {
            --infinity_left;
            worst = std::max(worst, std::abs(r));
        } else if (best_j < rep.outside.size()) {
            used[best_j] = true;
            worst = std::max(worst, best);
        } else {
            worst = std::numeric_limits<double>::infinity();
        }
    }
    if (infinity_left != 0 || std::count(used.begin(), used.end(), false) != 0) {
        worst = std::numeric_limits<double>::infinity();
    }
    // roots on the circle are their own partners
    rep.symmetry_residual = worst;
    return rep;
}

std::vector<cplx> convex_hull(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<cplx> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double hull_distance(const std::vector<cplx>& points, cplx w) {
    if (points.empty()) {
        throw DomainError("hull_distance needs at least one point");
    }
    const std::vector<cplx> h = convex_hull(points);
    if (h.size() == 1) {
        return std::abs(w - h[0]);
    }
    if (h.size() == 2) {
        return segment_distance(h[0], h[1], w);
    }
    bool inside = true;
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h.size(); ++i) {
        const cplx a = h[i];
        const cplx b = h[(i + 1) % h.size()];
        if (cross(a, b, w) < 0.0) {
            inside = false;
        }
        d = std::min(d, segment_distance(a, b, w));
    }
    return inside ? 0.0 : d;
}

bool euclidean_hull_contains(const std::vector<cplx>& points, cplx w, double tol) {
    return hull_distance(points, w) <= tol;
}

bool hyperbolic_hull_contains(const std::vector<DiskPoint>& points, const DiskPoint& w, double tol) {
    if (points.empty()) {
        throw DomainError("hyperbolic_hull_contains needs at least one point");
    }
    std::vector<cplx> images;
    images.reserve(points.size());
    for (const DiskPoint& p : points) {
        images.push_back(mobius_to_origin(w, p));
    }
    return euclidean_hull_contains(images, cplx{0.0, 0.0}, tol);
}

GaussLucasReport verify_gauss_lucas(const PolySpec& p, double tol) {
    if (p.degree() < 2) {
        throw DomainError("verify_gauss_lucas needs degree >= 2");
    }
    GaussLucasReport rep;
    rep.coefficients = p.coefficients;
    rep.roots = poly_roots(p);
    const PolySpec dp = p.derivative();
    rep.critical_points = poly_roots(dp);
    rep.hull_vertices = convex_hull(rep.roots);
    for (cplx r : rep.roots) {
        rep.max_residual = std::max(rep.max_residual, std::abs(p(r)) / p.scale_at(r));
    }
    for (cplx c : rep.critical_points) {
        rep.max_residual = std::max(rep.max_residual, std::abs(dp(c)) / dp.scale_at(c));
        const double d = hull_distance(rep.roots, c);
        if (d > tol) {
            rep.violations.push_back({c, d});
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

nlohmann::json GaussLucasReport::to_json() const {
    nlohmann::json j;
    nlohmann::json coeffs = nlohmann::json::array();
    for (cplx c : coefficients) coeffs.push_back(cjson(c));
    nlohmann::json cps = nlohmann::json::array();
    for (cplx c : critical_points) cps.push_back(cjson(c));
    nlohmann::json hv = nlohmann::json::array();
    for (cplx c : hull_vertices) hv.push_back(cjson(c));
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& v : violations) viol.push_back({{"point", cjson(v.point)}, {"distance", v.distance}});
    j["input"] = {{"coefficients", coeffs}};
    j["critical_points"] = cps;
    j["hull_vertices"] = hv;
    j["violations"] = viol;
    j["max_residual"] = max_residual;
    j["pass"] = pass;
    return j;
}

WalshReport verify_walsh(const BlaschkeSpec& spec, double tol) {
    const std::size_t n = spec.size();
    if (!spec.is_finite() || n < 2 || n > 12) {
        throw DomainError("verify_walsh needs a finite spec of degree 2..12");
    }
    WalshReport rep;
    rep.zeros = spec.zeros();
    rep.critical = blaschke_critical_points(spec);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<DiskPoint> others;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) others.push_back(rep.zeros[j]);
        }
        if (!hyperbolic_hull_contains(others, rep.zeros[i], tol)) {
            rep.hull_vertices.push_back(rep.zeros[i].value());
        }
    }
    for (const DiskPoint& c : rep.critical.in_disk) {
        std::vector<cplx> images;
        for (const DiskPoint& a : rep.zeros) images.push_back(mobius_to_origin(c, a));
        const double d = hull_distance(images, cplx{0.0, 0.0});
        if (d > tol) {
            rep.violations.push_back({c.value(), d});
        }
    }
    for (double r : rep.critical.residual_norms) {
        rep.max_residual = std::max(rep.max_residual, r);
    }
    rep.count_ok = rep.critical.in_disk.size() == n - 1;
    rep.symmetry_ok = rep.critical.symmetry_residual < 1e-8;
    rep.pass = rep.violations.empty() && rep.count_ok && rep.symmetry_ok;
    return rep;
}

nlohmann::json WalshReport::to_json() const {
    nlohmann::json j;
    nlohmann::json zs = nlohmann::json::array();
    for (const DiskPoint& a : zeros) zs.push_back(cjson(a.value()));
    nlohmann::json cps = nlohmann::json::array();
    for (const DiskPoint& c : critical.in_disk) cps.push_back(cjson(c.value()));
    nlohmann::json outside = nlohmann::json::array();
    for (cplx c : critical.outside) outside.push_back(cjson(c));
    nlohmann::json hv = nlohmann::json::array();
    for (cplx c : hull_vertices) hv.push_back(cjson(c));
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& v : violations) viol.push_back({{"point", cjson(v.point)}, {"distance", v.distance}});
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : critical.in_disk_clusters)
        clusters.push_back({{"center", cjson(c.center)}, {"multiplicity", c.multiplicity}});
    j["input"] = {{"zeros", zs}};
    j["critical_points"] = {{"in_disk", cps},
                            {"outside", outside},
                            {"on_circle", critical.on_circle.size()},
                            {"at_infinity", critical.at_infinity},
                            {"clusters", clusters}};
    j["hull_vertices"] = hv;
    j["violations"] = viol;
    j["max_residual"] = max_residual;
    j["symmetry_residual"] = critical.symmetry_residual;
    j["in_disk_count_ok"] = count_ok;
    j["pass"] = pass;
    return j;
}

}  // namespace diskfn
