#pragma once

#include <vector>

#include "json.hpp"

#include "diskfn/blaschke.hpp"
#include "diskfn/poly.hpp"

namespace diskfn {

struct RootCluster {
    cplx center;
    int multiplicity = 0;
};

struct CriticalPointReport {
    std::vector<DiskPoint> in_disk;
    std::vector<BoundaryPoint> on_circle;
    std::vector<cplx> outside;
    int at_infinity = 0;  // degree deficit of the numerator of B'
    std::vector<double> residual_norms;
    std::vector<RootCluster> in_disk_clusters;  // merged at radius 1e-5
    double symmetry_residual = 0.0;             // worst |r - 1/conj(s)| over pairs
};

/// Numerator of B' = B * sum_j (1-|a_j|^2)/((z-a_j)(1-conj(a_j) z)), i.e.
/// sum_j (1-|a_j|^2) prod_{i!=j} (z - a_i)(1 - conj(a_i) z), degree <= 2n-2.
PolySpec blaschke_derivative_numerator(const std::vector<DiskPoint>& zeros);
CriticalPointReport blaschke_critical_points(const BlaschkeSpec& spec);

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double radius = 1e-5);

/// Convex hull vertices, counterclockwise (monotone chain).
std::vector<cplx> convex_hull(std::vector<cplx> points);
/// Euclidean distance from w to the convex hull (0 inside).
double hull_distance(const std::vector<cplx>& points, cplx w);
bool euclidean_hull_contains(const std::vector<cplx>& points, cplx w, double tol);
/// Geodesic hull membership, decided after moving w to the origin.
bool hyperbolic_hull_contains(const std::vector<DiskPoint>& points, const DiskPoint& w, double tol);

struct HullViolation {
    cplx point;
    double distance = 0.0;
};

struct GaussLucasReport {
    std::vector<cplx> coefficients;
    std::vector<cplx> roots;
    std::vector<cplx> critical_points;
    std::vector<cplx> hull_vertices;
    std::vector<HullViolation> violations;
    double max_residual = 0.0;
    bool pass = false;
    nlohmann::json to_json() const;
};
GaussLucasReport verify_gauss_lucas(const PolySpec& p, double tol = 1e-9);

struct WalshReport {
    std::vector<DiskPoint> zeros;
    CriticalPointReport critical;
    std::vector<cplx> hull_vertices;  // zeros that are hyperbolic extreme points
    std::vector<HullViolation> violations;
    bool count_ok = false;
    bool symmetry_ok = false;
    double max_residual = 0.0;
    bool pass = false;
    nlohmann::json to_json() const;
};
WalshReport verify_walsh(const BlaschkeSpec& spec, double tol = 1e-9);

}  // namespace diskfn
