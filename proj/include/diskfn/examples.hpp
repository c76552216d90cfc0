#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "diskfn/arc_set.hpp"
#include "diskfn/blaschke.hpp"
#include "diskfn/report.hpp"

namespace diskfn {

struct ExampleReport {
    std::string name;
    nlohmann::json parameters;
    std::vector<Check> checks;
    /// Per-index table (k, z_k, omega, conditions); column names in `columns`.
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    bool pass = false;

    nlohmann::json to_json() const;
    void write_csv(std::ostream& out) const;
    const Check* find(const std::string& id) const;
};

// B_alpha = (S - alpha)/(1 - conj(alpha) S), S(z) = exp((z + 1)/(z - 1)).

cplx balpha_singular(cplx z);
/// log|B_alpha'(z)| from the explicit derivative, finite wherever defined.
double balpha_log_derivative_modulus(cplx alpha, cplx z);
/// mean of |B_alpha'(r zeta)|^p over the circle (trapezoid, refined to 1e-10).
double balpha_hp_mean(cplx alpha, double r, double p);

struct BalphaOptions {
    std::size_t disk_radii = 100;
    std::size_t disk_angles = 100;
    std::vector<double> radii{0.9, 0.99, 0.999};
    double p = 0.4;
    double growth_limit = 0.05;
    std::size_t defect_points = 10;
};

ExampleReport balpha_report(cplx alpha, const BalphaOptions& opt = {});

// Example 1: h(z) = i log((1 + z)/(1 - z)) - pi/2 onto the strip
// -pi < Re w < 0; E is the lower semicircle.

cplx example1_h(const DiskPoint& z);
DiskPoint example1_h_inverse(cplx w);
/// z_k = h^{-1}(c + 2 pi i k).
DiskPoint example1_zero(double c, long k);
/// Zeros ordered k = 0, 1, -1, 2, -2, ...; limit points +-1.
BlaschkeSpec example1_sequence(double c, std::size_t count);
ArcSet example1_e();
double example1_log_fprime_boundary(double c, double t);
double example1_log_fprime(double c, cplx z);

ExampleReport example1_report(double c, long kmax = 50, std::size_t thin_prefix = 20);

// Example 2: h(z) = -e^{i pi/4} sqrt((1 + z)/(1 - z)) onto the third
// quadrant; E is the upper semicircle.

cplx example2_h(const DiskPoint& z);
DiskPoint example2_h_inverse(cplx w);
/// z_k from zeta_k = xi_k + i eta_k, xi_k = 4 pi |c| k, eta_k = 4 pi^2 k^2 - c^2.
DiskPoint example2_zero(double c, long k);
/// k = 1, 2, ...; limit point 1.
BlaschkeSpec example2_sequence(double c, std::size_t count);
ArcSet example2_e();
double example2_log_fprime_boundary(double c, double t);

ExampleReport example2_report(double c, long kmin = 5, long kmax = 100, std::size_t thin_prefix = 20);

}  // namespace diskfn
