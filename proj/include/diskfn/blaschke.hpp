#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "diskfn/disk_point.hpp"

namespace diskfn {

/// Zero list of a Blaschke product, finite or produced by a generator.
///
/// A generated spec materializes `count` zeros and may carry closed-form tail
/// bounds: `blaschke_tail(N)` bounds sum_{j>=N} (1 - |a_j|) and
/// `angular_tail(N)` bounds sum_{j>=N} (1 - |a_j|^2)/|1 - a_j|^2 (both with
/// 0-based N).  A generated spec without a Blaschke tail is flagged as having
/// an unverified tail.
class BlaschkeSpec {
public:
    using TailBound = std::function<double(std::size_t)>;

    BlaschkeSpec() = default;
    static BlaschkeSpec finite(std::vector<DiskPoint> zeros,
                               std::vector<BoundaryPoint> limit_points = {});
    static BlaschkeSpec generated(std::string name, const std::function<DiskPoint(std::size_t)>& gen,
                                  std::size_t count, std::vector<BoundaryPoint> limit_points,
                                  TailBound blaschke_tail, TailBound angular_tail = {});

    bool is_finite() const { return finite_; }
    bool tail_verified() const { return finite_ || static_cast<bool>(blaschke_tail_); }
    const std::string& name() const { return name_; }
    std::size_t size() const { return zeros_.size(); }
    const DiskPoint& zero(std::size_t i) const { return zeros_.at(i); }
    const std::vector<DiskPoint>& zeros() const { return zeros_; }
    const std::vector<BoundaryPoint>& declared_limit_points() const { return limits_; }

    /// Bound on sum_{j>=n}(1 - |a_j|); 0 for finite specs past the end.
    double blaschke_tail(std::size_t n) const;
    /// Bound on the angular-derivative tail at 1; infinity if unknown.
    double angular_tail(std::size_t n) const;
    bool has_angular_tail() const { return static_cast<bool>(angular_tail_); }
    /// Partial sums of sum (1 - |a_j|) over the materialized zeros.
    std::vector<double> blaschke_partial_sums() const;

    /// First n zeros as a finite spec (n <= size()).
    BlaschkeSpec prefix(std::size_t n) const;
    /// Zeros n, n+1, ... with the tail bounds shifted accordingly.
    BlaschkeSpec suffix(std::size_t n) const;

private:
    std::string name_ = "finite";
    std::vector<DiskPoint> zeros_;
    std::vector<BoundaryPoint> limits_;
    bool finite_ = true;
    TailBound blaschke_tail_;
    TailBound angular_tail_;
    std::size_t shift_ = 0;
};

struct BlaschkeValue {
    cplx value;
    double error_bound = 0.0;
    std::size_t terms_used = 0;
};

/// B(z) with |a|/a = -1 at a = 0.  For generated specs, N is chosen so that
/// the product tail is below tol, using |1 - b_j(z)| <= 2(1 - |a_j|)/(1 - |z|).
BlaschkeValue blaschke_eval(const BlaschkeSpec& spec, const DiskPoint& z, double tol = 1e-12);
/// Finite product at any point of the closed disk (or beyond, away from poles).
cplx blaschke_eval_finite(const std::vector<DiskPoint>& zeros, cplx z);

/// B'/B(z); throws PoleError within 1e-12 of a zero.
cplx blaschke_log_derivative(const BlaschkeSpec& spec, const DiskPoint& z);
cplx blaschke_log_derivative_finite(const std::vector<DiskPoint>& zeros, cplx z);

/// B'(z) by the product rule; finite at the zeros.  Generated specs are
/// truncated where blaschke_eval would truncate them.
cplx blaschke_derivative(const BlaschkeSpec& spec, const DiskPoint& z, double tol = 1e-12);
cplx blaschke_derivative_finite(const std::vector<DiskPoint>& zeros, cplx z);

/// |B'(zeta)| = sum_j P_{a_j}(zeta) on the circle over the first n zeros
/// (all materialized zeros when n is omitted).
double blaschke_boundary_derivative_modulus(const BlaschkeSpec& spec, const BoundaryPoint& zeta,
                                            std::size_t n = static_cast<std::size_t>(-1));

// Generators used by the examples and scenarios.

/// z_n = (1 - n^{-p}) e^{i/n}, n = 2, 3, ...; tail bounds need p > 1 (Blaschke)
/// and p > 3 (angular derivative at 1).
BlaschkeSpec tangential_generator(double p, std::size_t count);
/// Same points, each paired with a companion at angle 1/n + n^{-p}; thick.
BlaschkeSpec paired_tangential_generator(double p, std::size_t count);
/// z_n = 1 - 2^{-n}, n = 1, 2, ...
BlaschkeSpec radial_geometric(std::size_t count);
/// z_n = 1 - (n+1)^{-n}, n = 1, 2, ...
BlaschkeSpec radial_superexponential(std::size_t count);

}  // namespace diskfn
