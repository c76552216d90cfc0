#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "diskfn/arc_set.hpp"
#include "diskfn/factored.hpp"
#include "diskfn/poly.hpp"

namespace diskfn {

// Random configurations for the property runs.  Everything draws from a
// caller-owned engine so runs are reproducible from a seed.

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
/// Uniform in the disk |z| <= r_max.
DiskPoint random_disk_point(Rng& rng, double r_max);
/// Degree-d polynomial, coefficients uniform in the unit box, leading one
/// kept away from zero.
PolySpec random_polynomial(Rng& rng, int degree);
/// n zeros uniform in |z| <= r_max.
BlaschkeSpec random_finite_blaschke(Rng& rng, std::size_t n, double r_max = 0.9);

/// log h = -(a_0 + sum_{k<=modes} a_k cos(k t + phi_k)) with a_0 >= sum a_k,
/// so h <= 1 and the outer function has sup norm <= 1.
BoundaryModulusGrid random_smooth_outer(Rng& rng, std::size_t grid_n = 1024, int modes = 3);

/// log h = 0 on the single arc E = [a, b] and -sin^4(pi u) (A + B cos(2 pi k u + phi))
/// on the complement, u in (0, 1) its normalized parameter; C^3 across a and b.
BoundaryModulusGrid random_outer_unimodular_on(Rng& rng, const Arc& e, std::size_t grid_n = 1024);

struct RandomFunctionOptions {
    std::size_t max_degree = 4;
    bool atoms = false;        // add up to two atoms of mass <= 0.5 (off `unimodular_on`)
    std::size_t grid_n = 1024;
    bool has_arc = false;      // make |F| = 1 on `unimodular_on`
    Arc unimodular_on;
};

/// B S F with |f| <= 1 on the disk.
FactoredFunction random_unit_norm_function(Rng& rng, const RandomFunctionOptions& opt = {});

}  // namespace diskfn
