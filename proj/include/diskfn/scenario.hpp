#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "diskfn/arc_set.hpp"
#include "diskfn/blaschke.hpp"
#include "diskfn/disk_core.hpp"
#include "diskfn/factored.hpp"
#include "diskfn/outer.hpp"
#include "diskfn/spectra.hpp"

namespace diskfn {

using LogProfile = std::function<double(double)>;

/// log h = -A sin^4(pi (t - t0)/(2 pi - t0)) on (t0, 2 pi) and 0 on [0, t0],
/// with A chosen so that F(0) = f0.  h is C^3 across the endpoints of E.
LogProfile sin4_profile(double t0, double f0 = 0.5);

/// f = B F with |F| = 1 on E = [0, t0] and zeros tending to 1 from the
/// upper half-disk.
struct ArcScenario {
    double t0 = 0.0;
    ArcSet e;
    BoundaryModulusGrid f_grid;
    BlaschkeSpec zeros;
    std::size_t prefix_count = 0;
    double f_at_zero = 0.0;
    double eta = 0.0;
    SeriesReport angular_series;  // (1 - |z_n|^2)/|1 - z_n|^2 over the prefix
    double angular_tail = 0.0;     // bound past the materialized zeros
    std::size_t n_split = 0;       // set by verify_tail_split
    double delta = 0.0;            // set by verify_tail_split
    std::shared_ptr<const FactoredFunction> f;

    nlohmann::json to_json() const;
};

/// Validates the hypotheses and computes eta = (1 - |F(0)|)/(1 + |F(0)|).
/// Rejects (DomainError) a nonpositive or non-flat profile on E, a constant
/// F, zeros off the upper half-disk, and a divergent or unbounded angular sum.
ArcScenario build_scenario(double t0, const LogProfile& log_h, BlaschkeSpec zeros,
                           std::size_t prefix_count, std::size_t grid_n = 4096);

/// Scenario from {"t0", "profile": {"name": "sin4", "f0"}, "generator":
/// {"name", "p", "count"}, "prefix_count", "grid"}.
ArcScenario scenario_from_json(const nlohmann::json& j);

struct TailSplitReport {
    std::size_t n_split = 0;
    double tail = 0.0;            // sum_{n >= N} (1 - |z_n|^2)/|1 - z_n|^2 (bound)
    double tail_required = 0.0;   // eta/(2 pi^2)
    bool zeros_in_sector = false; // r_n >= 1/2, 0 < phi_n <= pi/2 for n >= N
    double max_b1 = 0.0;          // sampled |B_1'| on the lower right quarter circle
    double b1_limit = 0.0;        // eta/4
    bool b1_pass = false;
    double max_b = 0.0;           // sampled |B'| on the same arc
    double b_bound = 0.0;         // (pi^2/2) sum (1 - r_n^2)/|1 - z_n|^2
    bool b_bound_pass = false;
    double delta = 0.0;
    double min_g_prime = 0.0;     // on gamma_delta
    bool g_pass = false;
    double additivity_error = 0.0;  // max relative | |G'| - |F'| - |B_0'| | on E
    bool additivity_pass = false;
    std::size_t elementary_trials = 0;
    std::size_t elementary_violations = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Chooses N and delta, checks |B_1'| < eta/4 at 256 points of t in
/// (-pi/2, 0), |G'| >= eta/2 on gamma_delta, the additivity of |G'| on E and
/// the elementary inequalities on 10^3 random triples.  Records N and delta
/// in the scenario.
TailSplitReport verify_tail_split(ArcScenario& sc, std::uint64_t seed = 1);

struct TwoSidedReport {
    double delta = 0.0;
    double min_fprime = 0.0;
    double max_fprime = 0.0;
    double max_error = 0.0;       // boundary-identity truncation bound
    double constant = 0.0;        // C with 1/C <= |f'| <= C
    double lower_limit = 0.0;     // eta/4
    bool lower_pass = false;
    bool upper_pass = false;
    bool shrunk = false;
    double offending_t = 0.0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// 1/C <= |f'(e^{it})| <= C on t in (-delta, 0) at 256 points; halves delta
/// once if the lower bound eta/4 fails.  Needs verify_tail_split first.
TwoSidedReport verify_fprime_two_sided(ArcScenario& sc);

struct Theorem14Report {
    SigmaReport sigma;
    std::vector<double> comparability;  // omega_tilde |1 - z_n|/(1 - |z_n|)
    double comparability_min = 0.0;
    double comparability_max = 0.0;
    bool comparability_pass = false;
    bool sigma_claim = false;  // sigma_E == {angle 0}

    nlohmann::json to_json() const;
};

/// Tangency profiles, thickness and sigma_E for the zeros against E.
Theorem14Report conclude_theorem14(const ArcScenario& sc);

struct SchwarzPickReport {
    std::size_t samples = 0;
    double max_quotient = 0.0;
    std::size_t violations = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Quotient <= 1 + 1e-9 at random points of |z| < 0.99, evaluated on the
/// materialized zeros (a finite Blaschke product times F, itself unit-norm).
SchwarzPickReport scenario_schwarz_pick(const ArcScenario& sc, std::size_t samples, std::uint64_t seed);

}  // namespace diskfn
