#include "doctest.h"

#include <cmath>

#include "diskfn/disk_core.hpp"
#include "diskfn/examples.hpp"
#include "diskfn/sampling.hpp"
#include "diskfn/spectra.hpp"

using namespace diskfn;

namespace {

FactoredFunction plain(BlaschkeSpec b, AtomicMeasure mu = {}) {
    return FactoredFunction(std::move(b), std::move(mu), BoundaryModulusGrid::constant(1.0), 1e-12, true);
}

}  // namespace

TEST_CASE("essential interior") {
    CHECK(essential_interior(ArcSet::full()).is_full());
    const ArcSet open = essential_interior(ArcSet::arc(1.0, 2.0));
    CHECK(open.is_open());
    CHECK_FALSE(open.contains(1.0));
    CHECK(open.contains(1.5));
    const ArcSet merged = essential_interior(ArcSet::from_arcs({{0.0, pi}, {pi, 1.5 * pi}}));
    REQUIRE(merged.arcs().size() == 1);
    CHECK(merged.contains(pi));
    CHECK_FALSE(merged.contains(0.0));
}

TEST_CASE("spectra") {
    CHECK(boundary_spectrum(plain(BlaschkeSpec::finite({DiskPoint(0.3, 0.1)}))).empty());
    const FactoredFunction atom = plain(BlaschkeSpec::finite({}), AtomicMeasure({{BoundaryPoint(0.0), 1.0}}));
    REQUIRE(boundary_spectrum(atom).size() == 1);
    CHECK(boundary_spectrum(atom)[0].angle() == 0.0);
    const auto e1 = boundary_spectrum(plain(example1_sequence(-1.0, 20)));
    REQUIRE(e1.size() == 2);
    CHECK(e1[0].angle() == 0.0);
    CHECK(e1[1].angle() == doctest::Approx(pi));

    CHECK(sigma_i(plain(BlaschkeSpec::finite({})), ArcSet::full()).empty());
    CHECK(sigma_i(atom, ArcSet::full()).empty());  // atoms are not Blaschke spectrum
    const FactoredFunction e2 = plain(example2_sequence(-1.0, 20));
    CHECK(sigma_i(e2, example2_e()).empty());
    CHECK(sigma_i(e2, ArcSet::full()).size() == 1);
}

TEST_CASE("tangency profiles") {
    const SequenceDiagnostics e2 = firstcond_profile(example2_sequence(-1.0, 100), example2_e(), 100);
    CHECK(e2.first_verdict == LimitVerdict::to_zero);
    const SequenceDiagnostics e1 = firstcond_profile(example1_sequence(-pi / 2, 101), example1_e(), 101);
    CHECK(e1.first_verdict == LimitVerdict::bounded_away);
    for (const DiagnosticRecord& r : e1.records) {
        CHECK(std::abs(r.omega_tilde - 0.5) < 1e-10);
    }
    const SequenceDiagnostics radial = firstcond_profile(radial_geometric(40), ArcSet::full(), 40);
    for (const DiagnosticRecord& r : radial.records) {
        CHECK(r.first_cond == 0.0);
    }
    const SequenceDiagnostics flat = secondcond_profile(example2_sequence(-1.0, 40), example2_e(),
                                                        [](double) { return 0.0; }, {}, 40);
    for (const DiagnosticRecord& r : flat.records) {
        CHECK(std::abs(r.second_cond) < 1e-12);
    }
}

TEST_CASE("Example 2 second condition against the quadrature oracle") {
    // tests/oracles/example2_secondcond.py, c = -1
    const SequenceDiagnostics d = secondcond_profile(
        example2_sequence(-1.0, 100), example2_e(), [](double t) { return example2_log_fprime_boundary(-1.0, t); },
        {0.0, pi}, 100, 1e-10);
    CHECK(d.records[24].second_cond == doctest::Approx(-0.94472476573855).epsilon(1e-3));
    CHECK(d.records[49].second_cond == doctest::Approx(-0.96814866861775).epsilon(1e-3));
    CHECK(d.records[99].second_cond == doctest::Approx(-0.981967428616342).epsilon(1e-3));
    CHECK(d.records[99].second_cond < -0.97);
    CHECK(d.second_verdict == LimitVerdict::bounded_away);
}

TEST_CASE("gamma_E") {
    CHECK(gamma_E(DiskPoint(0.3, 0.2), ArcSet::full()) == 1.0);
    CHECK(gamma_E(DiskPoint(0.0, 0.0), ArcSet::arc(0.0, pi)) == doctest::Approx(2.0));
    // Example 1: log gamma grows like (|c|/pi) log(1/(1 - |z_k|))
    double prev = 0.0;
    for (long k : {1L, 5L, 10L, 20L}) {
        const double l = log_gamma_E(example1_zero(-1.0, k), example1_e());
        CHECK(l > prev);
        prev = l;
    }
}

TEST_CASE("crucial inequality") {
    // automorphism, E = T: equality
    const FactoredFunction aut = plain(BlaschkeSpec::finite({DiskPoint(0.4, -0.3)}));
    Rng rng(2);
    std::vector<DiskPoint> zs;
    for (int i = 0; i < 50; ++i) zs.push_back(random_disk_point(rng, 0.95));
    const CrucialReport r = verify_crucineq(aut, ArcSet::full(), zs);
    CHECK(r.pass);
    CHECK(std::abs(r.min_margin) < 1e-6);

    // degree 3, fixed arc
    const FactoredFunction b3 = plain(random_finite_blaschke(rng, 3, 0.9));
    zs.clear();
    for (int i = 0; i < 1000; ++i) zs.push_back(random_disk_point(rng, 0.98));
    CHECK(verify_crucineq(b3, ArcSet::arc(0.5, 2.5), zs).pass);

    // precondition: |f| = 1 on E
    const FactoredFunction damped(BlaschkeSpec::finite({}), AtomicMeasure(), BoundaryModulusGrid::constant(0.5, 256), 1e-12, true);
    CHECK_THROWS_AS(verify_crucineq(damped, ArcSet::arc(0.5, 2.5), zs), DomainError);
    const FactoredFunction loose(BlaschkeSpec::finite({}), AtomicMeasure(), BoundaryModulusGrid::constant(1.0));
    CHECK_THROWS_AS(verify_crucineq(loose, ArcSet::arc(0.5, 2.5), zs), DomainError);
}

TEST_CASE("Julia's lemma") {
    const FactoredFunction id = plain(BlaschkeSpec::finite({DiskPoint(0.0, 0.0)}));
    Rng rng(6);
    std::vector<DiskPoint> zs;
    for (int i = 0; i < 1000; ++i) zs.push_back(random_disk_point(rng, 0.99));
    const JuliaReport j = verify_julia(id, BoundaryPoint(1.0), zs);
    CHECK(j.pass);
    CHECK(j.fprime_modulus == doctest::Approx(1.0));
    CHECK(std::abs(j.min_slack) < 1e-9);
    const FactoredFunction b = plain(random_finite_blaschke(rng, 3, 0.8));
    CHECK(verify_julia(b, BoundaryPoint(2.0), zs).pass);
    CHECK(verify_julia(b, BoundaryPoint(2.0), {DiskPoint(0.0, 0.0)}).pass);
    // S = exp((z + 1)/(z - 1)) has no angular derivative at 1
    const FactoredFunction s = plain(BlaschkeSpec::finite({}), AtomicMeasure({{BoundaryPoint(0.0), 1.0}}));
    CHECK_THROWS_AS(verify_julia(s, BoundaryPoint(0.0), zs), DomainError);
}

TEST_CASE("Phi bounds") {
    const FactoredFunction id = plain(BlaschkeSpec::finite({DiskPoint(0.0, 0.0)}));
    const PhiReport at0 = verify_phi_bounds(id, ArcSet::full(), DiskPoint(0.0, 0.0));
    CHECK(at0.pass);
    CHECK(at0.integral_bound == doctest::Approx(2.0));
    CHECK(at0.integral <= 2.0);
    const PhiReport r = verify_phi_bounds(id, ArcSet::full(), DiskPoint(0.5, 0.3));
    CHECK(r.pass);
    CHECK(r.integral < r.integral_bound);
    Rng rng(10);
    const FactoredFunction b = plain(random_finite_blaschke(rng, 4, 0.9));
    const PhiReport rb = verify_phi_bounds(b, ArcSet::full(), DiskPoint(-0.2, 0.6), 512);
    CHECK(rb.pass);
    CHECK(rb.boundary_samples == 512);
}

TEST_CASE("sigma assembly") {
    const FactoredFunction atom = plain(BlaschkeSpec::finite({}), AtomicMeasure({{BoundaryPoint(0.0), 1.0}}));
    const SigmaReport r = assemble_sigma(atom, ArcSet::arc(1.0, 2.0), {});
    REQUIRE(r.sigma_E.size() == 1);
    CHECK(r.sigma_E[0].angle() == 0.0);

    // Example 2: thick, first condition holds, second fails -> not in sigma_E
    const FactoredFunction e2 = plain(example2_sequence(-1.0, 100));
    SigmaCandidate cand{BoundaryPoint(0.0), example2_sequence(-1.0, 100), 100, 20};
    const SigmaReport s = assemble_sigma(e2, example2_e(), {cand},
                                         [](double t) { return example2_log_fprime_boundary(-1.0, t); }, {0.0, pi});
    CHECK(s.sigma_E.empty());
    REQUIRE(s.sigma_b_candidates.size() == 1);
    CHECK(s.sigma_b_candidates[0].thickness == ThinVerdict::thick);
    CHECK(s.sigma_b_candidates[0].diagnostics.second_verdict == LimitVerdict::bounded_away);
}
