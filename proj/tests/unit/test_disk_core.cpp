#include "doctest.h"

#include <cmath>

#include "diskfn/disk_core.hpp"
#include "diskfn/examples.hpp"
#include "diskfn/quadrature.hpp"
#include "diskfn/sampling.hpp"

using namespace diskfn;

TEST_CASE("disk points keep 1 - |z| below machine epsilon") {
    const DiskPoint z = DiskPoint::polar(1e-30, 0.3);
    CHECK(z.one_minus_abs() == doctest::Approx(1e-30).epsilon(1e-14));
    CHECK(z.arg() == doctest::Approx(0.3));
    const DiskPoint w = DiskPoint::from_right_half_plane({1e20, 5.0});
    CHECK(w.one_minus_abs() > 0.0);
    CHECK(std::abs(cayley(w) - cplx{1e20, 5.0}) / 1e20 < 1e-14);
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
}

TEST_CASE("mobius_to_origin") {
    const DiskPoint w(0.3, -0.2);
    CHECK(std::abs(mobius_to_origin(w, w)) < 1e-15);
    const DiskPoint z(0.1, 0.7);
    CHECK(std::abs(mobius_to_origin(DiskPoint(0.0, 0.0), z) + z.value()) < 1e-15);
    for (double t : {0.0, 1.0, 2.5, 4.0}) {
        CHECK(std::abs(std::abs(mobius_to_origin(w, BoundaryPoint(t))) - 1.0) < 1e-14);
    }
}

TEST_CASE("pseudo-hyperbolic distance") {
    const DiskPoint z(0.4, 0.4);
    CHECK(pseudo_hyperbolic_distance(z, z) == 0.0);
    CHECK(pseudo_hyperbolic_distance(DiskPoint(0.0, 0.0), DiskPoint(0.3, 0.4)) == doctest::Approx(0.5));
    CHECK(pseudo_hyperbolic_distance(DiskPoint(0.5, 0.0), DiskPoint(-0.5, 0.0)) == doctest::Approx(0.8));
}

TEST_CASE("Poisson kernel") {
    for (double t : {0.0, 1.0, 3.0}) {
        CHECK(poisson_kernel(DiskPoint(0.0, 0.0), t) == doctest::Approx(1.0));
    }
    CHECK(poisson_kernel(DiskPoint(0.5, 0.0), 0.0) == doctest::Approx(3.0));
    const DiskPoint z(0.6, -0.3);
    double s = 0.0;
    for (int j = 0; j < 4096; ++j) {
        s += poisson_kernel(z, two_pi * j / 4096.0);
    }
    CHECK(std::abs(s / 4096.0 - 1.0) < 1e-10);
}

TEST_CASE("harmonic measure of arcs") {
    CHECK(harmonic_measure(DiskPoint(0.0, 0.0), ArcSet::arc(0.0, pi)) == doctest::Approx(0.5));
    CHECK(harmonic_measure(DiskPoint(0.3, 0.8), ArcSet::full()) == doctest::Approx(1.0));
    // complement additivity, close to the circle
    const DiskPoint z = DiskPoint::polar(1e-12, 1.0);
    const ArcSet e = ArcSet::arc(0.9, 1.2);
    CHECK(harmonic_measure(z, e) + harmonic_measure(z, e.complement()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(harmonic_measure(z, e) > 1.0 - 1e-10);
    // Example 1 zeros: |c|/pi
    for (long k : {-20L, -1L, 0L, 3L, 40L}) {
        CHECK(std::abs(harmonic_measure(example1_zero(-1.0, k), ArcSet::arc(0.0, pi)) - 1.0 / pi) < 1e-10);
    }
}

TEST_CASE("harmonic measure agrees with Poisson quadrature") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const DiskPoint z = DiskPoint::polar(std::pow(10.0, uniform(rng, -8.0, 0.0)), uniform(rng, 0.0, two_pi));
        const double a = uniform(rng, 0.0, two_pi);
        const ArcSet e = ArcSet::arc(a, a + uniform(rng, 0.01, 6.0));
        const QuadResult q = poisson_integral([](double) { return 1.0; }, z, e, 1e-12);
        CHECK(std::abs(q.value - harmonic_measure(z, e)) <= q.error + 1e-11);
    }
}

TEST_CASE("Schwarz-Pick quotient") {
    const DiskPoint z(0.2, 0.5);
    CHECK(schwarz_pick_quotient(z.value(), 1.0, z) == doctest::Approx(1.0));
    CHECK(schwarz_pick_quotient(0.3, 0.0, z) == 0.0);
    CHECK(schwarz_pick_quotient(0.25, 1.0, DiskPoint(0.5, 0.0)) == doctest::Approx(0.8));
}

TEST_CASE("series and limit verdicts") {
    CHECK(angular_derivative_sum(BlaschkeSpec::finite({}), BoundaryPoint(0.0), 0).estimate == 0.0);
    std::vector<DiskPoint> radial;
    for (int n = 2; n < 2000; ++n) {
        radial.push_back(DiskPoint::polar(1.0 / (double(n) * n), 0.0));
    }
    CHECK(angular_derivative_sum(BlaschkeSpec::finite(radial), BoundaryPoint(0.0), radial.size()).verdict ==
          SeriesVerdict::diverging);
    // Example 2 at 1: the terms are Re zeta_k = 4 pi |c| k, so the sum diverges
    CHECK(angular_derivative_sum(example2_sequence(-1.0, 1000), BoundaryPoint(0.0), 1000).verdict ==
          SeriesVerdict::diverging);
    // tangential p = 4: terms ~ 2 n^{-2}
    CHECK(angular_derivative_sum(tangential_generator(4.0, 4000), BoundaryPoint(0.0), 4000).verdict ==
          SeriesVerdict::converged);

    std::vector<double> decay, flat;
    for (int n = 1; n <= 200; ++n) {
        decay.push_back(1.0 / n);
        flat.push_back(1.0 + 1.0 / n);
    }
    CHECK(limit_verdict(decay) == LimitVerdict::to_zero);
    CHECK(limit_verdict(flat) == LimitVerdict::bounded_away);
}
