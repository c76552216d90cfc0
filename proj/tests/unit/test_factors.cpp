#include "doctest.h"

#include <cmath>

#include "diskfn/blaschke.hpp"
#include "diskfn/disk_core.hpp"
#include "diskfn/factored.hpp"
#include "diskfn/outer.hpp"
#include "diskfn/sampling.hpp"
#include "diskfn/singular.hpp"

using namespace diskfn;

namespace {

// fourth-order central difference of log g along the real direction
template <class G>
cplx log_derivative_fd(G g, cplx z, double h) {
    return (-std::log(g(z + 2.0 * h)) + 8.0 * std::log(g(z + h)) - 8.0 * std::log(g(z - h)) + std::log(g(z - 2.0 * h))) /
           (12.0 * h);
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Blaschke products") {
    const BlaschkeSpec origin = BlaschkeSpec::finite({DiskPoint(0.0, 0.0)});
    const DiskPoint z(0.3, -0.4);
    CHECK(std::abs(blaschke_eval(origin, z).value - z.value()) < 1e-15);
    CHECK(blaschke_log_derivative(origin, DiskPoint(0.5, 0.0)) == cplx{2.0, 0.0});
    CHECK(std::abs(blaschke_derivative(origin, z) - 1.0) < 1e-15);

    Rng rng(3);
    const BlaschkeSpec b = random_finite_blaschke(rng, 4, 0.9);
    for (const DiskPoint& a : b.zeros()) {
        CHECK(std::abs(blaschke_eval(b, a).value) < 1e-14);
        CHECK(std::abs(blaschke_derivative(b, a)) > 0.0);
    }
    for (double t : {0.1, 1.7, 3.3, 5.9}) {
        CHECK(std::abs(std::abs(blaschke_eval_finite(b.zeros(), std::polar(1.0, t))) - 1.0) < 1e-12);
    }
}

TEST_CASE("Blaschke log-derivative matches finite differences") {
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        const BlaschkeSpec b = random_finite_blaschke(rng, 4, 0.9);
        const DiskPoint z = random_disk_point(rng, 0.9);
        const cplx fd = log_derivative_fd([&](cplx w) { return blaschke_eval_finite(b.zeros(), w); }, z.value(), 1e-4);
        CHECK(rel(blaschke_log_derivative(b, z), fd) < 1e-6);
    }
    // {a, -a}: B = (z^2 - a^2)/(1 - a^2 z^2) up to sign
    const double a = 0.6;
    const BlaschkeSpec pair = BlaschkeSpec::finite({DiskPoint(a, 0.0), DiskPoint(-a, 0.0)});
    const cplx z{0.0, 0.1};
    const cplx oracle = 2.0 * z / (z * z - a * a) + 2.0 * a * a * z / (1.0 - a * a * z * z);
    CHECK(rel(blaschke_log_derivative(pair, DiskPoint(z)), oracle) < 1e-13);
}

TEST_CASE("derivative at a simple zero") {
    const std::vector<DiskPoint> zeros{DiskPoint(0.2, 0.1), DiskPoint(-0.5, 0.3), DiskPoint(0.0, -0.7)};
    const cplx a = zeros[0].value();
    // b_0'(a) = |a|/a * (-1)/(1 - |a|^2) * ... : use the product rule with b_0(z) = (z - a)/(1 - conj(a) z) up to a unimodular constant
    const cplx unit = std::abs(a) / a * -1.0;
    const cplx b0_prime = unit / (1.0 - std::norm(a));
    const cplx rest = blaschke_eval_finite({zeros[1], zeros[2]}, a);
    CHECK(rel(blaschke_derivative_finite(zeros, a), b0_prime * rest) < 1e-12);
}

TEST_CASE("boundary derivative bound on the lower right quarter circle") {
    const BlaschkeSpec b = tangential_generator(4.0, 400);
    double bound = 0.0;
    for (const DiskPoint& z : b.zeros()) {
        bound += z.one_minus_abs2() / std::norm(1.0 - z.value());
    }
    bound += b.angular_tail(b.size());
    bound *= 0.5 * pi * pi;
    for (int j = 1; j < 64; ++j) {
        const double t = -0.5 * pi * j / 64.0;
        CHECK(blaschke_boundary_derivative_modulus(b, BoundaryPoint(t)) <= bound);
    }
}

TEST_CASE("singular inner functions") {
    const AtomicMeasure one({{BoundaryPoint(0.0), 1.0}});
    CHECK(std::abs(singular_eval(one, DiskPoint(0.0, 0.0)) - std::exp(-1.0)) < 1e-15);
    const cplx z{0.3, 0.2};
    CHECK(std::abs(singular_eval(one, z) - std::exp((z + 1.0) / (z - 1.0))) < 1e-15);
    CHECK(std::abs(singular_log_derivative(one, DiskPoint(0.0, 0.0)) + 2.0) < 1e-15);
    const AtomicMeasure mix({{BoundaryPoint(1.0), 0.7}, {BoundaryPoint(4.0), 0.2}});
    CHECK(std::abs(singular_eval(mix, cplx{0.0, 0.0}) - std::exp(-0.9)) < 1e-15);
    CHECK(std::abs(singular_log_derivative(mix.scaled(2.0), z) - 2.0 * singular_log_derivative(mix, z)) < 1e-14);

    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        const AtomicMeasure mu({{BoundaryPoint(uniform(rng, 0, two_pi)), uniform(rng, 0.1, 1.0)},
                                {BoundaryPoint(uniform(rng, 0, two_pi)), uniform(rng, 0.1, 1.0)}});
        const cplx w = random_disk_point(rng, 0.8).value();
        const cplx fd = log_derivative_fd([&](cplx x) { return singular_eval(mu, x); }, w, 1e-4);
        CHECK(rel(singular_log_derivative(mu, w), fd) < 1e-6);
    }
}

TEST_CASE("outer functions") {
    const DiskPoint z(0.4, -0.3);
    CHECK(std::abs(outer_eval(BoundaryModulusGrid::constant(1.0), z).value - 1.0) < 1e-14);
    CHECK(std::abs(outer_eval(BoundaryModulusGrid::constant(0.5), z).value - 0.5) < 1e-14);
    CHECK(std::abs(outer_log_derivative(BoundaryModulusGrid::constant(0.5), z)) < 1e-13);

    auto profile = [](double t) { return -0.5 * (1.0 + std::cos(t)) + 0.2 * std::sin(2.0 * t); };
    const BoundaryModulusGrid g = BoundaryModulusGrid::from_log_profile(profile, 1024, -700.0);
    // radial limits
    for (double t : {0.5, 2.0, 4.0}) {
        const double m = std::abs(outer_eval(g, DiskPoint::polar(1e-3, t), 1e-8).value);
        CHECK(std::abs(m - std::exp(profile(t))) < 1e-2);
    }
    // F'/F against finite differences of the quadrature value
    for (const DiskPoint& w : {DiskPoint(0.1, 0.2), DiskPoint(-0.6, 0.3), DiskPoint(0.0, -0.85)}) {
        const cplx fd = log_derivative_fd([&](cplx x) { return outer_eval(g, DiskPoint(x), 1e-13).value; }, w.value(), 1e-3);
        CHECK(rel(outer_log_derivative(g, w), fd) < 1e-5);
    }
    // the Taylor form agrees with the quadrature form
    const OuterFunction f(g);
    CHECK(rel(f.value(z.value()), outer_eval(g, z).value) < 1e-10);
    // even profile: real on the real axis
    const BoundaryModulusGrid even = BoundaryModulusGrid::from_log_profile([](double t) { return -std::cos(t) - 1.0; }, 512, -700.0);
    CHECK(std::abs(outer_log_derivative(even, DiskPoint(0.3, 0.0)).imag()) < 1e-13);
}

TEST_CASE("restricted outer functions and outerness defect") {
    auto profile = [](double t) { return -0.3 * (1.0 + std::sin(t)); };
    const BoundaryModulusGrid g = BoundaryModulusGrid::from_log_profile(profile, 1024, -700.0);
    const DiskPoint z(0.2, 0.5);
    const ArcSet e = ArcSet::arc(1.0, 3.0);
    CHECK(std::abs(restricted_outer_eval(g, ArcSet::empty(), z).value - 1.0) < 1e-15);
    CHECK(rel(restricted_outer_eval(g, ArcSet::full(), z).value, outer_eval(g, z).value) < 1e-9);
    const double prod = std::abs(restricted_outer_eval(g, e, z).value) * std::abs(restricted_outer_eval(g, e.complement(), z).value);
    CHECK(std::abs(prod / std::abs(outer_eval(g, z).value) - 1.0) < 1e-8);

    CHECK(std::abs(outerness_defect(g, outer_eval(g, z).value, z).defect) < 1e-9);
    const DefectValue d = outerness_defect(BoundaryModulusGrid::constant(1.0), cplx{0.5, 0.0}, DiskPoint(0.5, 0.0));
    CHECK(d.defect == doctest::Approx(std::log(2.0)));
}

TEST_CASE("factored functions") {
    const FactoredFunction one(BlaschkeSpec::finite({}), AtomicMeasure(), BoundaryModulusGrid::constant(1.0));
    const FactoredValue v = factored_eval(one, DiskPoint(0.3, 0.3));
    CHECK(std::abs(v.value - 1.0) < 1e-15);
    CHECK(std::abs(v.derivative) < 1e-15);

    // finite Blaschke: rational-function oracle via quotient rule
    const std::vector<DiskPoint> zeros{DiskPoint(0.5, 0.1), DiskPoint(-0.2, -0.6)};
    const FactoredFunction f(BlaschkeSpec::finite(zeros), AtomicMeasure(), BoundaryModulusGrid::constant(1.0));
    const cplx z{0.1, 0.35};
    cplx value = 1.0, dlog = 0.0;
    for (const DiskPoint& a : zeros) {
        const cplx av = a.value();
        value *= -std::abs(av) / av * (z - av) / (1.0 - std::conj(av) * z);
        dlog += 1.0 / (z - av) + std::conj(av) / (1.0 - std::conj(av) * z);
    }
    const FactoredValue fv = factored_eval(f, DiskPoint(z));
    CHECK(rel(fv.value, value) < 1e-13);
    CHECK(rel(fv.derivative, value * dlog) < 1e-9);
}

TEST_CASE("Schwarz-Pick on random unit-norm functions") {
    Rng rng(21);
    for (int i = 0; i < 5; ++i) {
        const FactoredFunction f = random_unit_norm_function(rng, {4, true, 512});
        double worst = 0.0;
        for (int k = 0; k < 2000; ++k) {
            const DiskPoint z = random_disk_point(rng, 0.999);
            const FactoredValue v = factored_eval(f, z);
            worst = std::max(worst, schwarz_pick_quotient(v.value, v.derivative, z));
        }
        CHECK(worst <= 1.0 + 1e-9);
    }
}
