#include "doctest.h"

#include <cmath>
#include <sstream>

#include "diskfn/disk_core.hpp"
#include "diskfn/examples.hpp"

using namespace diskfn;

namespace {

bool passes(const ExampleReport& r, const std::string& id) {
    const Check* c = r.find(id);
    REQUIRE(c != nullptr);
    return c->pass;
}

}  // namespace

TEST_CASE("Example 1 closed forms") {
    const double c = -1.0;
    for (long k : {-3L, 0L, 2L, 7L}) {
        const DiskPoint z = example1_zero(c, k);
        const cplx zeta = cayley(z);
        const cplx expected = std::exp(cplx{two_pi * double(k), -c - pi / 2.0});
        CHECK(std::abs(zeta - expected) <= 1e-12 * std::abs(expected));
        CHECK(std::arg(zeta) == doctest::Approx(-pi / 2.0 + std::abs(c)));
    }
    // small |c|: almost tangential
    CHECK(std::arg(cayley(example1_zero(-1e-3, 4))) == doctest::Approx(-pi / 2.0 + 1e-3));
    CHECK_THROWS_AS(example1_report(0.5), DomainError);
}

TEST_CASE("Example 1 report") {
    const ExampleReport r = example1_report(-pi / 2.0, 50);
    CHECK(r.pass);
    for (const auto& row : r.rows) {
        CHECK(std::abs(row[4] - 0.5) < 1e-10);
    }
    CHECK(r.rows.size() == 101);
    std::ostringstream csv;
    r.write_csv(csv);
    CHECK(csv.str().rfind("k,re,im", 0) == 0);
}

TEST_CASE("Example 2 closed forms") {
    const double c = -1.0;
    for (long k : {1L, 10L, 100L}) {
        const cplx w{c, -two_pi * double(k)};
        const cplx zeta = cplx{0.0, -1.0} * (c - cplx{0.0, two_pi * double(k)}) * (c - cplx{0.0, two_pi * double(k)});
        CHECK(std::abs(cayley(example2_zero(c, k)) - zeta) <= 1e-12 * std::abs(zeta));
        CHECK(std::abs(example2_h(example2_h_inverse(w)) - w) <= 1e-12 * std::abs(w));
    }
    // |g(x)| on (0, 1)
    const double x = 0.7;
    CHECK(std::abs(std::exp(example2_h(DiskPoint(x, 0.0)))) ==
          doctest::Approx(std::exp(-std::sqrt((1 + x) / (1 - x)) / std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("Example 2 report") {
    const ExampleReport r = example2_report(-1.0);
    CHECK(r.pass);
    CHECK(passes(r, "k_omega_band"));
    CHECK(passes(r, "k3_delta_band"));
    CHECK(passes(r, "first_condition_holds"));
    CHECK(passes(r, "second_condition_fails"));
    CHECK(passes(r, "thick"));
    CHECK_THROWS_AS(example2_report(0.5), DomainError);
}

TEST_CASE("B_alpha") {
    CHECK_THROWS_AS(balpha_report({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(balpha_report({1.0, 0.0}), DomainError);
    BalphaOptions opt;
    opt.disk_radii = 20;
    opt.disk_angles = 20;
    opt.defect_points = 3;
    const ExampleReport r = balpha_report({0.5, 0.0}, opt);
    CHECK(passes(r, "unimodular_on_circle"));
    CHECK(passes(r, "zeros_from_log_branches"));
    CHECK(passes(r, "derivative_zero_free"));
    CHECK(passes(r, "inner_factor_is_S"));
    // the H^p means do increase toward a finite limit, just slowly
    const Check* hp = r.find("hp_means_bounded");
    REQUIRE(hp != nullptr);
    const auto means = hp->computed["means"].get<std::vector<double>>();
    CHECK(means[0] < means[1]);
    CHECK(means[1] < means[2]);
    // log-derivative formula against a direct difference quotient of B_alpha
    const cplx a{0.3, 0.4};
    const cplx z{0.2, -0.5};
    auto b = [&](cplx w) {
        const cplx s = balpha_singular(w);
        return (s - a) / (1.0 - std::conj(a) * s);
    };
    const double h = 1e-5;
    const cplx fd = (b(z + h) - b(z - h)) / (2.0 * h);
    CHECK(balpha_log_derivative_modulus(a, z) == doctest::Approx(std::log(std::abs(fd))).epsilon(1e-8));
}
