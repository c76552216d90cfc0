#include "doctest.h"

#include <cmath>

#include "diskfn/blaschke.hpp"
#include "diskfn/examples.hpp"
#include "diskfn/thinness.hpp"

using namespace diskfn;

TEST_CASE("thin quantity") {
    const BlaschkeSpec two = BlaschkeSpec::finite({DiskPoint(0.5, 0.0), DiskPoint(-0.5, 0.0)});
    CHECK(thin_quantity(two, 0, 2) == doctest::Approx(0.8));

    // identity q_k = |B_k'(z_k)| (1 - |z_k|^2) with B_k the product over the prefix
    const BlaschkeSpec s = tangential_generator(4.0, 30);
    for (std::size_t k : {0u, 5u, 17u}) {
        const double lhs = thin_quantity(s, k, 30);
        const double rhs = std::abs(blaschke_derivative_finite(s.prefix(30).zeros(), s.zero(k).value())) *
                           s.zero(k).one_minus_abs2();
        CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
    }

    // radial 1 - 2^{-n}: direct-product oracle (tests/oracles/radial_thin_quantity.py)
    const BlaschkeSpec radial = radial_geometric(60);
    CHECK(thin_quantity(radial, 20, 60) == doctest::Approx(0.014671241662419437).epsilon(1e-10));
    CHECK(thin_quantity(radial, 0, 60) == doctest::Approx(0.18168631200387075).epsilon(1e-10));
    CHECK(thin_quantity(radial, 59, 60) == doctest::Approx(0.12112420800258051).epsilon(1e-10));
}

TEST_CASE("Sundberg-Wolff ratio") {
    // far-apart zeros: nothing in the window
    const BlaschkeSpec sparse = BlaschkeSpec::finite({DiskPoint(0.9, 0.0), DiskPoint(-0.9, 0.0), DiskPoint(0.0, 0.9)});
    CHECK(sundberg_wolff_ratio(sparse, 2.0, 0, 3) == 0.0);
    // radial 1 - 2^{-n}, N = 2: every later zero is in the window; the
    // ratio is the geometric tail sum_{m >= 1} 2^{-m} over the prefix
    const BlaschkeSpec radial = radial_geometric(60);
    for (std::size_t j : {10u, 30u}) {
        const double expected = 1.0 - std::pow(2.0, -double(59 - j));
        CHECK(sundberg_wolff_ratio(radial, 2.0, j, 60) == doctest::Approx(expected).epsilon(1e-12));
    }
    // Example 1, N = 10: the next zero on the same side sits in the window
    // with 1 - |z| smaller by about e^{-2 pi}, so the ratio settles at a
    // positive constant instead of decaying
    const BlaschkeSpec e1 = example1_sequence(-1.0, 120);
    const double r40 = sundberg_wolff_ratio(e1, 10.0, 40, 120);
    for (std::size_t j : {60u, 80u, 100u}) {
        const double r = sundberg_wolff_ratio(e1, 10.0, j, 120);
        CHECK(r > 1e-3);
        CHECK(r == doctest::Approx(r40).epsilon(1e-6));
    }
    CHECK(r40 == doctest::Approx(std::exp(-two_pi)).epsilon(0.1));
    CHECK_THROWS_AS(sundberg_wolff_ratio(radial, 1.0, 0, 60), DomainError);
}

TEST_CASE("classification") {
    CHECK(classify(example1_sequence(-1.0, 40), 20).verdict == ThinVerdict::thick);
    CHECK(classify(example2_sequence(-1.0, 40), 20).verdict == ThinVerdict::thick);
    // exponentially separated but not thin (see the oracle above)
    CHECK(classify(radial_geometric(120), 60).verdict == ThinVerdict::thick);
    CHECK(classify(radial_superexponential(60), 30).verdict == ThinVerdict::thin);
    CHECK(classify(tangential_generator(4.0, 400), 200).verdict == ThinVerdict::thin);
    CHECK(classify(paired_tangential_generator(4.0, 400), 200).verdict == ThinVerdict::thick);
    CHECK_THROWS_AS(classify(radial_geometric(30), 19), DomainError);
}
