#include "doctest.h"

#include <cmath>

#include "diskfn/scenario.hpp"

using namespace diskfn;

namespace {

ArcScenario accepted(std::size_t count = 800, std::size_t prefix = 200) {
    return build_scenario(1.0, sin4_profile(1.0, 0.5), tangential_generator(4.0, count), prefix);
}

}  // namespace

TEST_CASE("sin^4 profile") {
    const LogProfile p = sin4_profile(1.0, 0.5);
    CHECK(p(0.5) == 0.0);
    CHECK(p(3.0) < 0.0);
    CHECK(std::abs(p(1.0 + 1e-3)) < 1e-10);
    // mean of log h equals log F(0)
    double s = 0.0;
    for (int j = 0; j < 1 << 14; ++j) s += p(two_pi * (j + 0.5) / (1 << 14));
    CHECK(s / (1 << 14) == doctest::Approx(std::log(0.5)).epsilon(1e-10));
}

TEST_CASE("scenario construction") {
    const ArcScenario sc = accepted();
    CHECK(sc.f_at_zero == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(sc.eta == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(sc.angular_series.verdict == SeriesVerdict::converged);

    // p = 3: angular terms ~ n^{-1}
    CHECK_THROWS_AS(build_scenario(1.0, sin4_profile(1.0), tangential_generator(3.0, 800), 200), DomainError);
    // h = 1: F constant
    CHECK_THROWS_AS(build_scenario(1.0, [](double) { return 0.0; }, tangential_generator(4.0, 100), 50), DomainError);
    // nonzero on E
    CHECK_THROWS_AS(build_scenario(1.0, [](double) { return -0.1; }, tangential_generator(4.0, 100), 50),
                    DomainError);
}

TEST_CASE("tail split and two-sided bound") {
    ArcScenario sc = accepted();
    const TailSplitReport t = verify_tail_split(sc, 1);
    CHECK(t.pass);
    CHECK(t.tail < t.tail_required);
    CHECK(t.zeros_in_sector);
    CHECK(t.max_b1 < t.b1_limit);
    CHECK(t.max_b <= t.b_bound);
    CHECK(t.min_g_prime >= sc.eta / 2.0);
    CHECK(t.elementary_trials == 1000);
    CHECK(t.elementary_violations == 0);
    CHECK(sc.n_split == t.n_split);

    const TwoSidedReport w = verify_fprime_two_sided(sc);
    CHECK(w.pass);
    CHECK(w.min_fprime - w.max_error >= sc.eta / 4.0);
    CHECK(std::isfinite(w.constant));
    CHECK(1.0 / w.constant <= w.min_fprime);
    CHECK(w.max_fprime <= w.constant);
}

TEST_CASE("scenario without zeros") {
    ArcScenario sc = build_scenario(1.0, sin4_profile(1.0, 0.5), BlaschkeSpec::finite({}), 0);
    const TailSplitReport t = verify_tail_split(sc, 1);
    CHECK(t.n_split == 0);
    CHECK(t.max_b1 == 0.0);
    CHECK(t.pass);
    const TwoSidedReport w = verify_fprime_two_sided(sc);
    CHECK(w.pass);
    CHECK(w.min_fprime >= sc.eta);
}

TEST_CASE("Schwarz-Pick on the scenario function") {
    const ArcScenario sc = accepted(400, 100);
    CHECK(scenario_schwarz_pick(sc, 2000, 3).pass);
}

TEST_CASE("scenario from JSON") {
    const nlohmann::json j{{"t0", 1.0},
                           {"profile", {{"name", "sin4"}, {"f0", 0.5}}},
                           {"generator", {{"name", "tangential"}, {"p", 4.0}, {"count", 300}}},
                           {"prefix_count", 100}};
    const ArcScenario sc = scenario_from_json(j);
    CHECK(sc.zeros.size() == 300);
    CHECK(sc.prefix_count == 100);
    CHECK_THROWS(scenario_from_json({{"t0", 1.0}, {"profile", {{"name", "gauss"}}}}));
}
