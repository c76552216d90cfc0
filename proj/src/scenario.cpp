#include "diskfn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "diskfn/report.hpp"
#include "diskfn/singular.hpp"

namespace diskfn {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double angular_term(const DiskPoint& a) { return poisson_kernel(a, BoundaryPoint(0.0)); }

// sum_{j >= n} of the angular terms: exact over the materialized zeros plus
// the generator's bound beyond them.
double hybrid_tail(const BlaschkeSpec& zeros, std::size_t n) {
    double s = zeros.is_finite() ? 0.0 : zeros.angular_tail(zeros.size());
    for (std::size_t j = n; j < zeros.size(); ++j) {
        s += angular_term(zeros.zero(j));
    }
    return s;
}

// |G'(zeta)| for G = F B_0, straight from the factors on the circle.
double g_prime_modulus(const ArcScenario& sc, const std::vector<DiskPoint>& b0, double t) {
    const cplx zeta = std::polar(1.0, t);
    const auto [log_f, df_over_f] = sc.f->outer().log_value_and_derivative(zeta);
    const cplx fv = std::exp(log_f);
    const cplx bv = blaschke_eval_finite(b0, zeta);
    const cplx db = blaschke_derivative_finite(b0, zeta);
    return std::abs(fv * df_over_f * bv + fv * db);
}

}  // namespace

LogProfile sin4_profile(double t0, double f0) {
    if (!(t0 > 0.0 && t0 <= pi)) {
        throw DomainError("sin4_profile: t0 must lie in (0, pi]");
    }
    if (!(f0 > 0.0 && f0 < 1.0)) {
        throw DomainError("sin4_profile: F(0) must lie in (0, 1)");
    }
    const double len = two_pi - t0;
    const double amp = -std::log(f0) / (len / two_pi * 0.375);
    return [t0, len, amp](double t) {
        t = normalize_angle(t);
        if (t <= t0) {
            return 0.0;
        }
        const double s = std::sin(pi * (t - t0) / len);
        return -amp * s * s * s * s;
    };
}

nlohmann::json ArcScenario::to_json() const {
    return {{"t0", t0},
            {"zeros", zeros.name()},
            {"materialized", zeros.size()},
            {"prefix_count", prefix_count},
            {"grid", f_grid.size()},
            {"F0", f_at_zero},
            {"eta", eta},
            {"angular_sum", angular_series.estimate},
            {"angular_verdict", to_string(angular_series.verdict)},
            {"angular_tail", angular_tail},
            {"N", n_split},
            {"delta", delta}};
}

ArcScenario build_scenario(double t0, const LogProfile& log_h, BlaschkeSpec zeros,
                           std::size_t prefix_count, std::size_t grid_n) {
    if (!(t0 > 0.0 && t0 <= pi)) {
        throw DomainError("build_scenario: t0 must lie in (0, pi]");
    }
    if (prefix_count > zeros.size()) {
        throw DomainError("build_scenario: prefix_count exceeds the materialized zeros");
    }
    ArcScenario sc;
    sc.t0 = t0;
    sc.e = ArcSet::arc(0.0, t0);
    sc.prefix_count = prefix_count;
    sc.f_grid = BoundaryModulusGrid::from_log_profile(log_h, grid_n, std::log(BoundaryModulusGrid::default_floor));
    for (std::size_t j = 0; j < grid_n; ++j) {
        const double t = sc.f_grid.angle(j);
        const double l = log_h(t);
        if (l > 0.0) {
            throw DomainError("build_scenario: profile exceeds 1");
        }
        if (t <= t0 && l != 0.0) {
            throw DomainError("build_scenario: profile must equal 1 on E");
        }
    }
    const OuterValue f0 = outer_eval(sc.f_grid, DiskPoint(0.0, 0.0));
    sc.f_at_zero = std::abs(f0.value);
    if (!(sc.f_at_zero < 1.0 - 1e-12)) {
        throw DomainError("build_scenario: F is constant (h = 1 a.e.), eta would vanish");
    }
    sc.eta = (1.0 - sc.f_at_zero) / (1.0 + sc.f_at_zero);

    std::vector<double> terms;
    for (std::size_t n = 0; n < prefix_count; ++n) {
        const DiskPoint& z = zeros.zero(n);
        if (!(z.im() > 0.0)) {
            throw DomainError("build_scenario: zeros must lie in the upper half-disk");
        }
        terms.push_back(angular_term(z));
    }
    if (!terms.empty()) {
        sc.angular_series = series_verdict(terms);
        sc.angular_tail = zeros.is_finite() ? 0.0 : zeros.angular_tail(zeros.size());
        if (sc.angular_series.verdict == SeriesVerdict::diverging ||
            (!std::isfinite(sc.angular_tail) && sc.angular_series.verdict != SeriesVerdict::converged)) {
            throw DomainError("build_scenario: angular-derivative sum at 1 diverges or has no finite tail bound");
        }
        for (const BoundaryPoint& p : zeros.declared_limit_points()) {
            if (std::abs(expm1i(p.angle())) > 1e-12) {
                throw DomainError("build_scenario: zeros must tend to 1");
            }
        }
    }
    sc.zeros = std::move(zeros);
    sc.f = std::make_shared<const FactoredFunction>(sc.zeros, AtomicMeasure(), sc.f_grid, 1e-12, true);
    return sc;
}

ArcScenario scenario_from_json(const nlohmann::json& j) {
    const double t0 = j.value("t0", pi / 2.0);
    const nlohmann::json prof = j.value("profile", nlohmann::json::object());
    const std::string pname = prof.value("name", "sin4");
    if (pname != "sin4") {
        throw DomainError("scenario: unknown profile '" + pname + "'");
    }
    const LogProfile log_h = sin4_profile(t0, prof.value("f0", 0.5));
    const nlohmann::json gen = j.value("generator", nlohmann::json::object());
    const std::string gname = gen.value("name", "tangential");
    const std::size_t count = gen.value("count", std::size_t{800});
    BlaschkeSpec zeros;
    if (gname == "tangential") {
        zeros = tangential_generator(gen.value("p", 4.0), count);
    } else if (gname == "paired-tangential") {
        zeros = paired_tangential_generator(gen.value("p", 4.0), count);
    } else if (gname == "none") {
        zeros = BlaschkeSpec::finite({});
    } else {
        throw DomainError("scenario: unknown generator '" + gname + "'");
    }
    const std::size_t prefix = j.value("prefix_count", std::min<std::size_t>(200, zeros.size()));
    return build_scenario(t0, log_h, std::move(zeros), prefix, j.value("grid", std::size_t{4096}));
}

nlohmann::json TailSplitReport::to_json() const {
    return {{"N", n_split},
            {"tail", tail},
            {"tail_required", tail_required},
            {"zeros_in_sector", zeros_in_sector},
            {"max_b1", max_b1},
            {"b1_limit", b1_limit},
            {"b1_pass", b1_pass},
            {"max_b", max_b},
            {"b_bound", b_bound},
            {"b_bound_pass", b_bound_pass},
            {"delta", delta},
            {"min_g_prime", min_g_prime},
            {"g_pass", g_pass},
            {"additivity_error", additivity_error},
            {"additivity_pass", additivity_pass},
            {"elementary_trials", elementary_trials},
            {"elementary_violations", elementary_violations},
            {"pass", pass}};
}

TailSplitReport verify_tail_split(ArcScenario& sc, std::uint64_t seed) {
    TailSplitReport rep;
    const BlaschkeSpec& zeros = sc.zeros;
    rep.tail_required = sc.eta / (2.0 * pi * pi);
    rep.b1_limit = sc.eta / 4.0;
    if (!(hybrid_tail(zeros, zeros.size()) < rep.tail_required)) {
        throw TruncationError("verify_tail_split: no N within the materialized zeros gives a tail below " +
                                  std::to_string(rep.tail_required),
                              hybrid_tail(zeros, zeros.size()));
    }
    std::size_t n = 0;
    while (!(hybrid_tail(zeros, n) < rep.tail_required)) {
        ++n;
    }
    rep.n_split = n;
    rep.tail = hybrid_tail(zeros, n);
    rep.zeros_in_sector = true;
    for (std::size_t j = n; j < zeros.size(); ++j) {
        const DiskPoint& z = zeros.zero(j);
        const double phi = std::atan2(z.im(), z.re());
        if (!(z.abs() >= 0.5 && phi > 0.0 && phi <= pi / 2.0)) {
            rep.zeros_in_sector = false;
        }
    }

    // |B_1'| and |B'| on t in (-pi/2, 0); the zeros past the materialized ones
    // are covered by the (3.8)-type bound
    const double beyond = zeros.is_finite() ? 0.0 : 0.5 * pi * pi * zeros.angular_tail(zeros.size());
    const std::size_t samples = 256;
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = -0.5 * pi * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
        const BoundaryPoint zeta(t);
        double b1 = beyond;
        double b = beyond;
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            const double p = poisson_kernel(zeros.zero(j), zeta);
            b += p;
            if (j >= n) {
                b1 += p;
            }
        }
        rep.max_b1 = std::max(rep.max_b1, b1);
        rep.max_b = std::max(rep.max_b, b);
    }
    rep.b1_pass = rep.max_b1 < rep.b1_limit;
    rep.b_bound = 0.5 * pi * pi * hybrid_tail(zeros, 0);
    rep.b_bound_pass = rep.max_b <= rep.b_bound * (1.0 + 1e-12);

    // delta: halve from pi/16 until |G'| >= eta/2 on gamma_delta
    const std::vector<DiskPoint> b0(zeros.zeros().begin(), zeros.zeros().begin() + static_cast<long>(n));
    double delta = pi / 16.0;
    for (int attempt = 0;; ++attempt) {
        double min_g = inf;
        for (std::size_t k = 0; k < samples; ++k) {
            const double t = -delta * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
            min_g = std::min(min_g, g_prime_modulus(sc, b0, t));
        }
        rep.delta = delta;
        rep.min_g_prime = min_g;
        if (min_g >= sc.eta / 2.0 || attempt == 40) {
            break;
        }
        delta *= 0.5;
    }
    rep.g_pass = rep.min_g_prime >= sc.eta / 2.0;

    // |G'| = |F'| + |B_0'| on E
    for (std::size_t k = 0; k < 64; ++k) {
        const double t = sc.t0 * (static_cast<double>(k) + 0.5) / 64.0;
        const cplx zeta = std::polar(1.0, t);
        const auto [log_f, df_over_f] = sc.f->outer().log_value_and_derivative(zeta);
        const double fp = std::abs(std::exp(log_f) * df_over_f);
        const double b0p = blaschke_boundary_derivative_modulus(zeros, BoundaryPoint(t), n);
        const double g = g_prime_modulus(sc, b0, t);
        rep.additivity_error = std::max(rep.additivity_error, std::abs(g - fp - b0p) / g);
    }
    rep.additivity_pass = rep.additivity_error <= 1e-6;

    // elementary inequalities for r >= 1/2, 0 < phi <= pi/2, -pi/2 <= t < 0
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.5, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, pi / 2.0);
    std::uniform_real_distribution<double> ut(-pi / 2.0, 0.0);
    rep.elementary_trials = 1000;
    for (std::size_t k = 0; k < rep.elementary_trials; ++k) {
        const double r = ur(rng);
        const double phi = pi / 2.0 - uphi(rng);  // (0, pi/2]
        const double t = ut(rng);
        const double d2 = std::norm(std::polar(1.0, t) - std::polar(r, phi));
        const double q = (1.0 - r) * (1.0 - r) + (phi - t) * (phi - t);
        if (!(2.0 / (pi * pi) * q <= d2 * (1.0 + 1e-14) && d2 <= q * (1.0 + 1e-14))) {
            ++rep.elementary_violations;
        }
    }
    rep.pass = rep.zeros_in_sector && rep.b1_pass && rep.b_bound_pass && rep.g_pass && rep.additivity_pass &&
               rep.elementary_violations == 0;
    sc.n_split = rep.n_split;
    sc.delta = rep.delta;
    return rep;
}

nlohmann::json TwoSidedReport::to_json() const {
    return {{"delta", delta},
            {"min_fprime", min_fprime},
            {"max_fprime", max_fprime},
            {"max_error", max_error},
            {"C", constant},
            {"lower_limit", lower_limit},
            {"lower_pass", lower_pass},
            {"upper_pass", upper_pass},
            {"shrunk", shrunk},
            {"offending_t", offending_t},
            {"pass", pass}};
}

TwoSidedReport verify_fprime_two_sided(ArcScenario& sc) {
    if (!(sc.delta > 0.0)) {
        throw DomainError("verify_fprime_two_sided: run verify_tail_split first");
    }
    TwoSidedReport rep;
    rep.lower_limit = sc.eta / 4.0;
    const std::size_t samples = 256;
    for (int pass = 0; pass < 2; ++pass) {
        rep.delta = sc.delta;
        rep.min_fprime = inf;
        rep.max_fprime = 0.0;
        rep.max_error = 0.0;
        double max_b = 0.0;
        double max_fp = 0.0;
        double worst = inf;
        for (std::size_t k = 0; k < samples; ++k) {
            const double t = -sc.delta * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
            const BoundaryValue bv = factored_boundary(*sc.f, BoundaryPoint(t));
            if (bv.derivative_modulus - bv.derivative_error < worst) {
                worst = bv.derivative_modulus - bv.derivative_error;
                rep.offending_t = t;
            }
            rep.min_fprime = std::min(rep.min_fprime, bv.derivative_modulus);
            rep.max_fprime = std::max(rep.max_fprime, bv.derivative_modulus);
            rep.max_error = std::max(rep.max_error, bv.derivative_error);
            const cplx zeta = std::polar(1.0, t);
            const auto [log_f, df_over_f] = sc.f->outer().log_value_and_derivative(zeta);
            max_fp = std::max(max_fp, std::abs(std::exp(log_f) * df_over_f));
            max_b = std::max(max_b, blaschke_boundary_derivative_modulus(sc.zeros, BoundaryPoint(t)) +
                                        (sc.zeros.is_finite() ? 0.0 : 0.5 * pi * pi * sc.zeros.angular_tail(sc.zeros.size())));
        }
        rep.lower_pass = rep.min_fprime - rep.max_error >= rep.lower_limit;
        rep.upper_pass = std::isfinite(rep.max_fprime) && rep.max_fprime <= max_b + max_fp + rep.max_error;
        if (rep.lower_pass || pass == 1) {
            break;
        }
        sc.delta *= 0.5;
        rep.shrunk = true;
    }
    const double lo = rep.min_fprime - rep.max_error;
    rep.constant = lo > 0.0 ? std::max({rep.max_fprime + rep.max_error, 1.0 / lo, 1.0 + 1e-12}) : inf;
    rep.pass = rep.lower_pass && rep.upper_pass && std::isfinite(rep.constant);
    return rep;
}

nlohmann::json Theorem14Report::to_json() const {
    return {{"sigma", sigma.to_json()},
            {"comparability", comparability},
            {"comparability_min", comparability_min},
            {"comparability_max", comparability_max},
            {"comparability_pass", comparability_pass},
            {"sigma_claim", sigma_claim}};
}

Theorem14Report conclude_theorem14(const ArcScenario& sc) {
    if (sc.zeros.size() < 2 * (sc.prefix_count / 2) || sc.prefix_count < 40) {
        throw DomainError("conclude_theorem14: needs prefix_count >= 40 materialized zeros");
    }
    SigmaCandidate cand;
    cand.target = BoundaryPoint(0.0);
    cand.seq = sc.zeros;
    cand.count = sc.prefix_count;
    cand.thin_prefix = sc.prefix_count / 2;
    // log|f'| on E~ = (t0, 2 pi) is smooth; each exact boundary evaluation
    // runs over every zero, so tabulate once and spline
    constexpr std::size_t nodes = 1 << 15;
    const double a = sc.t0;
    const double h = (two_pi - a) / static_cast<double>(nodes - 1);
    std::vector<double> samples(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
        const double m = factored_boundary(*sc.f, BoundaryPoint(a + h * static_cast<double>(j))).derivative_modulus;
        samples[j] = std::log(std::max(m, BoundaryModulusGrid::default_floor));
    }
    auto spline = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
        samples.begin(), samples.end(), a, h);
    auto log_fprime = [spline, a](double t) {
        const double u = normalize_angle(t);
        return (*spline)(std::clamp(u < a ? u + two_pi : u, a, two_pi));
    };
    Theorem14Report rep;
    rep.sigma = assemble_sigma(*sc.f, sc.e, {cand}, log_fprime, {0.0});
    rep.comparability_min = inf;
    for (const DiagnosticRecord& r : rep.sigma.sigma_b_candidates.front().diagnostics.records) {
        if (r.n >= 200) {
            break;
        }
        const double ratio = r.omega_tilde * std::abs(1.0 - r.z.value()) / r.z.one_minus_abs();
        rep.comparability.push_back(ratio);
        rep.comparability_min = std::min(rep.comparability_min, ratio);
        rep.comparability_max = std::max(rep.comparability_max, ratio);
    }
    rep.comparability_pass = rep.comparability_min >= 0.1 && rep.comparability_max <= 10.0;
    rep.sigma_claim = rep.sigma.sigma_E.size() == 1 && std::abs(expm1i(rep.sigma.sigma_E.front().angle())) < 1e-12;
    return rep;
}

nlohmann::json SchwarzPickReport::to_json() const {
    return {{"samples", samples}, {"max_quotient", max_quotient}, {"violations", violations}, {"pass", pass}};
}

SchwarzPickReport scenario_schwarz_pick(const ArcScenario& sc, std::size_t samples, std::uint64_t seed) {
    const FactoredFunction fm(sc.zeros.prefix(sc.zeros.size()), AtomicMeasure(), sc.f_grid, 1e-12, true);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SchwarzPickReport rep;
    rep.samples = samples;
    for (std::size_t k = 0; k < samples; ++k) {
        const double r = 0.99 * std::sqrt(u(rng));
        const DiskPoint z = DiskPoint::polar(1.0 - r, two_pi * u(rng));
        const FactoredValue v = factored_eval(fm, z);
        const double q = schwarz_pick_quotient(v.value, v.derivative, z);
        rep.max_quotient = std::max(rep.max_quotient, q);
        if (q > 1.0 + 1e-9) {
            ++rep.violations;
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

}  // namespace diskfn
