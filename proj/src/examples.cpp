#include "diskfn/examples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/quadrature/gauss.hpp>

#include "diskfn/disk_core.hpp"
#include "diskfn/outer.hpp"
#include "diskfn/quadrature.hpp"
#include "diskfn/spectra.hpp"
#include "diskfn/thinness.hpp"

namespace diskfn {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

Check make_check(std::string id, bool pass, nlohmann::json expected, nlohmann::json computed, double tol,
                 std::string note = {}) {
    Check c;
    c.id = std::move(id);
    c.pass = pass;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.tolerance = tol;
    c.note = std::move(note);
    return c;
}

void finish(ExampleReport& rep) { rep.pass = all_pass(rep.checks); }

double band_ratio(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi / *lo;
}

double mean(const std::vector<double>& v, std::size_t from, std::size_t to) {
    double s = 0.0;
    for (std::size_t i = from; i < to; ++i) {
        s += v[i];
    }
    return s / static_cast<double>(to - from);
}

// log|1 - a w| for real a in (0, 1)
double log_abs_one_minus(double a, cplx w) { return std::log(std::abs(1.0 - a * w)); }

cplx example1_h_cplx(cplx z) { return cplx{0.0, 1.0} * std::log((1.0 + z) / (1.0 - z)) - pi / 2.0; }

}  // namespace

nlohmann::json ExampleReport::to_json() const {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) {
            r[columns[i]] = row[i];
        }
        table.push_back(r);
    }
    return {{"name", name}, {"parameters", parameters}, {"checks", checks_json(checks)}, {"table", table},
            {"pass", pass}};
}

void ExampleReport::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << fmt17(row[i]);
        }
        out << '\n';
    }
}

const Check* ExampleReport::find(const std::string& id) const {
    for (const Check& c : checks) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

// ---------------------------------------------------------------- B_alpha

cplx balpha_singular(cplx z) { return std::exp((z + 1.0) / (z - 1.0)); }

double balpha_log_derivative_modulus(cplx alpha, cplx z) {
    // B' = -2 S (1 - |alpha|^2) / ((z - 1)^2 (1 - conj(alpha) S)^2)
    const cplx q = (z + 1.0) / (z - 1.0);
    const cplx s = std::exp(q);
    return std::log(2.0 * (1.0 - std::norm(alpha))) + q.real() - 2.0 * std::log(std::abs(z - 1.0)) -
           2.0 * std::log(std::abs(1.0 - std::conj(alpha) * s));
}

double balpha_hp_mean(cplx alpha, double r, double p) {
    auto trapezoid = [&](std::size_t n) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double t = two_pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
            s += std::exp(p * balpha_log_derivative_modulus(alpha, std::polar(r, t)));
        }
        return s / static_cast<double>(n);
    };
    std::size_t n = 1024;
    double prev = trapezoid(n);
    for (; n < (std::size_t{1} << 24); n *= 2) {
        const double next = trapezoid(2 * n);
        if (std::abs(next - prev) <= 1e-10 * std::abs(next)) {
            return next;
        }
        prev = next;
    }
    throw QuadratureError("balpha_hp_mean: trapezoid rule did not settle", std::abs(prev));
}

namespace {

// int log|1 - conj(alpha) S| d omega_z over the circle.  With x = cot(t/2)
// the boundary values are S = e^{-ix}, periodic in x; Gauss-Legendre per
// period out to |x| = 2 pi J, the rest cancels to O(1/J^2).
double balpha_oscillatory_term(cplx alpha, const DiskPoint& z, std::size_t periods) {
    using boost::math::quadrature::gauss;
    auto w = [&](double x) {
        const double t = 2.0 * std::atan2(1.0, x);
        return poisson_kernel(z, t) * 2.0 / (1.0 + x * x) / two_pi;
    };
    auto g = [&](double x) {
        return std::log(std::abs(1.0 - std::conj(alpha) * std::polar(1.0, -x))) * w(x);
    };
    double s = 0.0;
    const long j_max = static_cast<long>(periods);
    for (long j = -j_max; j < j_max; ++j) {
        s += gauss<double, 30>::integrate(g, two_pi * static_cast<double>(j), two_pi * static_cast<double>(j + 1));
    }
    return s;
}

}  // namespace

ExampleReport balpha_report(cplx alpha, const BalphaOptions& opt) {
    const double ra = std::abs(alpha);
    if (!(ra > 0.0 && ra < 1.0)) {
        throw DomainError("balpha_report: need 0 < |alpha| < 1");
    }
    ExampleReport rep;
    rep.name = "balpha";
    rep.parameters = {{"alpha", {{"re", alpha.real()}, {"im", alpha.imag()}}}, {"p", opt.p}, {"radii", opt.radii}};

    // (i) unimodular on the circle away from 1
    double worst = 0.0;
    for (std::size_t j = 1; j < 1000; ++j) {
        const cplx zeta = std::polar(1.0, two_pi * static_cast<double>(j) / 1000.0);
        const cplx s = balpha_singular(zeta);
        const cplx b = (s - alpha) / (1.0 - std::conj(alpha) * s);
        worst = std::max(worst, std::abs(std::abs(b) - 1.0));
    }
    rep.checks.push_back(make_check("unimodular_on_circle", worst < 1e-12, 0.0, worst, 1e-12));

    // zeros from the log branches: (z + 1)/(z - 1) = log alpha + 2 pi i k
    double zero_res = 0.0;
    for (long k : {-5L, -1L, 0L, 1L, 5L}) {
        const cplx w = std::log(alpha) + cplx{0.0, two_pi * static_cast<double>(k)};
        const cplx z = (w + 1.0) / (w - 1.0);
        const cplx s = balpha_singular(z);
        zero_res = std::max(zero_res, std::abs((s - alpha) / (1.0 - std::conj(alpha) * s)));
    }
    rep.checks.push_back(make_check("zeros_from_log_branches", zero_res < 1e-12, 0.0, zero_res, 1e-12));

    // (ii) zero-free derivative on a polar grid reaching 1 - 1e-4
    double min_log = inf;
    bool finite = true;
    for (std::size_t i = 0; i < opt.disk_radii; ++i) {
        const double r = 1.0 - std::pow(10.0, -4.0 * static_cast<double>(i + 1) / static_cast<double>(opt.disk_radii));
        for (std::size_t j = 0; j < opt.disk_angles; ++j) {
            const double t = two_pi * (static_cast<double>(j) + 0.5) / static_cast<double>(opt.disk_angles);
            const double l = balpha_log_derivative_modulus(alpha, std::polar(r, t));
            finite = finite && std::isfinite(l);
            min_log = std::min(min_log, l);
        }
    }
    rep.checks.push_back(make_check("derivative_zero_free", finite, "finite log|B'|", min_log, 0.0,
                                    "minimum of log|B'_alpha| over the grid"));

    // (iii) H^p means over growing circles
    std::vector<double> means;
    for (double r : opt.radii) {
        means.push_back(balpha_hp_mean(alpha, r, opt.p));
    }
    const double growth = means.size() >= 2 ? means.back() / means[means.size() - 2] - 1.0 : 0.0;
    rep.checks.push_back(make_check("hp_means_bounded", growth < opt.growth_limit, opt.growth_limit,
                                    {{"means", means}, {"last_growth", growth}}, opt.growth_limit,
                                    "relative increase between the last two radii"));

    // (iv) B'_alpha/S is outer: Poisson integral of its boundary log-modulus
    double worst_defect = 0.0;
    double worst_err = 0.0;
    for (std::size_t j = 0; j < opt.defect_points; ++j) {
        const double r = 0.2 + 0.6 * static_cast<double>(j) / static_cast<double>(std::max<std::size_t>(1, opt.defect_points - 1));
        const DiskPoint z = DiskPoint::polar(1.0 - r, 0.7 + two_pi * static_cast<double>(j) / static_cast<double>(opt.defect_points));
        const cplx zv = z.value();
        const double interior = std::log(2.0 * (1.0 - std::norm(alpha))) - 2.0 * std::log(std::abs(1.0 - zv)) -
                                2.0 * std::log(std::abs(1.0 - std::conj(alpha) * balpha_singular(zv)));
        const QuadResult smooth = poisson_integral(
            [](double t) { return -2.0 * std::log(std::abs(expm1i(t))); }, z, ArcSet::full(), 1e-12, {0.0});
        const double osc = balpha_oscillatory_term(alpha, z, 2000);
        const double boundary = std::log(2.0 * (1.0 - std::norm(alpha))) + smooth.value - 2.0 * osc;
        worst_defect = std::max(worst_defect, std::abs(boundary - interior));
        worst_err = std::max(worst_err, smooth.error);
    }
    rep.checks.push_back(make_check("inner_factor_is_S", worst_defect < 1e-3, 0.0,
                                    {{"max_defect", worst_defect}, {"quadrature_error", worst_err}}, 1e-3));
    finish(rep);
    return rep;
}

// ---------------------------------------------------------------- Example 1

cplx example1_h(const DiskPoint& z) { return cplx{0.0, 1.0} * std::log(cayley(z)) - pi / 2.0; }

DiskPoint example1_h_inverse(cplx w) {
    // log zeta = -i (w + pi/2)
    return DiskPoint::from_right_half_plane(std::exp(cplx{0.0, -1.0} * (w + pi / 2.0)));
}

DiskPoint example1_zero(double c, long k) {
    return example1_h_inverse(cplx{c, two_pi * static_cast<double>(k)});
}

BlaschkeSpec example1_sequence(double c, std::size_t count) {
    std::vector<DiskPoint> zeros;
    for (std::size_t i = 0; i < count; ++i) {
        const long m = static_cast<long>((i + 1) / 2);
        zeros.push_back(example1_zero(c, i % 2 == 1 ? m : -m));
    }
    return BlaschkeSpec::finite(std::move(zeros), {BoundaryPoint(0.0), BoundaryPoint(pi)});
}

ArcSet example1_e() { return ArcSet::arc(pi, two_pi); }

double example1_log_fprime_boundary(double c, double t) {
    const double a = std::exp(c);
    const double cot = 1.0 / std::tan(0.5 * t);
    // h on the circle: -pi + i log cot(t/2) on (0, pi), i log|cot(t/2)| on (pi, 2 pi)
    const cplx h = std::sin(t) > 0.0 ? cplx{-pi, std::log(cot)} : cplx{0.0, std::log(std::abs(cot))};
    return std::log1p(-a * a) - 2.0 * log_abs_one_minus(a, std::exp(h)) + h.real() + std::log(2.0) -
           std::log(2.0 * std::abs(std::sin(t)));
}

double example1_log_fprime(double c, cplx z) {
    const double a = std::exp(c);
    const cplx h = example1_h_cplx(z);
    return std::log1p(-a * a) - 2.0 * log_abs_one_minus(a, std::exp(h)) + h.real() +
           std::log(std::abs(2.0 / (1.0 - z * z)));
}

ExampleReport example1_report(double c, long kmax, std::size_t thin_prefix) {
    if (!(c > -pi && c < 0.0)) {
        throw DomainError("example1_report: c must lie in (-pi, 0)");
    }
    if (kmax < 1 || kmax > 100) {
        throw DomainError("example1_report: kmax must lie in [1, 100]");
    }
    ExampleReport rep;
    rep.name = "example1";
    rep.parameters = {{"c", c}, {"kmax", kmax}, {"thin_prefix", thin_prefix}};
    rep.columns = {"k", "re", "im", "one_minus_abs", "omega_tilde", "first_cond", "arg_zeta"};
    const double a = std::exp(c);
    const ArcSet tilde = example1_e().complement();
    const double omega_expected = std::abs(c) / pi;
    const double arg_expected = -pi / 2.0 + std::abs(c);
    double omega_err = 0.0, arg_err = 0.0, f_res = 0.0, trip = 0.0;
    for (long k = -kmax; k <= kmax; ++k) {
        const cplx w{c, two_pi * static_cast<double>(k)};
        const DiskPoint z = example1_h_inverse(w);
        trip = std::max(trip, std::abs(example1_h(z) - w) / std::max(1.0, std::abs(w)));
        const cplx g = std::exp(example1_h(z));
        f_res = std::max(f_res, std::abs((g - a) / (1.0 - a * g)));
        const double omega = harmonic_measure(z, tilde);
        omega_err = std::max(omega_err, std::abs(omega - omega_expected));
        const double arg_zeta = std::arg(cayley(z));
        arg_err = std::max(arg_err, std::abs(arg_zeta - arg_expected));
        rep.rows.push_back({static_cast<double>(k), z.re(), z.im(), z.one_minus_abs(), omega,
                            omega * -std::log(z.one_minus_abs()), arg_zeta});
    }
    rep.checks.push_back(make_check("inverse_round_trip", trip < 1e-12, 0.0, trip, 1e-12));
    rep.checks.push_back(make_check("f_vanishes_at_zeros", f_res < 1e-10, 0.0, f_res, 1e-10));
    rep.checks.push_back(make_check("omega_constant", omega_err < 1e-10, omega_expected, omega_err, 1e-10,
                                    "max |omega_{z_k}(E~) - |c|/pi| over |k| <= kmax"));
    rep.checks.push_back(make_check("arg_zeta", arg_err < 1e-12, arg_expected, arg_err, 1e-12));

    const BlaschkeSpec seq = example1_sequence(c, 2 * thin_prefix);
    const ThinnessReport thin = classify(seq, thin_prefix);
    rep.checks.push_back(make_check("thick", thin.verdict == ThinVerdict::thick, "thick", to_string(thin.verdict), 0.0,
                                    thin.reason));

    const SequenceDiagnostics first = firstcond_profile(seq, example1_e(), seq.size());
    rep.checks.push_back(make_check("first_condition_fails", first.first_verdict == LimitVerdict::bounded_away,
                                    "bounded_away", to_string(first.first_verdict), 0.0));

    double worst_defect = 0.0;
    for (cplx zv : {cplx{0.0, 0.0}, cplx{0.0, 0.3}}) {
        const DefectValue d = outerness_defect([c](double t) { return example1_log_fprime_boundary(c, t); },
                                               {0.0, pi}, example1_log_fprime(c, zv), DiskPoint(zv), 1e-10);
        worst_defect = std::max(worst_defect, std::abs(d.defect));
    }
    rep.checks.push_back(make_check("fprime_outer", worst_defect < 1e-3, 0.0, worst_defect, 1e-3));
    finish(rep);
    return rep;
}

// ---------------------------------------------------------------- Example 2

cplx example2_h(const DiskPoint& z) { return -std::polar(1.0, pi / 4.0) * std::sqrt(cayley(z)); }

DiskPoint example2_h_inverse(cplx w) {
    // sqrt(zeta) = -e^{-i pi/4} w, so zeta = -i w^2
    return DiskPoint::from_right_half_plane(cplx{0.0, -1.0} * w * w);
}

DiskPoint example2_zero(double c, long k) {
    const double kd = static_cast<double>(k);
    return DiskPoint::from_right_half_plane({4.0 * pi * std::abs(c) * kd, 4.0 * pi * pi * kd * kd - c * c});
}

BlaschkeSpec example2_sequence(double c, std::size_t count) {
    std::vector<DiskPoint> zeros;
    for (std::size_t i = 0; i < count; ++i) {
        zeros.push_back(example2_zero(c, static_cast<long>(i + 1)));
    }
    return BlaschkeSpec::finite(std::move(zeros), {BoundaryPoint(0.0)});
}

ArcSet example2_e() { return ArcSet::arc(0.0, pi); }

double example2_log_fprime_boundary(double c, double t) {
    const double a = std::exp(c);
    const double cot = 1.0 / std::tan(0.5 * t);
    const double root = std::sqrt(std::abs(cot));
    // on (pi, 2 pi): h = -sqrt|cot(t/2)| (real); on (0, pi): h = -i sqrt(cot(t/2))
    const cplx h = std::sin(t) < 0.0 ? cplx{-root, 0.0} : cplx{0.0, -root};
    // |h'| = |h|/|1 - zeta^2|
    return std::log1p(-a * a) - 2.0 * log_abs_one_minus(a, std::exp(h)) + h.real() + std::log(root) -
           std::log(2.0 * std::abs(std::sin(t)));
}

namespace {

struct Example2Columns {
    std::vector<double> k_omega;
    std::vector<double> k3_delta;
    std::vector<double> strong;
};

Example2Columns example2_columns(double c, long kmin, long kmax) {
    Example2Columns out;
    const ArcSet tilde = example2_e().complement();
    for (long k = kmin; k <= kmax; ++k) {
        const DiskPoint z = example2_zero(c, k);
        const double omega = harmonic_measure(z, tilde);
        const double kd = static_cast<double>(k);
        out.k_omega.push_back(kd * omega);
        out.k3_delta.push_back(kd * kd * kd * z.one_minus_abs());
        out.strong.push_back(omega / std::cbrt(z.one_minus_abs()));
    }
    return out;
}

}  // namespace

ExampleReport example2_report(double c, long kmin, long kmax, std::size_t thin_prefix) {
    if (!(c < 0.0)) {
        throw DomainError("example2_report: c must be negative");
    }
    if (kmin < 1 || kmax < 2 * kmin) {
        throw DomainError("example2_report: need 1 <= kmin and kmax >= 2 kmin");
    }
    ExampleReport rep;
    rep.name = "example2";
    rep.parameters = {{"c", c}, {"kmin", kmin}, {"kmax", kmax}, {"thin_prefix", thin_prefix}};
    rep.columns = {"k", "re", "im", "one_minus_abs", "omega_tilde", "first_cond", "second_cond", "k_omega",
                   "k3_delta"};
    const double a = std::exp(c);

    double trip = 0.0, f_res = 0.0, formula = 0.0;
    bool monotone = true;
    double prev_delta = inf;
    for (long k = 1; k <= kmax; ++k) {
        const cplx w{c, -two_pi * static_cast<double>(k)};
        const DiskPoint z = example2_h_inverse(w);
        const DiskPoint zk = example2_zero(c, k);
        const cplx zeta_formula = cplx{0.0, -1.0} * w * w;
        formula = std::max(formula, std::abs(cayley(zk) - zeta_formula) / std::abs(zeta_formula));
        trip = std::max(trip, std::abs(example2_h(z) - w) / std::abs(w));
        const cplx g = std::exp(example2_h(zk));
        f_res = std::max(f_res, std::abs((g - a) / (1.0 - a * g)));
        if (k >= 2 && !(zk.one_minus_abs() < prev_delta)) {
            monotone = false;
        }
        prev_delta = zk.one_minus_abs();
    }
    rep.checks.push_back(make_check("zeta_formula", formula < 1e-12, 0.0, formula, 1e-12,
                                    "zeta_k = -i (c - 2 pi i k)^2 against xi_k + i eta_k"));
    rep.checks.push_back(make_check("inverse_round_trip", trip < 1e-12, 0.0, trip, 1e-12));
    rep.checks.push_back(make_check("f_vanishes_at_zeros", f_res < 1e-10, 0.0, f_res, 1e-10));
    rep.checks.push_back(make_check("monotone_decay", monotone, true, monotone, 0.0));

    // (i), (ii), (iv): bands over [kmin, kmax] and under range doubling
    const Example2Columns base = example2_columns(c, kmin, kmax);
    const Example2Columns doubled = example2_columns(c, kmin, 2 * kmax);
    auto band_check = [&](const std::string& id, const std::vector<double>& v, const std::vector<double>& v2) {
        const double r1 = band_ratio(v);
        const double r2 = band_ratio(v2);
        const std::size_t n = v.size();
        const std::size_t n2 = v2.size();
        const double late = mean(v, n / 2, n);
        const double late2 = mean(v2, n2 / 2, n2);
        const double drift = std::abs(late2 - late) / late;
        rep.checks.push_back(make_check(id, r1 < 4.0 && r2 < 4.0 && drift < 0.1, "max/min < 4, drift < 0.1",
                                        {{"ratio", r1}, {"ratio_doubled", r2}, {"late_drift", drift}}, 4.0));
    };
    band_check("k_omega_band", base.k_omega, doubled.k_omega);
    band_check("k3_delta_band", base.k3_delta, doubled.k3_delta);
    band_check("omega_cube_root_band", base.strong, doubled.strong);

    // (iii), (v): tangency profiles over k = 1..kmax
    const BlaschkeSpec seq = example2_sequence(c, static_cast<std::size_t>(kmax));
    const SequenceDiagnostics diag = secondcond_profile(
        seq, example2_e(), [c](double t) { return example2_log_fprime_boundary(c, t); }, {0.0, pi},
        static_cast<std::size_t>(kmax), 1e-10);
    rep.checks.push_back(make_check("first_condition_holds", diag.first_verdict == LimitVerdict::to_zero, "to_zero",
                                    to_string(diag.first_verdict), 0.0));
    rep.checks.push_back(make_check("second_condition_fails", diag.second_verdict == LimitVerdict::bounded_away,
                                    "bounded_away", to_string(diag.second_verdict), 0.0,
                                    "value at kmax: " + std::to_string(diag.records.back().second_cond)));
    for (const DiagnosticRecord& r : diag.records) {
        const double k = static_cast<double>(r.n + 1);
        rep.rows.push_back({k, r.z.re(), r.z.im(), r.z.one_minus_abs(), r.omega_tilde, r.first_cond, r.second_cond,
                            k * r.omega_tilde, k * k * k * r.z.one_minus_abs()});
    }

    // (vi) |g(x)| on (0, 1)
    double g_err = 0.0;
    for (int j = 1; j < 100; ++j) {
        const double x = j / 100.0;
        const double g = std::abs(std::exp(example2_h(DiskPoint(x, 0.0))));
        const double expected = std::exp(-std::sqrt((1.0 + x) / (1.0 - x)) / std::sqrt(2.0));
        g_err = std::max(g_err, std::abs(g - expected) / expected);
    }
    rep.checks.push_back(make_check("g_on_radius", g_err < 1e-12, 0.0, g_err, 1e-12));

    // (vii)
    const ThinnessReport thin = classify(example2_sequence(c, 2 * thin_prefix), thin_prefix);
    rep.checks.push_back(make_check("thick", thin.verdict == ThinVerdict::thick, "thick", to_string(thin.verdict), 0.0,
                                    thin.reason));
    finish(rep);
    return rep;
}

}  // namespace diskfn
