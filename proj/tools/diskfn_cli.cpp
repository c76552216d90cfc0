// diskfn command-line front end.  Every subcommand writes one JSON report
// (or a CSV table) and exits 0 iff all of its checks pass, 1 on a failed
// check, 2 on bad usage or input.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diskfn/disk_core.hpp"
#include "diskfn/examples.hpp"
#include "diskfn/factored.hpp"
#include "diskfn/hull_lab.hpp"
#include "diskfn/report.hpp"
#include "diskfn/sampling.hpp"
#include "diskfn/scenario.hpp"
#include "diskfn/spectra.hpp"
#include "diskfn/thinness.hpp"

using namespace diskfn;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t grid = 4096;
    double tol = 1e-9;
    std::size_t samples = 0;  // 0: subcommand default
    std::string out;
    std::string format = "json";
    bool no_meta = false;

    void validate() const {
        if (grid < 64 || (grid & (grid - 1)) != 0) {
            throw UsageError("--grid must be a power of two >= 64");
        }
        if (!(tol > 0.0 && tol <= 1e-2)) {
            throw UsageError("--tol must lie in (0, 1e-2]");
        }
    }
    std::size_t samples_or(std::size_t fallback) const { return samples ? samples : fallback; }
};

// What a subcommand hands back: the report body, its verdict and an optional
// CSV rendering.
struct Outcome {
    json body;
    bool pass = true;
    std::function<void(std::ostream&)> csv;
};

void write_checks_csv(std::ostream& out, const json& checks) {
    out << "id,pass,computed\n";
    for (const json& c : checks) {
        out << c.at("id").get<std::string>() << ',' << (c.at("pass").get<bool>() ? 1 : 0) << ','
            << '"' << c.at("computed").dump() << '"' << '\n';
    }
}

// ---------------------------------------------------------------- input

cplx parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) {
        throw UsageError("bad complex number '" + s + "'");
    }
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) {
            throw UsageError("bad complex number '" + s + "' (want re,im)");
        }
    }
    return {re, im};
}

// "re,im;re,im;..."
std::vector<cplx> parse_complex_list(const std::string& s) {
    std::vector<cplx> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (!item.empty()) {
            out.push_back(parse_complex(item));
        }
    }
    return out;
}

// re, im per line; '#' comments and a non-numeric header are skipped
std::vector<cplx> read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::vector<cplx> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '-' ||
                                                 line[0] == '+' || line[0] == '.')) {
            continue;
        }
        out.push_back(parse_complex(line));
    }
    return out;
}

std::vector<DiskPoint> to_disk_points(const std::vector<cplx>& pts) {
    std::vector<DiskPoint> out;
    for (cplx z : pts) {
        if (std::abs(z) >= 1.0) {
            throw UsageError("point outside the open disk");
        }
        out.emplace_back(z);
    }
    return out;
}

// "angle:mass;angle:mass"
AtomicMeasure parse_atoms(const std::string& s) {
    std::vector<Atom> atoms;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw UsageError("bad atom '" + item + "' (want angle:mass)");
        }
        const double mass = std::stod(item.substr(colon + 1));
        if (!(mass > 0.0)) {
            throw UsageError("atom masses must be positive");
        }
        atoms.push_back({BoundaryPoint(std::stod(item.substr(0, colon))), mass});
    }
    return AtomicMeasure(std::move(atoms));
}

BoundaryModulusGrid read_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return BoundaryModulusGrid::read_csv(in);
}

// ---------------------------------------------------------------- sequences

struct SequenceOptions {
    std::string preset;
    std::string file;
    double p = 4.0;
    double c = -1.0;
};

const std::vector<std::string> preset_names{"radial-geometric", "radial-superexponential", "radial-thin",
                                            "tangential",       "paired-tangential",       "example1",
                                            "example2"};

BlaschkeSpec named_sequence(const SequenceOptions& o, std::size_t count) {
    if (!o.file.empty()) {
        return BlaschkeSpec::finite(to_disk_points(read_points_csv(o.file)));
    }
    const std::string& n = o.preset;
    if (n == "radial-geometric") return radial_geometric(count);
    if (n == "radial-superexponential" || n == "radial-thin") return radial_superexponential(count);
    if (n == "tangential") return tangential_generator(o.p, count);
    if (n == "paired-tangential") return paired_tangential_generator(o.p, count);
    if (n == "example1") return example1_sequence(o.c, count);
    if (n == "example2") return example2_sequence(o.c, count);
    throw UsageError("unknown preset '" + n + "'");
}

// ---------------------------------------------------------------- subcommands

Outcome run_gauss_lucas(const RunConfig& cfg, int degree, std::size_t trials, const std::string& coeffs) {
    Rng rng(cfg.seed);
    json records = json::array();
    bool pass = true;
    std::size_t violations = 0;
    if (!coeffs.empty()) {
        trials = 1;
    }
    for (std::size_t i = 0; i < trials; ++i) {
        PolySpec p;
        if (!coeffs.empty()) {
            p = PolySpec(parse_complex_list(coeffs));
            if (p.degree() < 1) {
                throw UsageError("need a polynomial of degree >= 1");
            }
        } else {
            const int d = degree > 0 ? degree : std::uniform_int_distribution<int>(2, 10)(rng);
            p = random_polynomial(rng, d);
        }
        const GaussLucasReport r = verify_gauss_lucas(p, cfg.tol);
        pass = pass && r.pass;
        violations += r.violations.size();
        json rec = r.to_json();
        rec["trial"] = i;
        records.push_back(rec);
    }
    Outcome o;
    o.pass = pass;
    o.body = {{"trials", records.size()}, {"violations", violations}, {"records", records}};
    return o;
}

Outcome run_walsh(const RunConfig& cfg, int degree, std::size_t trials, const std::string& zeros,
                  const std::string& file) {
    Rng rng(cfg.seed);
    json records = json::array();
    bool pass = true;
    std::size_t violations = 0;
    const bool given = !zeros.empty() || !file.empty();
    if (given) {
        trials = 1;
    }
    for (std::size_t i = 0; i < trials; ++i) {
        BlaschkeSpec b;
        if (given) {
            b = BlaschkeSpec::finite(to_disk_points(!file.empty() ? read_points_csv(file) : parse_complex_list(zeros)));
        } else {
            const int d = degree > 0 ? degree : std::uniform_int_distribution<int>(2, 8)(rng);
            b = random_finite_blaschke(rng, static_cast<std::size_t>(d), 0.9);
        }
        const WalshReport r = verify_walsh(b, cfg.tol);
        pass = pass && r.pass;
        violations += r.violations.size();
        json rec = r.to_json();
        rec["trial"] = i;
        records.push_back(rec);
    }
    Outcome o;
    o.pass = pass;
    o.body = {{"trials", records.size()}, {"violations", violations}, {"records", records}};
    return o;
}

Outcome run_factor_eval(const RunConfig& cfg, const std::string& zeros, const std::string& zeros_file,
                        const std::string& atoms, const std::string& profile_file, const std::string& points) {
    std::vector<DiskPoint> z;
    if (!zeros_file.empty()) {
        z = to_disk_points(read_points_csv(zeros_file));
    } else if (!zeros.empty()) {
        z = to_disk_points(parse_complex_list(zeros));
    }
    BoundaryModulusGrid grid = profile_file.empty() ? BoundaryModulusGrid::constant(1.0, cfg.grid) : read_profile(profile_file);
    const FactoredFunction f(BlaschkeSpec::finite(std::move(z)), atoms.empty() ? AtomicMeasure() : parse_atoms(atoms),
                             std::move(grid));
    const std::vector<cplx> pts = parse_complex_list(points);
    if (pts.empty()) {
        throw UsageError("factor-eval needs --points");
    }
    json rows = json::array();
    for (const DiskPoint& p : to_disk_points(pts)) {
        const FactoredValue v = factored_eval(f, p);
        rows.push_back({{"z", to_json(p)},
                        {"f", to_json(v.value)},
                        {"fprime", to_json(v.derivative)},
                        {"error_bound", v.error_bound},
                        {"schwarz_pick_quotient", schwarz_pick_quotient(v.value, v.derivative, p)}});
    }
    Outcome o;
    o.body = {{"function", f.to_json()}, {"values", rows}};
    o.csv = [rows](std::ostream& out) {
        out << "re,im,f_re,f_im,fprime_re,fprime_im\n";
        for (const json& r : rows) {
            out << fmt17(r["z"]["re"]) << ',' << fmt17(r["z"]["im"]) << ',' << fmt17(r["f"]["re"]) << ','
                << fmt17(r["f"]["im"]) << ',' << fmt17(r["fprime"]["re"]) << ',' << fmt17(r["fprime"]["im"]) << '\n';
        }
    };
    return o;
}

Outcome run_thin(const SequenceOptions& seq, std::size_t kmax, const std::string& expect, bool sw_only) {
    if (kmax < 20) {
        throw UsageError("--kmax must be at least 20");
    }
    const BlaschkeSpec s = named_sequence(seq, 2 * kmax);
    if (s.size() < 2 * kmax) {
        throw UsageError("sequence has fewer than 2 * kmax zeros");
    }
    auto r = std::make_shared<ThinnessReport>(classify(s, kmax));
    Outcome o;
    o.body = r->to_json();
    o.body["sequence"] = s.name();
    if (!expect.empty()) {
        o.body["expected"] = expect;
        o.pass = to_string(r->verdict) == expect;
    }
    if (sw_only) {
        o.body = {{"sequence", s.name()},
                  {"prefix", kmax},
                  {"sundberg_wolff", o.body["sundberg_wolff"]},
                  {"sundberg_wolff_doubled", o.body["sundberg_wolff_doubled"]},
                  {"sw_witness_N", r->sw_witness_n}};
        o.csv = [r](std::ostream& out) { r->write_sw_csv(out); };
    } else {
        o.csv = [r](std::ostream& out) { r->write_q_csv(out); };
    }
    return o;
}

json scenario_config(const std::string& file, double t0, double f0, const std::string& generator, double p,
                     std::size_t count, std::size_t prefix, std::size_t grid) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            throw UsageError("cannot open " + file);
        }
        try {
            return json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad scenario file: ") + e.what());
        }
    }
    return {{"t0", t0},
            {"profile", {{"name", "sin4"}, {"f0", f0}}},
            {"generator", {{"name", generator}, {"p", p}, {"count", count}}},
            {"prefix_count", prefix},
            {"grid", grid}};
}

Outcome run_scenario(const RunConfig& cfg, const json& config) {
    ArcScenario sc = scenario_from_json(config);
    const TailSplitReport tail = verify_tail_split(sc, cfg.seed);
    const TwoSidedReport two = verify_fprime_two_sided(sc);
    const Theorem14Report thm = conclude_theorem14(sc);
    const SchwarzPickReport sp = scenario_schwarz_pick(sc, cfg.samples_or(1000), cfg.seed);
    const auto& cand = thm.sigma.sigma_b_candidates.front();
    std::vector<Check> checks;
    checks.push_back({"tail_split", tail.pass, "N found, |B_1'| < eta/4", tail.n_split, tail.b1_limit, ""});
    checks.push_back({"two_sided_bound", two.pass, "1/C <= |f'| <= C", two.constant, two.lower_limit, ""});
    checks.push_back({"first_condition", cand.diagnostics.first_verdict == LimitVerdict::to_zero, "to_zero",
                      to_string(cand.diagnostics.first_verdict), 0.0, ""});
    checks.push_back({"second_condition", cand.diagnostics.second_verdict == LimitVerdict::to_zero, "to_zero",
                      to_string(cand.diagnostics.second_verdict), 0.0, ""});
    checks.push_back({"comparability", thm.comparability_pass, "ratio in [0.1, 10]",
                      json{thm.comparability_min, thm.comparability_max}, 0.0, ""});
    checks.push_back({"sigma_E", thm.sigma_claim, json::array({0.0}), angles_json(thm.sigma.sigma_E), 0.0, cand.reason});
    checks.push_back({"schwarz_pick", sp.pass, "<= 1 + 1e-9", sp.max_quotient, 1e-9, ""});
    Outcome o;
    o.pass = all_pass(checks);
    o.body = {{"scenario", sc.to_json()},
              {"checks", checks_json(checks)},
              {"tail_split", tail.to_json()},
              {"two_sided", two.to_json()},
              {"theorem", thm.to_json()},
              {"schwarz_pick", sp.to_json()}};
    auto diag = std::make_shared<SequenceDiagnostics>(cand.diagnostics);
    o.csv = [diag](std::ostream& out) { diag->write_csv(out); };
    return o;
}

Outcome run_spectra(const json& config) {
    const ArcScenario sc = scenario_from_json(config);
    const Theorem14Report thm = conclude_theorem14(sc);
    Outcome o;
    o.body = {{"scenario", sc.to_json()},
              {"boundary_spectrum", angles_json(boundary_spectrum(*sc.f))},
              {"essential_interior", {{"arcs", json::array()}}},
              {"sigma", thm.sigma.to_json()}};
    for (const Arc& a : essential_interior(sc.e).arcs()) {
        o.body["essential_interior"]["arcs"].push_back({a.start, a.end});
    }
    // a report, not a check: no verdict beyond successful assembly
    auto diag = std::make_shared<SequenceDiagnostics>(thm.sigma.sigma_b_candidates.front().diagnostics);
    o.csv = [diag](std::ostream& out) { diag->write_csv(out); };
    return o;
}

Outcome run_crucineq(const RunConfig& cfg, std::size_t configs, double a, double b, std::size_t phi_points) {
    if (!(b > a) || b - a >= two_pi) {
        throw UsageError("--arc must satisfy a < b < a + 2 pi");
    }
    Rng rng(cfg.seed);
    const ArcSet e = ArcSet::arc(normalize_angle(a), normalize_angle(a) + (b - a));
    const Arc arc = e.arcs().front();
    json records = json::array();
    std::size_t violations = 0, phi_violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (std::size_t i = 0; i < configs; ++i) {
        RandomFunctionOptions opt;
        opt.has_arc = true;
        opt.unimodular_on = arc;
        const FactoredFunction f = random_unit_norm_function(rng, opt);
        std::vector<DiskPoint> zs;
        for (std::size_t k = 0; k < cfg.samples_or(1000); ++k) {
            zs.push_back(random_disk_point(rng, 0.98));
        }
        const CrucialReport cr = verify_crucineq(f, e, zs, cfg.grid, 1e-6);
        violations += cr.violations;
        min_margin = std::min(min_margin, cr.min_margin);
        json phis = json::array();
        bool phi_pass = true;
        for (std::size_t k = 0; k < phi_points; ++k) {
            const PhiReport pr = verify_phi_bounds(f, e, random_disk_point(rng, 0.95));
            phi_pass = phi_pass && pr.pass;
            phi_violations += pr.pass ? 0 : 1;
            phis.push_back(pr.to_json());
        }
        pass = pass && cr.pass && phi_pass;
        json rec{{"config", i},
                 {"degree", f.blaschke().size()},
                 {"crucial", {{"min_margin", cr.min_margin}, {"violations", cr.violations}, {"rejected", cr.rejected}}},
                 {"phi", phis}};
        records.push_back(rec);
    }
    Outcome o;
    o.pass = pass;
    o.body = {{"arc", {arc.start, arc.end}},
              {"configs", configs},
              {"samples_per_config", cfg.samples_or(1000)},
              {"violations", violations},
              {"phi_violations", phi_violations},
              {"min_margin", min_margin},
              {"records", records}};
    return o;
}

Outcome from_example(const ExampleReport& r) {
    Outcome o;
    o.pass = r.pass;
    o.body = r.to_json();
    auto keep = std::make_shared<ExampleReport>(r);
    o.csv = [keep](std::ostream& out) { keep->write_csv(out); };
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diskfn: numerical checks for function theory on the unit disk"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--grid", cfg.grid, "boundary grid size (power of two >= 64)")->capture_default_str();
    app.add_option("--tol", cfg.tol, "check tolerance")->capture_default_str();
    app.add_option("--samples", cfg.samples, "sample count (subcommand default when 0)");
    app.add_option("--out", cfg.out, "output path (stdout if empty)");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_flag("--no-meta", cfg.no_meta, "omit timestamp and version metadata");
    app.fallthrough();

    std::function<Outcome()> action;
    std::string command;

    // gauss-lucas
    int gl_degree = 0;
    std::size_t gl_trials = 1;
    std::string gl_coeffs;
    auto* gl = app.add_subcommand("gauss-lucas", "critical points of a polynomial lie in the hull of its roots");
    gl->add_option("--degree", gl_degree, "degree (random in [2, 10] when 0)");
    gl->add_option("--trials", gl_trials, "random polynomials")->capture_default_str();
    gl->add_option("--coeffs", gl_coeffs, "ascending coefficients re,im;re,im;...");
    gl->callback([&] { action = [&] { return run_gauss_lucas(cfg, gl_degree, gl_trials, gl_coeffs); }; });

    // walsh
    int w_degree = 0;
    std::size_t w_trials = 1;
    std::string w_zeros, w_file;
    auto* wa = app.add_subcommand("walsh", "critical points of a finite Blaschke product lie in the hyperbolic hull");
    wa->add_option("--degree", w_degree, "degree (random in [2, 8] when 0)");
    wa->add_option("--trials", w_trials, "random products")->capture_default_str();
    wa->add_option("--zeros", w_zeros, "zeros re,im;re,im;...");
    wa->add_option("--zeros-file", w_file, "CSV of zeros (re, im per line)");
    wa->callback([&] { action = [&] { return run_walsh(cfg, w_degree, w_trials, w_zeros, w_file); }; });

    // factor-eval
    std::string fe_zeros, fe_file, fe_atoms, fe_profile, fe_points;
    auto* fe = app.add_subcommand("factor-eval", "evaluate f = B S F and f' at points");
    fe->add_option("--zeros", fe_zeros, "Blaschke zeros re,im;...");
    fe->add_option("--zeros-file", fe_file, "CSV of zeros");
    fe->add_option("--atoms", fe_atoms, "singular atoms angle:mass;...");
    fe->add_option("--profile", fe_profile, "CSV boundary modulus (angle, value) on the half-step grid");
    fe->add_option("--points", fe_points, "evaluation points re,im;...")->required();
    fe->callback([&] { action = [&] { return run_factor_eval(cfg, fe_zeros, fe_file, fe_atoms, fe_profile, fe_points); }; });

    // thin / sw
    SequenceOptions seq;
    std::size_t kmax = 60;
    std::string expect;
    auto add_sequence_options = [&](CLI::App* sub) {
        sub->add_option("--preset", seq.preset, "named sequence")->check(CLI::IsMember(preset_names));
        sub->add_option("--file", seq.file, "CSV of zeros (re, im per line)");
        sub->add_option("--p", seq.p, "exponent for the tangential presets")->capture_default_str();
        sub->add_option("--c", seq.c, "parameter for the example presets")->capture_default_str();
        sub->add_option("--kmax", kmax, "classification prefix P (2P zeros are used)")->capture_default_str();
    };
    auto* th = app.add_subcommand("thin", "classify a sequence as thin or thick");
    add_sequence_options(th);
    th->add_option("--expect", expect, "required verdict")->check(CLI::IsMember({"thin", "thick", "inconclusive"}));
    th->callback([&] {
        if (seq.preset.empty() == seq.file.empty()) throw CLI::ValidationError("thin", "give exactly one of --preset, --file");
        action = [&] { return run_thin(seq, kmax, expect, false); };
    });
    auto* sw = app.add_subcommand("sw", "Sundberg-Wolff table for a sequence");
    add_sequence_options(sw);
    sw->callback([&] {
        if (seq.preset.empty() == seq.file.empty()) throw CLI::ValidationError("sw", "give exactly one of --preset, --file");
        action = [&] { return run_thin(seq, kmax, "", true); };
    });

    // scenario / spectra
    std::string sc_file, sc_generator = "tangential";
    double sc_t0 = 1.0, sc_f0 = 0.5, sc_p = 4.0;
    std::size_t sc_count = 800, sc_prefix = 200;
    auto add_scenario_options = [&](CLI::App* sub) {
        sub->add_option("--config", sc_file, "scenario JSON");
        sub->add_option("--t0", sc_t0, "E = [0, t0]")->capture_default_str();
        sub->add_option("--f0", sc_f0, "|F(0)|")->capture_default_str();
        sub->add_option("--generator", sc_generator, "zero generator")
            ->check(CLI::IsMember({"tangential", "paired-tangential", "none"}))
            ->capture_default_str();
        sub->add_option("--p", sc_p, "generator exponent")->capture_default_str();
        sub->add_option("--count", sc_count, "materialized zeros")->capture_default_str();
        sub->add_option("--prefix", sc_prefix, "zeros used by the profiles")->capture_default_str();
    };
    auto* sc = app.add_subcommand("scenario", "arc scenario: tail split, two-sided bound, sigma_E");
    add_scenario_options(sc);
    sc->callback([&] {
        action = [&] {
            return run_scenario(cfg, scenario_config(sc_file, sc_t0, sc_f0, sc_generator, sc_p, sc_count, sc_prefix, cfg.grid));
        };
    });
    auto* sp = app.add_subcommand("spectra", "assemble sigma_E for a scenario");
    add_scenario_options(sp);
    sp->callback([&] {
        action = [&] {
            return run_spectra(scenario_config(sc_file, sc_t0, sc_f0, sc_generator, sc_p, sc_count, sc_prefix, cfg.grid));
        };
    });

    // crucineq
    std::size_t ci_configs = 50, ci_phi = 2;
    std::vector<double> ci_arc{0.5, 2.5};
    auto* ci = app.add_subcommand("crucineq", "sweep of the crucial inequality and the Phi bounds");
    ci->add_option("--configs", ci_configs, "random configurations")->capture_default_str();
    ci->add_option("--arc", ci_arc, "E = [a, b]")->expected(2)->capture_default_str();
    ci->add_option("--phi-points", ci_phi, "Phi-bound points per configuration")->capture_default_str();
    ci->callback([&] { action = [&] { return run_crucineq(cfg, ci_configs, ci_arc[0], ci_arc[1], ci_phi); }; });

    // examples
    double e1_c = -1.0;
    long e1_kmax = 50;
    std::size_t e_thin = 20;
    auto* e1 = app.add_subcommand("example1", "zeros on a strip preimage; f' outer, first condition fails");
    e1->add_option("--c", e1_c, "c in (-pi, 0)")->capture_default_str();
    e1->add_option("--kmax", e1_kmax, "|k| <= kmax")->capture_default_str();
    e1->add_option("--thin-prefix", e_thin, "prefix for the thickness check")->capture_default_str();
    e1->callback([&] { action = [&] { return from_example(example1_report(e1_c, e1_kmax, e_thin)); }; });

    double e2_c = -1.0;
    long e2_kmin = 5, e2_kmax = 100;
    auto* e2 = app.add_subcommand("example2", "zeros on a quadrant preimage; second condition fails");
    e2->add_option("--c", e2_c, "c < 0")->capture_default_str();
    e2->add_option("--kmin", e2_kmin, "band start")->capture_default_str();
    e2->add_option("--kmax", e2_kmax, "band end")->capture_default_str();
    e2->add_option("--thin-prefix", e_thin, "prefix for the thickness check")->capture_default_str();
    e2->callback([&] { action = [&] { return from_example(example2_report(e2_c, e2_kmin, e2_kmax, e_thin)); }; });

    std::string ba_alpha = "0.5,0";
    BalphaOptions ba_opt;
    auto* ba = app.add_subcommand("balpha", "B_alpha = (S - alpha)/(1 - conj(alpha) S)");
    ba->add_option("--alpha", ba_alpha, "alpha as re,im")->capture_default_str();
    ba->add_option("--p", ba_opt.p, "Hardy exponent")->capture_default_str();
    ba->add_option("--radii", ba_opt.radii, "circles for the H^p means")->delimiter(',')->capture_default_str();
    ba->callback([&] { action = [&] { return from_example(balpha_report(parse_complex(ba_alpha), ba_opt)); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    command = app.get_subcommands().front()->get_name();

    Outcome outcome;
    try {
        cfg.validate();
        outcome = action();
    } catch (const UsageError& e) {
        std::cerr << "diskfn: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "diskfn: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "diskfn: " << command << " failed: " << e.what() << '\n';
        return 3;
    }

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            std::cerr << "diskfn: cannot write " << cfg.out << '\n';
            return 2;
        }
    }
    std::ostream& out = cfg.out.empty() ? std::cout : file;
    if (cfg.format == "csv") {
        if (outcome.csv) {
            outcome.csv(out);
        } else if (outcome.body.contains("checks")) {
            write_checks_csv(out, outcome.body["checks"]);
        } else {
            std::cerr << "diskfn: " << command << " has no CSV form\n";
            return 2;
        }
    } else {
        out << envelope(command, outcome.pass, outcome.body, !cfg.no_meta).dump(2) << '\n';
    }
    return outcome.pass ? 0 : 1;
}
