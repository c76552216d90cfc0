#include "diskfn/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "diskfn/report.hpp"
#include "diskfn/singular.hpp"

namespace diskfn {

namespace {

// Angles closer than this are the same boundary point.
constexpr double same_point = 1e-12;

void add_unique(std::vector<BoundaryPoint>& pts, const BoundaryPoint& p) {
    for (const BoundaryPoint& q : pts) {
        if (std::abs(expm1i(p.angle() - q.angle())) < same_point) {
            return;
        }
    }
    pts.push_back(p);
}

void sort_points(std::vector<BoundaryPoint>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.angle() < b.angle(); });
}

std::vector<double> values_of(const std::vector<DiagnosticRecord>& recs, double DiagnosticRecord::*field) {
    std::vector<double> out;
    out.reserve(recs.size());
    for (const DiagnosticRecord& r : recs) {
        out.push_back(r.*field);
    }
    return out;
}

double log_one_minus_abs2(cplx w) {
    const double a = std::abs(w);
    return std::log1p(-a) + std::log1p(a);
}

}  // namespace

ArcSet essential_interior(const ArcSet& e) { return e.interior(); }

std::vector<BoundaryPoint> blaschke_spectrum(const BlaschkeSpec& b) {
    if (!b.is_finite() && b.declared_limit_points().empty()) {
        throw DomainError("boundary_spectrum: generated zero sequence '" + b.name() +
                          "' must declare its limit points");
    }
    std::vector<BoundaryPoint> out;
    for (const BoundaryPoint& p : b.declared_limit_points()) {
        add_unique(out, p);
    }
    sort_points(out);
    return out;
}

std::vector<BoundaryPoint> boundary_spectrum(const FactoredFunction& f) {
    std::vector<BoundaryPoint> out = blaschke_spectrum(f.blaschke());
    for (const Atom& a : f.singular().atoms()) {
        add_unique(out, a.point);
    }
    sort_points(out);
    return out;
}

std::vector<BoundaryPoint> sigma_i(const FactoredFunction& f, const ArcSet& e) {
    const ArcSet inner = essential_interior(e);
    std::vector<BoundaryPoint> out;
    for (const BoundaryPoint& p : blaschke_spectrum(f.blaschke())) {
        if (inner.contains(p.angle())) {
            out.push_back(p);
        }
    }
    return out;
}

nlohmann::json SequenceDiagnostics::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const DiagnosticRecord& r : records) {
        nlohmann::json row = {{"n", r.n},
                              {"z", diskfn::to_json(r.z)},
                              {"omega_tilde", r.omega_tilde},
                              {"first_cond", r.first_cond},
                              {"thin_quantity", r.thin_quantity}};
        if (has_second) {
            row["second_cond"] = r.second_cond;
            row["second_cond_error"] = r.second_cond_error;
        }
        rows.push_back(row);
    }
    nlohmann::json j = {{"records", rows}, {"first_verdict", to_string(first_verdict)}};
    if (has_second) {
        j["second_verdict"] = to_string(second_verdict);
    }
    return j;
}

void SequenceDiagnostics::write_csv(std::ostream& out) const {
    out << "n,re,im,one_minus_abs,omega_tilde,first_cond,second_cond,second_cond_error,thin_quantity\n";
    for (const DiagnosticRecord& r : records) {
        out << r.n << ',' << fmt17(r.z.re()) << ',' << fmt17(r.z.im()) << ',' << fmt17(r.z.one_minus_abs())
            << ',' << fmt17(r.omega_tilde) << ',' << fmt17(r.first_cond) << ','
            << (has_second ? fmt17(r.second_cond) : "") << ','
            << (has_second ? fmt17(r.second_cond_error) : "") << ',' << fmt17(r.thin_quantity) << '\n';
    }
}

SequenceDiagnostics firstcond_profile(const BlaschkeSpec& seq, const ArcSet& e, std::size_t count) {
    if (count > seq.size()) {
        throw DomainError("firstcond_profile: sequence has fewer than count zeros");
    }
    const ArcSet tilde = e.complement();
    SequenceDiagnostics d;
    d.records.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        DiagnosticRecord r;
        r.n = n;
        r.z = seq.zero(n);
        r.omega_tilde = harmonic_measure(r.z, tilde);
        r.first_cond = r.omega_tilde * -std::log(r.z.one_minus_abs());
        r.thin_quantity = thin_quantity(seq, n, count);
        d.records.push_back(r);
    }
    d.first_verdict = limit_verdict(values_of(d.records, &DiagnosticRecord::first_cond));
    return d;
}

SequenceDiagnostics secondcond_profile(const BlaschkeSpec& seq, const ArcSet& e,
                                       const std::function<double(double)>& log_fprime,
                                       const std::vector<double>& singular_angles,
                                       std::size_t count, double tol) {
    SequenceDiagnostics d = firstcond_profile(seq, e, count);
    const ArcSet tilde = e.complement();
    for (DiagnosticRecord& r : d.records) {
        const QuadResult q = poisson_integral(log_fprime, r.z, tilde, tol, singular_angles);
        r.second_cond = q.value;
        r.second_cond_error = q.error;
    }
    d.has_second = true;
    d.second_verdict = limit_verdict(values_of(d.records, &DiagnosticRecord::second_cond));
    return d;
}

SequenceDiagnostics secondcond_profile(const BlaschkeSpec& seq, const ArcSet& e,
                                       const BoundaryModulusGrid& fprime_log_modulus,
                                       std::size_t count, double tol) {
    return secondcond_profile(
        seq, e, [&](double t) { return fprime_log_modulus.log_value_at(t); }, {}, count, tol);
}

double log_gamma_E(const DiskPoint& z, const ArcSet& e) {
    const double w = harmonic_measure(z, e.complement());
    if (!(w > 0.0)) {
        return 0.0;
    }
    return w * (std::log(2.0) - std::log(z.one_minus_abs()) - std::log(w));
}

double gamma_E(const DiskPoint& z, const ArcSet& e) { return std::exp(log_gamma_E(z, e)); }

nlohmann::json CrucialReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const CrucialSample& s : samples) {
        rows.push_back({{"z", diskfn::to_json(s.z)},
                        {"lhs", s.lhs},
                        {"rhs", s.rhs},
                        {"margin", s.margin},
                        {"tolerance", s.tolerance},
                        {"rejected", s.rejected}});
    }
    return {{"samples", rows},
            {"min_margin", min_margin},
            {"violations", violations},
            {"rejected", rejected},
            {"pass", pass}};
}

CrucialReport verify_crucineq(const FactoredFunction& f, const ArcSet& e,
                              const BoundaryModulusGrid& fprime_log_modulus,
                              const std::vector<DiskPoint>& z_samples, double rel_tol,
                              double quad_tol) {
    if (!f.unit_norm()) {
        throw DomainError("verify_crucineq: f must carry the unit-norm flag");
    }
    // |f| = 1 on E: unimodular outer samples and no atoms there
    const BoundaryModulusGrid& h = f.outer_grid();
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (e.interior_contains(h.angle(j)) && std::abs(h.log_samples()[j]) > 1e-9) {
            throw DomainError("verify_crucineq: outer modulus is not 1 on E");
        }
    }
    for (const Atom& a : f.singular().atoms()) {
        if (e.contains(a.point.angle())) {
            throw DomainError("verify_crucineq: singular atom on E");
        }
    }
    CrucialReport rep;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (const DiskPoint& z : z_samples) {
        CrucialSample s;
        s.z = z;
        const cplx fz = factored_eval(f, z).value;
        if (std::abs(fz) >= 1.0 - 1e-12) {
            s.rejected = true;
            ++rep.rejected;
            rep.samples.push_back(s);
            continue;
        }
        const RestrictedOuterValue ge = restricted_outer_modulus(fprime_log_modulus, e, z, quad_tol);
        const double log_lhs = log_one_minus_abs2(fz) - std::log(z.one_minus_abs2());
        const double log_rhs = log_gamma_E(z, e) + ge.log_modulus;
        s.lhs = std::exp(log_lhs);
        s.rhs = std::exp(log_rhs);
        s.margin = std::expm1(log_rhs - log_lhs);
        s.tolerance = rel_tol + ge.quadrature_error;
        if (s.margin < -s.tolerance) {
            ++rep.violations;
        }
        rep.min_margin = std::min(rep.min_margin, s.margin);
        rep.samples.push_back(s);
    }
    rep.pass = rep.violations == 0;
    return rep;
}

CrucialReport verify_crucineq(const FactoredFunction& f, const ArcSet& e,
                              const std::vector<DiskPoint>& z_samples, std::size_t grid_n,
                              double rel_tol) {
    // tabulated |f'|: interpolation is far cheaper than the exact formula
    const BoundaryModulusGrid exact = fprime_boundary_grid(f, grid_n);
    const BoundaryModulusGrid table = BoundaryModulusGrid::from_log_values(exact.log_samples(), exact.log_floor());
    return verify_crucineq(f, e, table, z_samples, rel_tol);
}

nlohmann::json JuliaReport::to_json() const {
    return {{"fprime_modulus", fprime_modulus}, {"min_slack", min_slack}, {"violations", violations},
            {"pass", pass}};
}

JuliaReport verify_julia(const FactoredFunction& f, const BoundaryPoint& zeta,
                         const std::vector<DiskPoint>& z_samples, double rel_tol) {
    // Julia-Caratheodory quotient along the radius
    std::vector<double> quotient;
    for (int k = 2; k <= 6; ++k) {
        const double h = std::pow(10.0, -k);
        const cplx v = factored_eval(f, DiskPoint::polar(h, zeta.angle())).value;
        quotient.push_back((1.0 - std::abs(v)) / h);
    }
    const double q_last = quotient.back();
    const double q_prev = quotient[quotient.size() - 2];
    if (!std::isfinite(q_last) || std::abs(q_last - q_prev) > 1e-3 * std::max(1.0, std::abs(q_last))) {
        throw DomainError("verify_julia: no angular derivative detected at the given point");
    }
    const BoundaryValue bv = factored_boundary(f, zeta);
    JuliaReport rep;
    rep.fprime_modulus = bv.derivative_modulus;
    rep.min_slack = std::numeric_limits<double>::infinity();
    for (const DiskPoint& z : z_samples) {
        const cplx fz = factored_eval(f, z).value;
        const double lhs = std::norm(bv.value - fz) / std::exp(log_one_minus_abs2(fz));
        const double rhs = rep.fprime_modulus * std::norm(difference(zeta, z)) / z.one_minus_abs2();
        const double slack = (rhs - lhs) / std::max(rhs, 1e-300);
        rep.min_slack = std::min(rep.min_slack, slack);
        if (lhs > rhs * (1.0 + rel_tol) + 1e-14) {
            ++rep.violations;
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

nlohmann::json PhiReport::to_json() const {
    return {{"boundary_samples", boundary_samples},
            {"boundary_violations", boundary_violations},
            {"max_boundary_ratio", max_boundary_ratio},
            {"integral", integral},
            {"integral_error", integral_error},
            {"integral_bound", integral_bound},
            {"pass", pass}};
}

cplx phi_z(const FactoredFunction&, const DiskPoint& z, cplx fz, cplx w_value, cplx fw) {
    const cplx q = (1.0 - std::conj(fz) * fw) / (1.0 - std::conj(z.value()) * w_value);
    return z.one_minus_abs2() / std::exp(log_one_minus_abs2(fz)) * q * q;
}

PhiReport verify_phi_bounds(const FactoredFunction& f, const ArcSet& e, const DiskPoint& z,
                            std::size_t boundary_samples, double rel_tol) {
    const cplx fz = factored_eval(f, z).value;
    if (std::abs(fz) >= 1.0) {
        throw DomainError("verify_phi_bounds: needs |f(z)| < 1");
    }
    const std::vector<DiskPoint>& zeros = f.blaschke().zeros();
    auto f_boundary = [&](double t) {
        const cplx zeta = std::polar(1.0, t);
        return blaschke_eval_finite(zeros, zeta) * singular_eval(f.singular(), zeta) * f.outer().value(zeta);
    };
    PhiReport rep;
    // (i) on E, at points where |f| = 1 (angular derivative present)
    for (std::size_t j = 0; j < boundary_samples; ++j) {
        const double t = (static_cast<double>(j) + 0.5) * two_pi / static_cast<double>(boundary_samples);
        if (!e.contains(t)) {
            continue;
        }
        const cplx fw = f_boundary(t);
        if (std::abs(std::abs(fw) - 1.0) > 1e-9) {
            continue;
        }
        const double lhs = std::abs(phi_z(f, z, fz, std::polar(1.0, t), fw));
        const double rhs = factored_boundary(f, BoundaryPoint(t)).derivative_modulus;
        ++rep.boundary_samples;
        rep.max_boundary_ratio = std::max(rep.max_boundary_ratio, lhs / rhs);
        if (lhs > rhs * (1.0 + rel_tol)) {
            ++rep.boundary_violations;
        }
    }
    // (ii) int |Phi_z| d omega_z <= 2/(1 - |z|)
    std::vector<double> singular;
    for (const Atom& a : f.singular().atoms()) {
        singular.push_back(a.point.angle());
    }
    const QuadResult q = poisson_integral(
        [&](double t) { return std::abs(phi_z(f, z, fz, std::polar(1.0, t), f_boundary(t))); }, z,
        ArcSet::full(), 1e-10, singular);
    rep.integral = q.value;
    rep.integral_error = q.error;
    rep.integral_bound = 2.0 / z.one_minus_abs();
    rep.pass = rep.boundary_violations == 0 && rep.integral <= rep.integral_bound * (1.0 + rel_tol) + q.error;
    return rep;
}

nlohmann::json SigmaReport::to_json() const {
    nlohmann::json cands = nlohmann::json::array();
    for (const CandidateResult& c : sigma_b_candidates) {
        cands.push_back({{"target", c.target.angle()},
                         {"thickness", to_string(c.thickness)},
                         {"first_cond", to_string(c.diagnostics.first_verdict)},
                         {"second_cond", to_string(c.diagnostics.second_verdict)},
                         {"outside_ess_int", c.in_closure},
                         {"member", c.member},
                         {"reason", c.reason},
                         {"diagnostics", c.diagnostics.to_json()}});
    }
    return {{"sigma_S", angles_json(sigma_S)},
            {"sigma_i", angles_json(sigma_i)},
            {"sigma_b_candidates", cands},
            {"sigma_E", angles_json(sigma_E)}};
}

SigmaReport assemble_sigma(const FactoredFunction& f, const ArcSet& e,
                           const std::vector<SigmaCandidate>& candidates,
                           const std::function<double(double)>& log_fprime,
                           const std::vector<double>& singular_angles) {
    SigmaReport rep;
    for (const Atom& a : f.singular().atoms()) {
        add_unique(rep.sigma_S, a.point);
    }
    sort_points(rep.sigma_S);
    rep.sigma_i = sigma_i(f, e);
    const ArcSet inner = essential_interior(e);
    for (const SigmaCandidate& c : candidates) {
        CandidateResult r;
        r.target = c.target;
        r.in_closure = !inner.contains(c.target.angle());
        r.thickness = classify(c.seq, c.thin_prefix).verdict;
        r.diagnostics = secondcond_profile(c.seq, e, log_fprime, singular_angles, c.count);
        r.member = r.in_closure && r.thickness == ThinVerdict::thick &&
                   r.diagnostics.first_verdict == LimitVerdict::to_zero &&
                   r.diagnostics.second_verdict == LimitVerdict::to_zero;
        if (r.member) {
            r.reason = "thick, both tangency conditions tend to zero";
        } else if (!r.in_closure) {
            r.reason = "target lies in the essential interior of E";
        } else if (r.thickness != ThinVerdict::thick) {
            r.reason = "sequence not certified thick (" + to_string(r.thickness) + ")";
        } else {
            r.reason = "tangency condition not certified: first " + to_string(r.diagnostics.first_verdict) +
                       ", second " + to_string(r.diagnostics.second_verdict);
        }
        rep.sigma_b_candidates.push_back(std::move(r));
    }
    rep.sigma_E = rep.sigma_S;
    for (const BoundaryPoint& p : rep.sigma_i) {
        add_unique(rep.sigma_E, p);
    }
    for (const CandidateResult& r : rep.sigma_b_candidates) {
        if (r.member) {
            add_unique(rep.sigma_E, r.target);
        }
    }
    sort_points(rep.sigma_E);
    return rep;
}

SigmaReport assemble_sigma(const FactoredFunction& f, const ArcSet& e,
                           const std::vector<SigmaCandidate>& candidates) {
    auto log_fprime = [&f](double t) {
        const double m = factored_boundary(f, BoundaryPoint(t)).derivative_modulus;
        return m > 0.0 ? std::log(m) : std::log(BoundaryModulusGrid::default_floor);
    };
    std::vector<double> singular;
    for (const Atom& a : f.singular().atoms()) {
        singular.push_back(a.point.angle());
    }
    for (const BoundaryPoint& p : f.blaschke().declared_limit_points()) {
        singular.push_back(p.angle());
    }
    return assemble_sigma(f, e, candidates, log_fprime, singular);
}

}  // namespace diskfn
