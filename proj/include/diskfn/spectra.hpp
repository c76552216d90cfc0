#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "diskfn/arc_set.hpp"
#include "diskfn/blaschke.hpp"
#include "diskfn/disk_core.hpp"
#include "diskfn/factored.hpp"
#include "diskfn/outer.hpp"
#include "diskfn/thinness.hpp"

namespace diskfn {

/// For arc sets the essential interior is the topological interior.
ArcSet essential_interior(const ArcSet& e);

/// Declared accumulation points of the zeros; throws for a generated spec
/// without declared limits.
std::vector<BoundaryPoint> blaschke_spectrum(const BlaschkeSpec& b);
/// Atoms of S plus the Blaschke spectrum, deduplicated.
std::vector<BoundaryPoint> boundary_spectrum(const FactoredFunction& f);
/// Blaschke spectrum inside ess int E.
std::vector<BoundaryPoint> sigma_i(const FactoredFunction& f, const ArcSet& e);

struct DiagnosticRecord {
    std::size_t n = 0;
    DiskPoint z{0.0, 0.0};
    double omega_tilde = 0.0;
    double first_cond = 0.0;
    double second_cond = 0.0;
    double second_cond_error = 0.0;
    double thin_quantity = 0.0;
};

/// Per-index tangency diagnostics of a zero sequence against E; the
/// complement of E is written E~ below.
struct SequenceDiagnostics {
    std::vector<DiagnosticRecord> records;
    bool has_second = false;
    LimitVerdict first_verdict = LimitVerdict::inconclusive;
    LimitVerdict second_verdict = LimitVerdict::inconclusive;

    nlohmann::json to_json() const;
    void write_csv(std::ostream& out) const;
};

/// omega_{z_n}(E~) log(1/(1 - |z_n|)) for n < count, with a limit verdict.
SequenceDiagnostics firstcond_profile(const BlaschkeSpec& seq, const ArcSet& e, std::size_t count);

/// Adds int_{E~} log|f'| d omega_{z_n} to the first-condition records.
SequenceDiagnostics secondcond_profile(const BlaschkeSpec& seq, const ArcSet& e,
                                       const BoundaryModulusGrid& fprime_log_modulus,
                                       std::size_t count, double tol = 1e-9);
/// Same with log|f'| as a function; `singular_angles` become breakpoints.
SequenceDiagnostics secondcond_profile(const BlaschkeSpec& seq, const ArcSet& e,
                                       const std::function<double(double)>& log_fprime,
                                       const std::vector<double>& singular_angles,
                                       std::size_t count, double tol = 1e-9);

/// {2/((1 - |z|) w)}^w with w = omega_z(E~); 1 when w = 0.
double gamma_E(const DiskPoint& z, const ArcSet& e);
double log_gamma_E(const DiskPoint& z, const ArcSet& e);

struct CrucialSample {
    DiskPoint z{0.0, 0.0};
    double lhs = 0.0;  // (1 - |f|^2)/(1 - |z|^2)
    double rhs = 0.0;  // gamma_E |G_E|
    double margin = 0.0;  // rhs/lhs - 1
    double tolerance = 0.0;
    bool rejected = false;
};

struct CrucialReport {
    std::vector<CrucialSample> samples;
    double min_margin = 0.0;
    std::size_t violations = 0;
    std::size_t rejected = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// The J-free form |f'| <= SPq gamma_E |G_E| of the crucial inequality, i.e.
/// (1 - |f(z)|^2)/(1 - |z|^2) <= gamma_E(z) |G_E(z)|, where G_E is the outer
/// function with modulus |f'| on E and 1 elsewhere.  log|f'| on E is taken
/// from `fprime_log_modulus`.  Samples with |f(z)| >= 1 - 1e-12 are rejected.
CrucialReport verify_crucineq(const FactoredFunction& f, const ArcSet& e,
                              const BoundaryModulusGrid& fprime_log_modulus,
                              const std::vector<DiskPoint>& z_samples, double rel_tol = 1e-6,
                              double quad_tol = 1e-10);
/// Builds the |f'| grid (size grid_n) itself.
CrucialReport verify_crucineq(const FactoredFunction& f, const ArcSet& e,
                              const std::vector<DiskPoint>& z_samples, std::size_t grid_n = 8192,
                              double rel_tol = 1e-6);

struct JuliaReport {
    double fprime_modulus = 0.0;
    double min_slack = 0.0;  // min over samples of rhs - lhs, relative
    std::size_t violations = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Julia's lemma at zeta.  The angular derivative is detected by the
/// Julia-Caratheodory quotient (1 - |f(r zeta)|)/(1 - r) stabilizing along the
/// radius; throws DomainError otherwise.
JuliaReport verify_julia(const FactoredFunction& f, const BoundaryPoint& zeta,
                         const std::vector<DiskPoint>& z_samples, double rel_tol = 1e-9);

struct PhiReport {
    std::size_t boundary_samples = 0;
    std::size_t boundary_violations = 0;
    double max_boundary_ratio = 0.0;  // max |Phi_z|/|f'| on E
    double integral = 0.0;            // int |Phi_z| d omega_z
    double integral_error = 0.0;
    double integral_bound = 0.0;      // 2/(1 - |z|)
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Phi_z(w) = (1 - |z|^2)/(1 - |f(z)|^2) ((1 - conj(f(z)) f(w))/(1 - conj(z) w))^2.
cplx phi_z(const FactoredFunction& f, const DiskPoint& z, cplx fz, cplx w_value, cplx fw);
/// |Phi_z| <= |f'| on E (at `boundary_samples` points) and
/// int |Phi_z| d omega_z <= 2/(1 - |z|).
PhiReport verify_phi_bounds(const FactoredFunction& f, const ArcSet& e, const DiskPoint& z,
                            std::size_t boundary_samples = 512, double rel_tol = 1e-9);

/// A subsequence of zeros proposed for the boundary part of sigma_E.
struct SigmaCandidate {
    BoundaryPoint target;
    BlaschkeSpec seq;
    std::size_t count = 0;         // indices used by the tangency profiles
    std::size_t thin_prefix = 20;  // prefix for classify (needs 2x zeros)
};

struct CandidateResult {
    BoundaryPoint target;
    ThinVerdict thickness = ThinVerdict::inconclusive;
    SequenceDiagnostics diagnostics;
    bool in_closure = false;  // target outside ess int E
    bool member = false;
    std::string reason;
};

struct SigmaReport {
    std::vector<BoundaryPoint> sigma_S;
    std::vector<BoundaryPoint> sigma_i;
    std::vector<CandidateResult> sigma_b_candidates;
    std::vector<BoundaryPoint> sigma_E;

    nlohmann::json to_json() const;
};

/// sigma(S) u sigma^i_E(B) u {targets of candidates that are thick and pass
/// both tangency conditions}; log|f'| on E~ comes from `log_fprime`.
SigmaReport assemble_sigma(const FactoredFunction& f, const ArcSet& e,
                           const std::vector<SigmaCandidate>& candidates,
                           const std::function<double(double)>& log_fprime,
                           const std::vector<double>& singular_angles = {});
/// Same with log|f'| from the exact boundary formula for f.
SigmaReport assemble_sigma(const FactoredFunction& f, const ArcSet& e,
                           const std::vector<SigmaCandidate>& candidates);

}  // namespace diskfn
