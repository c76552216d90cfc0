#include "diskfn/outer.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

#include <fftw3.h>

#include "diskfn/disk_core.hpp"

namespace diskfn {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_size(std::size_t n) {
    if (n < 64 || !is_power_of_two(n)) {
        throw DomainError("BoundaryModulusGrid: N must be a power of two >= 64");
    }
}

double grid_angle(std::size_t j, std::size_t n) {
    return (static_cast<double>(j) + 0.5) * two_pi / static_cast<double>(n);
}

// Herglotz-type trapezoid sum (1/N) sum K(zeta_j, z) L_j over every `stride`-th node.
template <class Kernel>
cplx trapezoid(const BoundaryModulusGrid& g, const DiskPoint& z, std::size_t stride, Kernel kernel) {
    const std::size_t n = g.size();
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < n; j += stride) {
        const double l = g.log_samples()[j];
        if (l == 0.0) {
            continue;
        }
        s += kernel(BoundaryPoint(g.angle(j)), z) * l;
    }
    return s * (static_cast<double>(stride) / static_cast<double>(n));
}

cplx herglotz_kernel(const BoundaryPoint& zeta, const DiskPoint& z) {
    return (zeta.value() + z.value()) / difference(zeta, z);
}

cplx herglotz_derivative_kernel(const BoundaryPoint& zeta, const DiskPoint& z) {
    const cplx d = difference(zeta, z);
    return 2.0 * zeta.value() / (d * d);
}

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

BoundaryModulusGrid BoundaryModulusGrid::from_values(const std::vector<double>& h, double floor) {
    check_size(h.size());
    if (!(floor > 0.0)) {
        throw DomainError("BoundaryModulusGrid: floor must be positive");
    }
    bool positive = false;
    std::vector<double> logs;
    logs.reserve(h.size());
    for (double v : h) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("BoundaryModulusGrid: samples must be finite and >= 0");
        }
        positive = positive || v > 0.0;
        logs.push_back(std::max(std::log(v), std::log(floor)));
    }
    if (!positive) {
        throw DomainError("BoundaryModulusGrid: at least one sample must be positive");
    }
    BoundaryModulusGrid g;
    g.log_samples_ = std::move(logs);
    g.log_floor_ = std::log(floor);
    return g;
}

BoundaryModulusGrid BoundaryModulusGrid::from_log_values(std::vector<double> log_h, double log_floor) {
    check_size(log_h.size());
    if (!std::isfinite(log_floor)) {
        throw DomainError("BoundaryModulusGrid: log floor must be finite");
    }
    bool positive = false;
    for (double& l : log_h) {
        if (std::isnan(l) || l == std::numeric_limits<double>::infinity()) {
            throw DomainError("BoundaryModulusGrid: log samples must be finite or -inf");
        }
        positive = positive || l > -std::numeric_limits<double>::infinity();
        l = std::max(l, log_floor);
    }
    if (!positive) {
        throw DomainError("BoundaryModulusGrid: at least one sample must be positive");
    }
    BoundaryModulusGrid g;
    g.log_samples_ = std::move(log_h);
    g.log_floor_ = log_floor;
    return g;
}

BoundaryModulusGrid BoundaryModulusGrid::from_log_profile(LogProfile log_h, std::size_t n, double log_floor) {
    check_size(n);
    std::vector<double> logs(n);
    for (std::size_t j = 0; j < n; ++j) {
        logs[j] = log_h(grid_angle(j, n));
    }
    BoundaryModulusGrid g = from_log_values(std::move(logs), log_floor);
    g.profile_ = std::move(log_h);
    return g;
}

BoundaryModulusGrid BoundaryModulusGrid::constant(double value, std::size_t n) {
    if (!(value > 0.0)) {
        throw DomainError("BoundaryModulusGrid::constant needs a positive value");
    }
    const double l = std::log(value);
    return from_log_profile([l](double) { return l; }, n, std::log(default_floor));
}

double BoundaryModulusGrid::angle(std::size_t j) const { return grid_angle(j, size()); }

double BoundaryModulusGrid::value(std::size_t j) const { return std::exp(log_samples_.at(j)); }

double BoundaryModulusGrid::max_value() const {
    return std::exp(*std::max_element(log_samples_.begin(), log_samples_.end()));
}

BoundaryModulusGrid BoundaryModulusGrid::resampled(std::size_t n) const {
    if (profile_) {
        return from_log_profile(profile_, n, log_floor_);
    }
    check_size(n);
    std::vector<double> logs(n);
    for (std::size_t j = 0; j < n; ++j) {
        logs[j] = log_value_at(grid_angle(j, n));
    }
    return from_log_values(std::move(logs), log_floor_);
}

double BoundaryModulusGrid::log_value_at(double angle) const {
    const double t = normalize_angle(angle);
    if (profile_) {
        return std::max(profile_(t), log_floor_);
    }
    // periodic 4-point Lagrange interpolation in the node index
    const std::size_t n = size();
    const double s = t / (two_pi / static_cast<double>(n)) - 0.5;
    const double base = std::floor(s);
    const double u = s - base;
    const long i1 = static_cast<long>(base);
    auto at = [&](long i) {
        long k = i % static_cast<long>(n);
        if (k < 0) {
            k += static_cast<long>(n);
        }
        return log_samples_[static_cast<std::size_t>(k)];
    };
    const double p0 = at(i1 - 1);
    const double p1 = at(i1);
    const double p2 = at(i1 + 1);
    const double p3 = at(i1 + 2);
    const double v = -p0 * u * (u - 1.0) * (u - 2.0) / 6.0 + p1 * (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0 -
                     p2 * (u + 1.0) * u * (u - 2.0) / 2.0 + p3 * (u + 1.0) * u * (u - 1.0) / 6.0;
    return std::max(v, log_floor_);
}

void BoundaryModulusGrid::write_csv(std::ostream& out) const {
    out << "angle,value\n";
    out << std::setprecision(17);
    for (std::size_t j = 0; j < size(); ++j) {
        out << angle(j) << ',' << value(j) << '\n';
    }
}

BoundaryModulusGrid BoundaryModulusGrid::read_csv(std::istream& in, double floor) {
    std::vector<double> angles;
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double a = 0.0;
        double v = 0.0;
        if (!(ls >> a >> v)) {
            if (angles.empty()) {
                continue;  // header
            }
            throw DomainError("BoundaryModulusGrid::read_csv: malformed line: " + line);
        }
        angles.push_back(a);
        values.push_back(v);
    }
    const std::size_t n = values.size();
    check_size(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(angles[j] - grid_angle(j, n)) > 1e-9) {
            throw DomainError("BoundaryModulusGrid::read_csv: angles are not the half-step grid");
        }
    }
    return from_values(values, floor);
}

OuterValue outer_eval(const BoundaryModulusGrid& grid, const DiskPoint& z, double tol, std::size_t max_grid) {
    BoundaryModulusGrid g = grid;
    for (;;) {
        const cplx full = trapezoid(g, z, 1, herglotz_kernel);
        const cplx half = trapezoid(g, z, 2, herglotz_kernel);
        const double err = std::abs(full - half);
        if (err <= tol || !g.has_profile() || 2 * g.size() > max_grid) {
            OuterValue out;
            out.value = std::exp(full);
            out.quadrature_error = err * std::abs(out.value);
            out.grid_size = g.size();
            return out;
        }
        g = g.resampled(2 * g.size());
    }
}

cplx outer_log_derivative(const BoundaryModulusGrid& grid, const DiskPoint& z) {
    BoundaryModulusGrid g = grid;
    for (;;) {
        const cplx full = trapezoid(g, z, 1, herglotz_derivative_kernel);
        const cplx half = trapezoid(g, z, 2, herglotz_derivative_kernel);
        const double err = std::abs(full - half);
        if (err <= 1e-10 * std::max(1.0, std::abs(full)) || !g.has_profile() || g.size() >= (1u << 16)) {
            return full;
        }
        g = g.resampled(2 * g.size());
    }
}

OuterFunction::OuterFunction(const BoundaryModulusGrid& grid) {
    const std::size_t n = grid.size();
    const auto& logs = grid.log_samples();
    if (std::all_of(logs.begin(), logs.end(), [](double l) { return l == 0.0; })) {
        return;
    }
    std::vector<double> in(logs.begin(), logs.end());
    std::vector<fftw_complex> out(n / 2 + 1);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), out.data(), FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    const double h = two_pi / static_cast<double>(n);
    coeffs_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const cplx x{out[k][0], out[k][1]};
        const cplx lhat = std::polar(1.0, -0.5 * h * static_cast<double>(k)) * x / static_cast<double>(n);
        coeffs_[k] = (k == 0) ? cplx{lhat.real(), 0.0} : 2.0 * lhat;
    }
}

cplx OuterFunction::log_value(cplx z) const {
    cplx s{0.0, 0.0};
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        s = s * z + coeffs_[k];
    }
    return s;
}

cplx OuterFunction::log_derivative(cplx z) const { return log_value_and_derivative(z).second; }

std::pair<cplx, cplx> OuterFunction::log_value_and_derivative(cplx z) const {
    cplx v{0.0, 0.0};
    cplx d{0.0, 0.0};
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        d = d * z + v;
        v = v * z + coeffs_[k];
    }
    return {v, d};
}

double OuterFunction::value_at_zero() const {
    return coeffs_.empty() ? 1.0 : std::exp(coeffs_[0].real());
}

RestrictedOuterValue restricted_outer_modulus(const BoundaryModulusGrid& log_modulus, const ArcSet& e,
                                              const DiskPoint& z, double tol) {
    RestrictedOuterValue out;
    if (e.is_empty()) {
        out.value = 1.0;
        return out;
    }
    const QuadResult re = poisson_integral([&](double t) { return log_modulus.log_value_at(t); }, z, e, tol);
    out.log_modulus = re.value;
    out.quadrature_error = re.error;
    out.value = std::exp(re.value);
    return out;
}

RestrictedOuterValue restricted_outer_eval(const BoundaryModulusGrid& log_modulus, const ArcSet& e,
                                           const DiskPoint& z, double tol) {
    RestrictedOuterValue out = restricted_outer_modulus(log_modulus, e, z, tol);
    if (e.is_empty()) {
        return out;
    }
    const QuadResult im =
        conjugate_poisson_integral([&](double t) { return log_modulus.log_value_at(t); }, z, e, tol);
    out.quadrature_error += im.error;
    out.value = std::exp(cplx{out.log_modulus, im.value});
    return out;
}

DefectValue outerness_defect(const BoundaryModulusGrid& boundary_log_modulus, cplx value_at_z,
                             const DiskPoint& z, double tol) {
    if (!(std::abs(value_at_z) > 0.0)) {
        throw DomainError("outerness_defect: value vanishes at z (inner zero)");
    }
    return outerness_defect([&](double t) { return boundary_log_modulus.log_value_at(t); }, {},
                            std::log(std::abs(value_at_z)), z, tol);
}

DefectValue outerness_defect(const std::function<double(double)>& boundary_log_modulus,
                             const std::vector<double>& singular_angles, double log_value_at_z,
                             const DiskPoint& z, double tol) {
    if (!std::isfinite(log_value_at_z)) {
        throw DomainError("outerness_defect: value vanishes at z (inner zero)");
    }
    const QuadResult r = poisson_integral(boundary_log_modulus, z, ArcSet::full(), tol, singular_angles);
    return {r.value - log_value_at_z, r.error};
}

}  // namespace diskfn
