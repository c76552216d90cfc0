#include "diskfn/sampling.hpp"

#include <cmath>

namespace diskfn {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

DiskPoint random_disk_point(Rng& rng, double r_max) {
    const double r = r_max * std::sqrt(uniform(rng, 0.0, 1.0));
    const double t = uniform(rng, 0.0, two_pi);
    return DiskPoint::polar(1.0 - r, t);
}

PolySpec random_polynomial(Rng& rng, int degree) {
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    for (cplx& x : c) {
        x = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    }
    // a tiny leading coefficient just pushes roots to infinity
    while (std::abs(c.back()) < 0.1) {
        c.back() = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    }
    return PolySpec(std::move(c));
}

BlaschkeSpec random_finite_blaschke(Rng& rng, std::size_t n, double r_max) {
    std::vector<DiskPoint> zeros;
    for (std::size_t i = 0; i < n; ++i) {
        zeros.push_back(random_disk_point(rng, r_max));
    }
    return BlaschkeSpec::finite(std::move(zeros));
}

BoundaryModulusGrid random_smooth_outer(Rng& rng, std::size_t grid_n, int modes) {
    std::vector<double> amp, phase;
    double total = 0.0;
    for (int k = 1; k <= modes; ++k) {
        amp.push_back(uniform(rng, 0.0, 0.5) / k);
        phase.push_back(uniform(rng, 0.0, two_pi));
        total += amp.back();
    }
    const double a0 = total + uniform(rng, 0.0, 0.3);
    auto profile = [amp, phase, a0](double t) {
        double s = a0;
        for (std::size_t k = 0; k < amp.size(); ++k) {
            s += amp[k] * std::cos(static_cast<double>(k + 1) * t + phase[k]);
        }
        return -s;
    };
    return BoundaryModulusGrid::from_log_profile(profile, grid_n, std::log(BoundaryModulusGrid::default_floor));
}

BoundaryModulusGrid random_outer_unimodular_on(Rng& rng, const Arc& e, std::size_t grid_n) {
    const double b = uniform(rng, -1.0, 1.0);
    const double a = std::abs(b) + uniform(rng, 0.05, 1.5);
    const double k = static_cast<double>(std::uniform_int_distribution<int>(1, 3)(rng));
    const double phi = uniform(rng, 0.0, two_pi);
    const double gap = two_pi - e.length();
    auto profile = [=](double t) {
        const double u = normalize_angle(t - e.end) / gap;
        if (u >= 1.0) {
            return 0.0;
        }
        const double s = std::sin(pi * u);
        return -s * s * s * s * (a + b * std::cos(two_pi * k * u + phi));
    };
    return BoundaryModulusGrid::from_log_profile(profile, grid_n, std::log(BoundaryModulusGrid::default_floor));
}

FactoredFunction random_unit_norm_function(Rng& rng, const RandomFunctionOptions& opt) {
    const auto degree = std::uniform_int_distribution<std::size_t>(0, opt.max_degree)(rng);
    BlaschkeSpec b = random_finite_blaschke(rng, degree, 0.9);
    std::vector<Atom> atoms;
    if (opt.atoms) {
        const auto count = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int i = 0; i < count; ++i) {
            double t = uniform(rng, 0.0, two_pi);
            if (opt.has_arc) {
                t = opt.unimodular_on.end + uniform(rng, 0.1, 0.9) * (two_pi - opt.unimodular_on.length());
            }
            atoms.push_back({BoundaryPoint(t), uniform(rng, 0.01, 0.5)});
        }
    }
    BoundaryModulusGrid outer = opt.has_arc ? random_outer_unimodular_on(rng, opt.unimodular_on, opt.grid_n)
                                            : random_smooth_outer(rng, opt.grid_n);
    return FactoredFunction(std::move(b), AtomicMeasure(std::move(atoms)), std::move(outer), 1e-12, true);
}

}  // namespace diskfn
