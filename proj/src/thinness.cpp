#include "diskfn/thinness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "diskfn/disk_core.hpp"

namespace diskfn {

namespace {

constexpr double thick_level = 0.95;  // q_k <= 1 - 0.05 counts as liminf evidence
constexpr double shrink = 0.75;

struct Window {
    double min_q = 1.0;
    std::vector<std::size_t> low;  // indices with q <= thick_level
    std::vector<SwEntry> sw;
};

Window late_window(const BlaschkeSpec& seq, std::size_t lo, std::size_t hi, std::size_t prefix,
                   const std::vector<double>& q, const std::vector<double>& n_list) {
    Window w;
    for (std::size_t k = lo; k < hi; ++k) {
        w.min_q = std::min(w.min_q, q[k]);
        if (q[k] <= thick_level) {
            w.low.push_back(k);
        }
    }
    for (double n : n_list) {
        for (std::size_t j = lo; j < hi; ++j) {
            if (seq.zero(j).one_minus_abs() >= 1.0) {
                continue;
            }
            w.sw.push_back({n, j, prefix, sundberg_wolff_ratio(seq, n, j, prefix)});
        }
    }
    return w;
}

double max_ratio(const std::vector<SwEntry>& entries, double n, std::size_t* where = nullptr) {
    double m = 0.0;
    for (const SwEntry& e : entries) {
        if (e.n == n && e.ratio > m) {
            m = e.ratio;
            if (where) *where = e.j;
        }
    }
    return m;
}

}  // namespace

std::string to_string(ThinVerdict v) {
    switch (v) {
        case ThinVerdict::thin: return "thin";
        case ThinVerdict::thick: return "thick";
        default: return "inconclusive";
    }
}

double thin_quantity(const BlaschkeSpec& seq, std::size_t k, std::size_t prefix) {
    if (k >= prefix || prefix > seq.size()) {
        throw DomainError("thin_quantity: need k < prefix <= available zeros");
    }
    const DiskPoint& zk = seq.zero(k);
    double log_q = 0.0;
    for (std::size_t j = 0; j < prefix; ++j) {
        if (j == k) {
            continue;
        }
        const double gap = one_minus_rho2(seq.zero(j), zk);
        if (gap >= 1.0) {
            return 0.0;  // coincident points
        }
        log_q += 0.5 * std::log1p(-gap);
    }
    return std::exp(log_q);
}

double chordal_arc_measure(const DiskPoint& a, double n) {
    const double delta = a.one_minus_abs();
    const double r = n * delta;
    const double s = (r * r - delta * delta) / (4.0 * (1.0 - delta));
    if (s <= 0.0) {
        return 0.0;
    }
    if (s >= 1.0) {
        return 1.0;
    }
    return 2.0 * std::asin(std::sqrt(s)) / pi;
}

double sundberg_wolff_ratio(const BlaschkeSpec& seq, double n, std::size_t j, std::size_t prefix) {
    if (!(n > 1.0)) {
        throw DomainError("sundberg_wolff_ratio needs N > 1");
    }
    if (j >= prefix || prefix > seq.size()) {
        throw DomainError("sundberg_wolff_ratio: need j < prefix <= available zeros");
    }
    const DiskPoint& aj = seq.zero(j);
    if (aj.one_minus_abs() >= 1.0) {
        throw DomainError("sundberg_wolff_ratio: a_j = 0 has no radial projection");
    }
    const double dj = aj.one_minus_abs();
    const double radius = n * dj;
    const double m = chordal_arc_measure(aj, n);
    const Anchored aj_form = anchored_form(aj);
    double sum = 0.0;
    for (std::size_t k = 0; k < prefix; ++k) {
        if (k == j) {
            continue;
        }
        const DiskPoint& ak = seq.zero(k);
        if (ak.one_minus_abs() >= 1.0 || ak.one_minus_abs() > m) {
            continue;
        }
        if (std::abs(difference(radial_projection(ak), aj_form)) <= radius) {
            sum += ak.one_minus_abs();
        }
    }
    return sum / dj;
}

ThinnessReport classify(const BlaschkeSpec& seq, std::size_t prefix, const std::vector<double>& n_list) {
    if (prefix < 20) {
        throw DomainError("classify needs prefix_count >= 20");
    }
    if (seq.size() < 2 * prefix) {
        throw DomainError("classify needs 2 * prefix_count zeros for the doubling check");
    }
    ThinnessReport rep;
    rep.prefix = prefix;
    for (std::size_t k = 0; k < prefix; ++k) {
        rep.q.push_back(thin_quantity(seq, k, prefix));
    }
    for (std::size_t k = 0; k < 2 * prefix; ++k) {
        rep.q_doubled.push_back(thin_quantity(seq, k, 2 * prefix));
    }
    const Window w1 = late_window(seq, prefix / 2, prefix, prefix, rep.q, n_list);
    const Window w2 = late_window(seq, prefix, 2 * prefix, 2 * prefix, rep.q_doubled, n_list);
    rep.sw = w1.sw;
    rep.sw_doubled = w2.sw;
    rep.min_q_late = w1.min_q;
    rep.min_q_late_doubled = w2.min_q;
    rep.delta_evidence = 1.0 - w2.min_q;

    const double eps1 = 1.0 - w1.min_q;
    const double eps2 = 1.0 - w2.min_q;
    const bool eps_shrinks = eps2 <= shrink * eps1;

    bool all_sw_shrink = true;
    double witness = 0.0;
    std::size_t witness_j = 0;
    for (double n : n_list) {
        const double r1 = max_ratio(w1.sw, n);
        std::size_t j2 = 0;
        const double r2 = max_ratio(w2.sw, n, &j2);
        const bool shrinks = r2 < 1e-12 || r2 <= shrink * r1;
        all_sw_shrink = all_sw_shrink && shrinks;
        if (!shrinks && witness == 0.0) {
            witness = n;
            witness_j = j2;
        }
    }

    if (eps_shrinks && w2.min_q >= thick_level && all_sw_shrink) {
        rep.verdict = ThinVerdict::thin;
        rep.reason = "1 - q_k shrinks under prefix doubling and every Sundberg-Wolff ratio decays";
    } else if (!w1.low.empty() && !w2.low.empty()) {
        rep.verdict = ThinVerdict::thick;
        rep.evidence = w2.low;
        rep.reason = "q_k <= 0.95 persists in the late windows of both prefixes";
    } else if (witness > 0.0 && !eps_shrinks) {
        rep.verdict = ThinVerdict::thick;
        rep.sw_witness_n = witness;
        rep.evidence = {witness_j};
        rep.reason = "Sundberg-Wolff ratio stays positive under prefix doubling while 1 - q_k does not shrink";
    } else {
        rep.verdict = ThinVerdict::inconclusive;
        rep.reason = "prefix doubling does not stabilize either criterion";
    }
    return rep;
}

nlohmann::json ThinnessReport::to_json() const {
    nlohmann::json j;
    j["prefix"] = prefix;
    j["q"] = q;
    j["q_doubled"] = q_doubled;
    auto sw_json = [](const std::vector<SwEntry>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const SwEntry& e : v) a.push_back({{"N", e.n}, {"j", e.j}, {"prefix", e.prefix}, {"ratio", e.ratio}});
        return a;
    };
    j["sundberg_wolff"] = sw_json(sw);
    j["sundberg_wolff_doubled"] = sw_json(sw_doubled);
    j["min_q_late"] = min_q_late;
    j["min_q_late_doubled"] = min_q_late_doubled;
    j["verdict"] = to_string(verdict);
    j["evidence"] = evidence;
    j["delta_evidence"] = delta_evidence;
    j["sw_witness_N"] = sw_witness_n;
    j["reason"] = reason;
    return j;
}

void ThinnessReport::write_q_csv(std::ostream& out) const {
    out << "k,q_k\n" << std::setprecision(17);
    for (std::size_t k = 0; k < q_doubled.size(); ++k) {
        out << k << ',' << q_doubled[k] << '\n';
    }
}

void ThinnessReport::write_sw_csv(std::ostream& out) const {
    out << "N,j,R\n" << std::setprecision(17);
    for (const auto* v : {&sw, &sw_doubled}) {
        for (const SwEntry& e : *v) {
            out << e.n << ',' << e.j << ',' << e.ratio << '\n';
        }
    }
}

}  // namespace diskfn
