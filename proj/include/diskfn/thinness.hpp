#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "diskfn/blaschke.hpp"

namespace diskfn {

enum class ThinVerdict { thin, thick, inconclusive };
std::string to_string(ThinVerdict v);

/// q_k = prod_{j != k, j < prefix} rho(z_j, z_k).
double thin_quantity(const BlaschkeSpec& seq, std::size_t k, std::size_t prefix);

/// Normalized length of the chordal arc {zeta : |zeta - a| <= n (1 - |a|)}.
double chordal_arc_measure(const DiskPoint& a, double n);

/// (1 - |a_j|)^{-1} sum_{k in K(N, j)} (1 - |a_k|) over k < prefix, k != j.
double sundberg_wolff_ratio(const BlaschkeSpec& seq, double n, std::size_t j, std::size_t prefix);

struct SwEntry {
    double n = 0.0;
    std::size_t j = 0;
    std::size_t prefix = 0;
    double ratio = 0.0;
};

struct ThinnessReport {
    std::size_t prefix = 0;
    std::vector<double> q;          // q_k over prefix P, k < P
    std::vector<double> q_doubled;  // q_k over prefix 2P, k < 2P
    std::vector<SwEntry> sw;        // late window of P
    std::vector<SwEntry> sw_doubled;
    double min_q_late = 0.0;          // min over k in [P/2, P)
    double min_q_late_doubled = 0.0;  // min over k in [P, 2P)
    ThinVerdict verdict = ThinVerdict::inconclusive;
    std::vector<std::size_t> evidence;
    double delta_evidence = 0.0;
    double sw_witness_n = 0.0;  // 0 when no Sundberg-Wolff witness
    std::string reason;

    nlohmann::json to_json() const;
    void write_q_csv(std::ostream& out) const;
    void write_sw_csv(std::ostream& out) const;
};

/// Prefix-doubling classification; needs 2 * prefix zeros and prefix >= 20.
ThinnessReport classify(const BlaschkeSpec& seq, std::size_t prefix,
                        const std::vector<double>& n_list = {2.0, 5.0, 10.0, 20.0});

}  // namespace diskfn
