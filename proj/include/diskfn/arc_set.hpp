#pragma once

#include <vector>

#include "diskfn/types.hpp"

namespace diskfn {

/// Counterclockwise arc from `start` to `end`, 0 <= start < 2 pi,
/// start < end <= start + 2 pi.
struct Arc {
    double start = 0.0;
    double end = 0.0;
    double length() const { return end - start; }
};

/// Finite union of disjoint arcs of the unit circle.
///
/// Arcs are half-open [start, end) unless the set was produced by
/// `essential_interior`, in which case they are open.  Abutting and
/// overlapping arcs are merged on construction, and the arc list is sorted by
/// start angle.  Endpoint doubles are kept exactly as supplied whenever no
/// reduction modulo 2 pi is needed.
class ArcSet {
public:
    ArcSet() = default;

    static ArcSet empty() { return ArcSet(); }
    static ArcSet full();
    /// Arc traversed counterclockwise from `start` to `end`; end - start >= 2 pi
    /// gives the full circle and end <= start is rejected.
    static ArcSet arc(double start, double end);
    static ArcSet from_arcs(std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool is_empty() const { return arcs_.empty(); }
    bool is_full() const { return full_; }
    bool is_open() const { return open_; }

    /// Normalized Lebesgue measure, in [0, 1].
    double measure() const;
    /// Membership with the set's own endpoint convention.
    bool contains(double angle) const;
    /// True iff the angle is a topological interior point of the set.
    bool interior_contains(double angle) const;

    ArcSet complement() const;
    ArcSet unite(const ArcSet& other) const;
    /// Same arcs, flagged open (endpoints excluded).
    ArcSet interior() const;

private:
    std::vector<Arc> arcs_;
    bool full_ = false;
    bool open_ = false;
};

}  // namespace diskfn
