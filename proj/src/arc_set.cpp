#include "diskfn/arc_set.hpp"

#include <algorithm>
#include <cmath>

#include "diskfn/disk_point.hpp"

namespace diskfn {

namespace {

Arc reduced(Arc a) {
    if (a.start < 0.0 || a.start >= two_pi) {
        const double s = normalize_angle(a.start);
        a.end = s + (a.end - a.start);
        a.start = s;
    }
    return a;
}

bool offset_inside(const Arc& a, double angle, bool open) {
    double d = angle - a.start;
    if (d < 0.0) {
        d += two_pi;
    }
    return open ? (d > 0.0 && d < a.length()) : (d < a.length());
}

}  // namespace

ArcSet ArcSet::full() {
    ArcSet s;
    s.arcs_ = {Arc{0.0, two_pi}};
    s.full_ = true;
    return s;
}

ArcSet ArcSet::arc(double start, double end) {
    if (!std::isfinite(start) || !std::isfinite(end) || !(end > start)) {
        throw DomainError("ArcSet::arc requires finite start < end");
    }
    return from_arcs({Arc{start, end}});
}

ArcSet ArcSet::from_arcs(std::vector<Arc> arcs) {
    ArcSet s;
    for (Arc& a : arcs) {
        if (!std::isfinite(a.start) || !std::isfinite(a.end) || !(a.end > a.start)) {
            throw DomainError("ArcSet: every arc needs finite start < end");
        }
        if (a.length() >= two_pi) {
            return full();
        }
        a = reduced(a);
    }
    if (arcs.empty()) {
        return s;
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
    std::vector<Arc> merged{arcs.front()};
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        Arc& cur = merged.back();
        if (arcs[i].start <= cur.end) {
            cur.end = std::max(cur.end, arcs[i].end);
        } else {
            merged.push_back(arcs[i]);
        }
    }
    // the last arc may run past 2 pi into the first ones
    while (merged.size() > 1 && merged.back().end - two_pi >= merged.front().start) {
        merged.back().end = std::max(merged.back().end, merged.front().end + two_pi);
        merged.erase(merged.begin());
    }
    if (merged.back().length() >= two_pi) {
        return full();
    }
    s.arcs_ = std::move(merged);
    return s;
}

double ArcSet::measure() const {
    if (full_) {
        return 1.0;
    }
    double total = 0.0;
    for (const Arc& a : arcs_) {
        total += a.length();
    }
    return std::min(1.0, total / two_pi);
}

bool ArcSet::contains(double angle) const {
    if (full_) {
        return true;
    }
    const double t = normalize_angle(angle);
    return std::any_of(arcs_.begin(), arcs_.end(),
                       [&](const Arc& a) { return offset_inside(a, t, open_); });
}

bool ArcSet::interior_contains(double angle) const {
    if (full_) {
        return true;
    }
    const double t = normalize_angle(angle);
    return std::any_of(arcs_.begin(), arcs_.end(),
                       [&](const Arc& a) { return offset_inside(a, t, true); });
}

ArcSet ArcSet::complement() const {
    if (full_) {
        return ArcSet();
    }
    if (arcs_.empty()) {
        return full();
    }
    ArcSet s;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const double from = arcs_[i].end;
        const double to = (i + 1 < arcs_.size()) ? arcs_[i + 1].start : arcs_.front().start + two_pi;
        if (to > from) {
            Arc gap{from, to};
            if (gap.start >= two_pi) {
                gap.start -= two_pi;
                gap.end -= two_pi;
            }
            s.arcs_.push_back(gap);
        }
    }
    std::sort(s.arcs_.begin(), s.arcs_.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    // complement of an open set is closed; half-open is the nearest we carry
    return s;
}

ArcSet ArcSet::unite(const ArcSet& other) const {
    if (full_ || other.full_) {
        return full();
    }
    std::vector<Arc> all = arcs_;
    all.insert(all.end(), other.arcs_.begin(), other.arcs_.end());
    return from_arcs(std::move(all));
}

ArcSet ArcSet::interior() const {
    ArcSet s = *this;
    s.open_ = true;
    return s;
}

}  // namespace diskfn
