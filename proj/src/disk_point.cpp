#include "diskfn/disk_point.hpp"

#include <cfloat>
#include <cmath>

namespace diskfn {

namespace {

constexpr double cartesian_margin = 1e-15;

// Offset of the same point expressed relative to another anchor.
cplx rebase(const Anchored& p, double new_anchor) {
    if (p.anchor == new_anchor) {
        return p.offset;
    }
    const double d = std::remainder(p.anchor - new_anchor, two_pi);
    return expm1i(d) + std::polar(1.0, d) * p.offset;
}

cplx anchored_difference(const Anchored& a, const Anchored& b) {
    const cplx ob = rebase(b, a.anchor);
    return std::polar(1.0, a.anchor) * (a.offset - ob);
}

cplx anchored_one_minus_conj_product(const Anchored& a, const Anchored& b) {
    const cplx ob = rebase(b, a.anchor);
    const cplx oa = std::conj(a.offset);
    return -(oa + ob + oa * ob);
}

}  // namespace

cplx Anchored::value() const { return std::polar(1.0, anchor) * (1.0 + offset); }

Anchored anchored_form(const DiskPoint& z) { return {z.anchor(), z.offset()}; }
Anchored anchored_form(const BoundaryPoint& zeta) { return {zeta.angle(), cplx{0.0, 0.0}}; }

Anchored radial_projection(const DiskPoint& z) {
    if (z.one_minus_abs() >= 1.0) {
        throw DomainError("radial projection of 0 is undefined");
    }
    return {z.anchor(), expm1i(z.offset_angle())};
}

cplx difference(const Anchored& a, const Anchored& b) { return anchored_difference(a, b); }

cplx one_minus_conj_product(const Anchored& a, const Anchored& b) {
    return anchored_one_minus_conj_product(a, b);
}

cplx cayley(const DiskPoint& z) {
    const Anchored za = anchored_form(z);
    const cplx one_minus = anchored_difference(Anchored{0.0, {0.0, 0.0}}, za);
    const cplx one_plus = anchored_difference(za, Anchored{pi, {0.0, 0.0}});
    return one_plus / one_minus;
}

double normalize_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw DomainError("angle must be finite");
    }
    double r = std::fmod(angle, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r = 0.0;
    }
    return r;
}

cplx expm1i(double x) {
    const double s = std::sin(0.5 * x);
    return {-2.0 * s * s, std::sin(x)};
}

DiskPoint::DiskPoint(double anchor, cplx offset, double delta)
    : anchor_(anchor), offset_(offset), delta_(delta) {}

DiskPoint::DiskPoint(double re, double im) : DiskPoint(cplx{re, im}) {}

DiskPoint::DiskPoint(cplx z) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || !(r < 1.0 - cartesian_margin)) {
        throw DomainError("DiskPoint requires |z| < 1 - 1e-15");
    }
    anchor_ = r > 0.0 ? std::arg(z) : 0.0;
    offset_ = cplx{r - 1.0, 0.0};
    delta_ = 1.0 - r;
}

DiskPoint DiskPoint::polar(double one_minus_r, double angle) {
    if (!std::isfinite(one_minus_r) || !std::isfinite(angle) || !(one_minus_r >= DBL_MIN) ||
        one_minus_r > 1.0) {
        throw DomainError("DiskPoint::polar requires 1 - r in (0, 1]");
    }
    return DiskPoint(angle, cplx{-one_minus_r, 0.0}, one_minus_r);
}

DiskPoint DiskPoint::anchored(double anchor, cplx offset) {
    if (!std::isfinite(anchor) || !std::isfinite(offset.real()) || !std::isfinite(offset.imag())) {
        throw DomainError("DiskPoint::anchored requires finite input");
    }
    const double modulus = std::abs(1.0 + offset);
    const double delta = -(2.0 * offset.real() + std::norm(offset)) / (1.0 + modulus);
    if (!(delta >= DBL_MIN)) {
        throw DomainError("DiskPoint::anchored: point is not inside the disk");
    }
    return DiskPoint(anchor, offset, delta);
}

DiskPoint DiskPoint::from_right_half_plane(cplx w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || !(w.real() > 0.0)) {
        throw DomainError("from_right_half_plane requires Re w > 0");
    }
    const double wp1 = std::abs(w + 1.0);
    const double modulus = std::abs(w - 1.0) / wp1;
    const double one_minus_abs2 = 4.0 * (w.real() / wp1) / wp1;
    const double delta = one_minus_abs2 / (1.0 + modulus);
    if (!(delta >= DBL_MIN)) {
        throw DomainError("from_right_half_plane: point too close to the circle");
    }
    if (std::abs(w) >= 1.0) {
        return DiskPoint(0.0, -2.0 / (w + 1.0), delta);
    }
    return DiskPoint(pi, -2.0 * w / (1.0 + w), delta);
}

cplx DiskPoint::value() const { return std::polar(1.0, anchor_) * (1.0 + offset_); }

double DiskPoint::offset_angle() const {
    const cplx u = 1.0 + offset_;
    if (u == cplx{0.0, 0.0}) {
        return 0.0;
    }
    return std::atan2(offset_.imag(), 1.0 + offset_.real());
}

BoundaryPoint::BoundaryPoint(double angle) : angle_(normalize_angle(angle)) {}

cplx BoundaryPoint::value() const { return std::polar(1.0, angle_); }

cplx difference(const DiskPoint& a, const DiskPoint& b) {
    return anchored_difference(anchored_form(a), anchored_form(b));
}

cplx difference(const BoundaryPoint& zeta, const DiskPoint& z) {
    return anchored_difference(anchored_form(zeta), anchored_form(z));
}

cplx one_minus_conj_product(const DiskPoint& a, const DiskPoint& b) {
    return anchored_one_minus_conj_product(anchored_form(a), anchored_form(b));
}

cplx one_minus_conj_product(const DiskPoint& a, const BoundaryPoint& zeta) {
    return anchored_one_minus_conj_product(anchored_form(a), anchored_form(zeta));
}

}  // namespace diskfn
