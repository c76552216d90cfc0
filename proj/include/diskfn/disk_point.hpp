#pragma once

#include "diskfn/types.hpp"

namespace diskfn {

/// A point of the open unit disk.
///
/// Stored as z = e^{i anchor} (1 + offset) together with 1 - |z|.  Points built
/// from Cartesian input use anchor = arg z; points built with `polar`,
/// `anchored` or `from_right_half_plane` keep the small offset from a boundary
/// anchor exactly, so quantities such as 1 - |z|, z - w and 1 - conj(w) z stay
/// accurate for points far closer to the circle than machine epsilon.
class DiskPoint {
public:
    /// Cartesian construction; rejects |z| >= 1 - 1e-15.
    DiskPoint(double re, double im);
    explicit DiskPoint(cplx z);

    /// z = (1 - one_minus_r) e^{i angle}, one_minus_r in (0, 1].
    static DiskPoint polar(double one_minus_r, double angle);
    /// z = e^{i anchor} (1 + offset); requires |1 + offset| < 1.
    static DiskPoint anchored(double anchor, cplx offset);
    /// Cayley preimage z = (w - 1)/(w + 1) of a right half-plane point w.
    static DiskPoint from_right_half_plane(cplx w);

    cplx value() const;
    double re() const { return value().real(); }
    double im() const { return value().imag(); }
    double abs() const { return 1.0 - delta_; }
    /// 1 - |z|, accurate to relative precision.
    double one_minus_abs() const { return delta_; }
    /// 1 - |z|^2.
    double one_minus_abs2() const { return delta_ * (2.0 - delta_); }
    double anchor() const { return anchor_; }
    cplx offset() const { return offset_; }
    /// Argument measured from the anchor: arg z = anchor + offset_angle.
    double offset_angle() const;
    double arg() const { return anchor_ + offset_angle(); }

private:
    DiskPoint(double anchor, cplx offset, double delta);
    double anchor_ = 0.0;
    cplx offset_{-1.0, 0.0};
    double delta_ = 1.0;
};

/// A point e^{i angle} of the unit circle, angle normalized to [0, 2 pi).
class BoundaryPoint {
public:
    BoundaryPoint() = default;
    explicit BoundaryPoint(double angle);
    double angle() const { return angle_; }
    cplx value() const;

private:
    double angle_ = 0.0;
};

/// z = e^{i anchor} (1 + offset); a bare representation that may also sit on
/// the circle (used for radial projections and boundary points).
struct Anchored {
    double anchor = 0.0;
    cplx offset{0.0, 0.0};
    cplx value() const;
};

Anchored anchored_form(const DiskPoint& z);
Anchored anchored_form(const BoundaryPoint& zeta);
/// z / |z| for z != 0, keeping the anchor of z.
Anchored radial_projection(const DiskPoint& z);

/// a - b and 1 - conj(a) b for anchored representations.
cplx difference(const Anchored& a, const Anchored& b);
cplx one_minus_conj_product(const Anchored& a, const Anchored& b);

/// (1 + z)/(1 - z), the Cayley image in the right half-plane.
cplx cayley(const DiskPoint& z);

/// Normalizes an angle to [0, 2 pi).
double normalize_angle(double angle);

/// e^{ix} - 1 without cancellation.
cplx expm1i(double x);

/// a - b, computed in a common anchor frame.
cplx difference(const DiskPoint& a, const DiskPoint& b);
/// zeta - z.
cplx difference(const BoundaryPoint& zeta, const DiskPoint& z);
/// 1 - conj(a) b.
cplx one_minus_conj_product(const DiskPoint& a, const DiskPoint& b);
/// 1 - conj(a) zeta.
cplx one_minus_conj_product(const DiskPoint& a, const BoundaryPoint& zeta);

}  // namespace diskfn
