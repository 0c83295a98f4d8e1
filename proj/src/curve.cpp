#include "zkplab/curve.hpp"

#include "zkplab/errors.hpp"

namespace zkplab {

const char* coord_form_name(CoordForm f) {
    switch (f) {
        case CoordForm::Affine: return "affine";
        case CoordForm::Jacobian: return "jacobian";
        case CoordForm::Xyzz: return "xyzz";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// CurveParams / CurvePoint
// ---------------------------------------------------------------------------

CurveParams CurveParams::create(const FieldParams& fq, const FieldParams& fr,
                                const FieldElement& a4, const FieldElement& b,
                                const FieldElement& gen_x, const FieldElement& gen_y,
                                std::string name) {
    CurveParams c;
    c.name = std::move(name);
    c.fq = &fq;
    c.fr = &fr;
    c.a4 = a4;
    c.b = b;
    c.gen_x = gen_x;
    c.gen_y = gen_y;

    OpCounters scratch;
    // Nonsingular: 4*a4^3 + 27*b^2 != 0. Small constants are built by field
    // doubling so they reduce correctly even in tiny fields.
    FieldElement one = FieldElement::one(fq);
    FieldElement four = ff_dbl(ff_dbl(one, scratch), scratch);
    FieldElement a3 = ff_mul(ff_sqr(a4, scratch), a4, scratch);
    FieldElement t = ff_mul(four, a3, scratch);
    FieldElement b2 = ff_sqr(b, scratch);
    FieldElement twentyseven =
        ff_sub(ff_dbl(ff_dbl(ff_dbl(ff_dbl(ff_dbl(one, scratch), scratch), scratch), scratch),
                      scratch),
               ff_add(four, one, scratch), scratch);  // 32 - 5
    FieldElement disc = ff_add(t, ff_mul(twentyseven, b2, scratch), scratch);
    if (disc.is_zero())
        throw UsageError("singular curve: " + c.name);

    CurvePoint g = CurvePoint::affine(gen_x, gen_y);
    if (!is_on_curve(g, c, scratch))
        throw UsageError("curve generator is not on the curve: " + c.name);
    return c;
}

bool CurveParams::same_curve(const CurveParams& o) const {
    if (this == &o) return true;
    return fq->same_field(*o.fq) && a4 == o.a4 && b == o.b;
}

CurvePoint CurvePoint::identity(CoordForm form, const CurveParams& c) {
    CurvePoint p;
    p.form_ = form;
    p.identity_ = true;
    p.x_ = FieldElement::zero(*c.fq);
    p.y_ = FieldElement::zero(*c.fq);
    p.z_ = FieldElement::zero(*c.fq);
    p.w_ = FieldElement::zero(*c.fq);
    return p;
}

CurvePoint CurvePoint::affine(const FieldElement& x, const FieldElement& y) {
    CurvePoint p;
    p.form_ = CoordForm::Affine;
    p.identity_ = false;
    p.x_ = x;
    p.y_ = y;
    return p;
}

CurvePoint CurvePoint::jacobian(const FieldElement& x, const FieldElement& y,
                                const FieldElement& z) {
    CurvePoint p;
    p.form_ = CoordForm::Jacobian;
    p.identity_ = z.is_zero();
    p.x_ = x;
    p.y_ = y;
    p.z_ = z;
    return p;
}

CurvePoint CurvePoint::xyzz(const FieldElement& x, const FieldElement& y, const FieldElement& zz,
                            const FieldElement& zzz) {
    CurvePoint p;
    p.form_ = CoordForm::Xyzz;
    p.identity_ = zz.is_zero();
    p.x_ = x;
    p.y_ = y;
    p.z_ = zz;
    p.w_ = zzz;
    return p;
}

bool CurvePoint::is_normalized() const {
    switch (form_) {
        case CoordForm::Affine: return true;
        case CoordForm::Jacobian: return z_.is_one();
        case CoordForm::Xyzz: return z_.is_one() && w_.is_one();
    }
    return false;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.form_ != b.form_ || a.identity_ != b.identity_) return false;
    if (a.identity_) return true;
    if (!(a.x_ == b.x_) || !(a.y_ == b.y_)) return false;
    if (a.form_ == CoordForm::Jacobian) return a.z_ == b.z_;
    if (a.form_ == CoordForm::Xyzz) return a.z_ == b.z_ && a.w_ == b.w_;
    return true;
}

namespace {

void check_point(const CurvePoint& p, const CurveParams& c) {
    if (!p.is_identity() && !p.x().params().same_field(*c.fq))
        throw UsageError("point does not belong to this curve's base field");
}

// ---------------------------------------------------------------------------
// Addition formulas. Each generic path executes a fixed schedule; exceptional
// operands (identity, P == Q, P == -Q) are recognized from raw coordinate
// checks or from the first formula intermediates, before the rest runs.
// ---------------------------------------------------------------------------

CurvePoint padd_affine(const CurvePoint& p, const CurvePoint& q, const CurveParams& c,
                       OpCounters& ctr) {
    if (p.x() == q.x()) {
        if (p.y() == q.y()) return pdbl(p, c, ctr);  // same point
        return CurvePoint::identity(CoordForm::Affine, c);  // inverse pair
    }
    FieldElement num = ff_sub(q.y(), p.y(), ctr);
    FieldElement den = ff_sub(q.x(), p.x(), ctr);
    FieldElement lam = ff_mul(num, ff_inv(den, ctr), ctr);
    FieldElement x3 = ff_mul(lam, lam, ctr);
    x3 = ff_sub(x3, p.x(), ctr);
    x3 = ff_sub(x3, q.x(), ctr);
    FieldElement y3 = ff_mul(lam, ff_sub(p.x(), x3, ctr), ctr);
    y3 = ff_sub(y3, p.y(), ctr);
    return CurvePoint::affine(x3, y3);
}

CurvePoint pdbl_affine(const CurvePoint& p, const CurveParams& c, OpCounters& ctr) {
    if (p.y().is_zero()) return CurvePoint::identity(CoordForm::Affine, c);
    FieldElement xx = ff_sqr(p.x(), ctr);
    FieldElement num = ff_dbl(xx, ctr);
    num = ff_add(num, xx, ctr);
    num = ff_add(num, c.a4, ctr);  // charged even for a4 == 0
    FieldElement den = ff_dbl(p.y(), ctr);
    FieldElement lam = ff_mul(num, ff_inv(den, ctr), ctr);
    FieldElement x3 = ff_sqr(lam, ctr);
    x3 = ff_sub(x3, p.x(), ctr);
    x3 = ff_sub(x3, p.x(), ctr);
    FieldElement y3 = ff_mul(lam, ff_sub(p.x(), x3, ctr), ctr);
    y3 = ff_sub(y3, p.y(), ctr);
    return CurvePoint::affine(x3, y3);
}

// Mixed Jacobian addition (q lifted from affine, Z2 == 1): 7M + 4S.
CurvePoint padd_jacobian_mixed(const CurvePoint& p, const CurvePoint& q, const CurveParams& c,
                               OpCounters& ctr) {
    FieldElement z1z1 = ff_sqr(p.z(), ctr);
    FieldElement u2 = ff_mul(q.x(), z1z1, ctr);
    FieldElement s2 = ff_mul(ff_mul(q.y(), p.z(), ctr), z1z1, ctr);
    FieldElement h = ff_sub(u2, p.x(), ctr);
    FieldElement rh = ff_sub(s2, p.y(), ctr);
    if (h.is_zero()) {
        if (rh.is_zero()) return pdbl(p, c, ctr);
        return CurvePoint::identity(CoordForm::Jacobian, c);
    }
    FieldElement r = ff_dbl(rh, ctr);
    FieldElement hh = ff_sqr(h, ctr);
    FieldElement i = ff_dbl(ff_dbl(hh, ctr), ctr);
    FieldElement j = ff_mul(h, i, ctr);
    FieldElement v = ff_mul(p.x(), i, ctr);
    FieldElement x3 = ff_sqr(r, ctr);
    x3 = ff_sub(x3, j, ctr);
    x3 = ff_sub(x3, ff_dbl(v, ctr), ctr);
    FieldElement y3 = ff_mul(r, ff_sub(v, x3, ctr), ctr);
    y3 = ff_sub(y3, ff_dbl(ff_mul(p.y(), j, ctr), ctr), ctr);
    FieldElement z3 = ff_sqr(ff_add(p.z(), h, ctr), ctr);
    z3 = ff_sub(z3, z1z1, ctr);
    z3 = ff_sub(z3, hh, ctr);
    return CurvePoint::jacobian(x3, y3, z3);
}

// Full Jacobian addition: 11M + 5S.
CurvePoint padd_jacobian_full(const CurvePoint& p, const CurvePoint& q, const CurveParams& c,
                              OpCounters& ctr) {
    FieldElement z1z1 = ff_sqr(p.z(), ctr);
    FieldElement z2z2 = ff_sqr(q.z(), ctr);
    FieldElement u1 = ff_mul(p.x(), z2z2, ctr);
    FieldElement u2 = ff_mul(q.x(), z1z1, ctr);
    FieldElement s1 = ff_mul(ff_mul(p.y(), q.z(), ctr), z2z2, ctr);
    FieldElement s2 = ff_mul(ff_mul(q.y(), p.z(), ctr), z1z1, ctr);
    FieldElement h = ff_sub(u2, u1, ctr);
    FieldElement rh = ff_sub(s2, s1, ctr);
    if (h.is_zero()) {
        if (rh.is_zero()) return pdbl(p, c, ctr);
        return CurvePoint::identity(CoordForm::Jacobian, c);
    }
    FieldElement r = ff_dbl(rh, ctr);
    FieldElement i = ff_sqr(ff_dbl(h, ctr), ctr);
    FieldElement j = ff_mul(h, i, ctr);
    FieldElement v = ff_mul(u1, i, ctr);
    FieldElement x3 = ff_sqr(r, ctr);
    x3 = ff_sub(x3, j, ctr);
    x3 = ff_sub(x3, ff_dbl(v, ctr), ctr);
    FieldElement y3 = ff_mul(r, ff_sub(v, x3, ctr), ctr);
    y3 = ff_sub(y3, ff_dbl(ff_mul(s1, j, ctr), ctr), ctr);
    FieldElement z3 = ff_sqr(ff_add(p.z(), q.z(), ctr), ctr);
    z3 = ff_sub(z3, z1z1, ctr);
    z3 = ff_sub(z3, z2z2, ctr);
    z3 = ff_mul(z3, h, ctr);
    return CurvePoint::jacobian(x3, y3, z3);
}

CurvePoint pdbl_jacobian(const CurvePoint& p, const CurveParams& c, OpCounters& ctr) {
    if (p.y().is_zero()) return CurvePoint::identity(CoordForm::Jacobian, c);
    if (c.a4.is_zero()) {
        // 2M + 5S schedule for a == 0.
        FieldElement a = ff_sqr(p.x(), ctr);
        FieldElement b = ff_sqr(p.y(), ctr);
        FieldElement cc = ff_sqr(b, ctr);
        FieldElement d = ff_sqr(ff_add(p.x(), b, ctr), ctr);
        d = ff_sub(d, a, ctr);
        d = ff_sub(d, cc, ctr);
        d = ff_dbl(d, ctr);
        FieldElement e = ff_add(ff_dbl(a, ctr), a, ctr);
        FieldElement f = ff_sqr(e, ctr);
        FieldElement x3 = ff_sub(f, d, ctr);
        x3 = ff_sub(x3, d, ctr);
        FieldElement y3 = ff_mul(e, ff_sub(d, x3, ctr), ctr);
        FieldElement c8 = ff_dbl(ff_dbl(ff_dbl(cc, ctr), ctr), ctr);
        y3 = ff_sub(y3, c8, ctr);
        FieldElement z3 = ff_dbl(ff_mul(p.y(), p.z(), ctr), ctr);
        return CurvePoint::jacobian(x3, y3, z3);
    }
    // General-a schedule (only non-preset curves take this path).
    FieldElement xx = ff_sqr(p.x(), ctr);
    FieldElement yy = ff_sqr(p.y(), ctr);
    FieldElement yyyy = ff_sqr(yy, ctr);
    FieldElement zz = ff_sqr(p.z(), ctr);
    FieldElement s = ff_sqr(ff_add(p.x(), yy, ctr), ctr);
    s = ff_sub(s, xx, ctr);
    s = ff_sub(s, yyyy, ctr);
    s = ff_dbl(s, ctr);
    FieldElement m = ff_add(ff_dbl(xx, ctr), xx, ctr);
    m = ff_add(m, ff_mul(c.a4, ff_sqr(zz, ctr), ctr), ctr);
    FieldElement x3 = ff_sub(ff_sqr(m, ctr), ff_dbl(s, ctr), ctr);
    FieldElement y3 = ff_mul(m, ff_sub(s, x3, ctr), ctr);
    y3 = ff_sub(y3, ff_dbl(ff_dbl(ff_dbl(yyyy, ctr), ctr), ctr), ctr);
    FieldElement z3 = ff_sqr(ff_add(p.y(), p.z(), ctr), ctr);
    z3 = ff_sub(z3, yy, ctr);
    z3 = ff_sub(z3, zz, ctr);
    return CurvePoint::jacobian(x3, y3, z3);
}

// Mixed XYZZ addition (q lifted from affine, ZZ2 == ZZZ2 == 1): 8M + 2S.
CurvePoint padd_xyzz_mixed(const CurvePoint& p, const CurvePoint& q, const CurveParams& c,
                           OpCounters& ctr) {
    FieldElement u2 = ff_mul(q.x(), p.zz(), ctr);
    FieldElement s2 = ff_mul(q.y(), p.zzz(), ctr);
    FieldElement pp = ff_sub(u2, p.x(), ctr);
    FieldElement r = ff_sub(s2, p.y(), ctr);
    if (pp.is_zero()) {
        if (r.is_zero()) return pdbl(p, c, ctr);
        return CurvePoint::identity(CoordForm::Xyzz, c);
    }
    FieldElement pp2 = ff_sqr(pp, ctr);
    FieldElement pp3 = ff_mul(pp, pp2, ctr);
    FieldElement q_ = ff_mul(p.x(), pp2, ctr);
    FieldElement x3 = ff_sqr(r, ctr);
    x3 = ff_sub(x3, pp3, ctr);
    x3 = ff_sub(x3, ff_dbl(q_, ctr), ctr);
    FieldElement y3 = ff_mul(r, ff_sub(q_, x3, ctr), ctr);
    y3 = ff_sub(y3, ff_mul(p.y(), pp3, ctr), ctr);
    FieldElement zz3 = ff_mul(p.zz(), pp2, ctr);
    FieldElement zzz3 = ff_mul(p.zzz(), pp3, ctr);
    return CurvePoint::xyzz(x3, y3, zz3, zzz3);
}

// Full XYZZ addition: 12M + 2S.
CurvePoint padd_xyzz_full(const CurvePoint& p, const CurvePoint& q, const CurveParams& c,
                          OpCounters& ctr) {
    FieldElement u1 = ff_mul(p.x(), q.zz(), ctr);
    FieldElement u2 = ff_mul(q.x(), p.zz(), ctr);
    FieldElement s1 = ff_mul(p.y(), q.zzz(), ctr);
    FieldElement s2 = ff_mul(q.y(), p.zzz(), ctr);
    FieldElement pp = ff_sub(u2, u1, ctr);
    FieldElement r = ff_sub(s2, s1, ctr);
    if (pp.is_zero()) {
        if (r.is_zero()) return pdbl(p, c, ctr);
        return CurvePoint::identity(CoordForm::Xyzz, c);
    }
    FieldElement pp2 = ff_sqr(pp, ctr);
    FieldElement pp3 = ff_mul(pp, pp2, ctr);
    FieldElement q_ = ff_mul(u1, pp2, ctr);
    FieldElement x3 = ff_sqr(r, ctr);
    x3 = ff_sub(x3, pp3, ctr);
    x3 = ff_sub(x3, ff_dbl(q_, ctr), ctr);
    FieldElement y3 = ff_mul(r, ff_sub(q_, x3, ctr), ctr);
    y3 = ff_sub(y3, ff_mul(s1, pp3, ctr), ctr);
    FieldElement zz3 = ff_mul(ff_mul(p.zz(), q.zz(), ctr), pp2, ctr);
    FieldElement zzz3 = ff_mul(ff_mul(p.zzz(), q.zzz(), ctr), pp3, ctr);
    return CurvePoint::xyzz(x3, y3, zz3, zzz3);
}

CurvePoint pdbl_xyzz(const CurvePoint& p, const CurveParams& c, OpCounters& ctr) {
    if (p.y().is_zero()) return CurvePoint::identity(CoordForm::Xyzz, c);
    FieldElement u = ff_dbl(p.y(), ctr);
    FieldElement v = ff_sqr(u, ctr);
    FieldElement w = ff_mul(u, v, ctr);
    FieldElement s = ff_mul(p.x(), v, ctr);
    FieldElement xx = ff_sqr(p.x(), ctr);
    FieldElement m = ff_add(ff_dbl(xx, ctr), xx, ctr);
    if (!c.a4.is_zero())
        m = ff_add(m, ff_mul(c.a4, ff_sqr(p.zz(), ctr), ctr), ctr);
    FieldElement x3 = ff_sqr(m, ctr);
    x3 = ff_sub(x3, ff_dbl(s, ctr), ctr);
    FieldElement y3 = ff_mul(m, ff_sub(s, x3, ctr), ctr);
    y3 = ff_sub(y3, ff_mul(w, p.y(), ctr), ctr);
    FieldElement zz3 = ff_mul(v, p.zz(), ctr);
    FieldElement zzz3 = ff_mul(w, p.zzz(), ctr);
    return CurvePoint::xyzz(x3, y3, zz3, zzz3);
}

}  // namespace

CurvePoint padd(const CurvePoint& p, const CurvePoint& q, const CurveParams& c, OpCounters& ctr) {
    if (p.form() != q.form())
        throw UsageError("padd: operands in different coordinate forms");
    check_point(p, c);
    check_point(q, c);
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    switch (p.form()) {
        case CoordForm::Affine:
            return padd_affine(p, q, c, ctr);
        case CoordForm::Jacobian:
            if (q.is_normalized()) return padd_jacobian_mixed(p, q, c, ctr);
            if (p.is_normalized()) return padd_jacobian_mixed(q, p, c, ctr);
            return padd_jacobian_full(p, q, c, ctr);
        case CoordForm::Xyzz:
            if (q.is_normalized()) return padd_xyzz_mixed(p, q, c, ctr);
            if (p.is_normalized()) return padd_xyzz_mixed(q, p, c, ctr);
            return padd_xyzz_full(p, q, c, ctr);
    }
    throw UsageError("padd: unknown form");
}

CurvePoint pdbl(const CurvePoint& p, const CurveParams& c, OpCounters& ctr) {
    check_point(p, c);
    if (p.is_identity()) return p;
    switch (p.form()) {
        case CoordForm::Affine: return pdbl_affine(p, c, ctr);
        case CoordForm::Jacobian: return pdbl_jacobian(p, c, ctr);
        case CoordForm::Xyzz: return pdbl_xyzz(p, c, ctr);
    }
    throw UsageError("pdbl: unknown form");
}

CurvePoint negate(const CurvePoint& p, const CurveParams&, OpCounters& ctr) {
    if (p.is_identity()) return p;
    FieldElement ny = ff_neg(p.y(), ctr);
    switch (p.form()) {
        case CoordForm::Affine: return CurvePoint::affine(p.x(), ny);
        case CoordForm::Jacobian: return CurvePoint::jacobian(p.x(), ny, p.z());
        case CoordForm::Xyzz: return CurvePoint::xyzz(p.x(), ny, p.zz(), p.zzz());
    }
    throw UsageError("negate: unknown form");
}

namespace {

CurvePoint to_affine_one(const CurvePoint& p, const CurveParams&, OpCounters& ctr) {
    if (p.form() == CoordForm::Affine) return p;
    if (p.form() == CoordForm::Jacobian) {
        FieldElement zi = ff_inv(p.z(), ctr);
        FieldElement zi2 = ff_sqr(zi, ctr);
        FieldElement x = ff_mul(p.x(), zi2, ctr);
        FieldElement y = ff_mul(p.y(), ff_mul(zi2, zi, ctr), ctr);
        return CurvePoint::affine(x, y);
    }
    // One inversion recovers both denominators: i = 1/(ZZ*ZZZ),
    // 1/ZZ = i*ZZZ, 1/ZZZ = i*ZZ.
    FieldElement i = ff_inv(ff_mul(p.zz(), p.zzz(), ctr), ctr);
    FieldElement x = ff_mul(p.x(), ff_mul(i, p.zzz(), ctr), ctr);
    FieldElement y = ff_mul(p.y(), ff_mul(i, p.zz(), ctr), ctr);
    return CurvePoint::affine(x, y);
}

}  // namespace

CurvePoint convert(const CurvePoint& p, CoordForm target, const CurveParams& c, OpCounters& ctr) {
    check_point(p, c);
    if (p.is_identity()) return CurvePoint::identity(target, c);
    if (p.form() == target) return p;

    const FieldElement one = FieldElement::one(*c.fq);
    switch (target) {
        case CoordForm::Affine:
            return to_affine_one(p, c, ctr);
        case CoordForm::Jacobian: {
            if (p.form() == CoordForm::Affine)
                return CurvePoint::jacobian(p.x(), p.y(), one);
            // XYZZ -> Jacobian with Z' = ZZZ: X' = X*ZZ^2, Y' = Y*ZZ^3.
            FieldElement zz2 = ff_sqr(p.zz(), ctr);
            FieldElement x = ff_mul(p.x(), zz2, ctr);
            FieldElement y = ff_mul(p.y(), ff_mul(zz2, p.zz(), ctr), ctr);
            return CurvePoint::jacobian(x, y, p.zzz());
        }
        case CoordForm::Xyzz: {
            if (p.form() == CoordForm::Affine)
                return CurvePoint::xyzz(p.x(), p.y(), one, one);
            // Jacobian -> XYZZ: ZZ = Z^2, ZZZ = Z^3.
            FieldElement zz = ff_sqr(p.z(), ctr);
            FieldElement zzz = ff_mul(zz, p.z(), ctr);
            return CurvePoint::xyzz(p.x(), p.y(), zz, zzz);
        }
    }
    throw UsageError("convert: unknown form");
}

std::vector<CurvePoint> batch_to_affine(std::span<const CurvePoint> pts, const CurveParams& c,
                                        OpCounters& ctr) {
    // Gather every denominator, invert once, distribute.
    std::vector<FieldElement> dens;
    dens.reserve(pts.size() * 2);
    for (const CurvePoint& p : pts) {
        if (p.is_identity() || p.form() == CoordForm::Affine) continue;
        if (p.form() == CoordForm::Jacobian) {
            dens.push_back(p.z());
        } else {
            dens.push_back(p.zz());
            dens.push_back(p.zzz());
        }
    }
    std::vector<FieldElement> invs;
    if (!dens.empty()) invs = batch_inverse(dens, ctr);

    std::vector<CurvePoint> out;
    out.reserve(pts.size());
    std::size_t k = 0;
    for (const CurvePoint& p : pts) {
        if (p.is_identity()) {
            out.push_back(CurvePoint::identity(CoordForm::Affine, c));
        } else if (p.form() == CoordForm::Affine) {
            out.push_back(p);
        } else if (p.form() == CoordForm::Jacobian) {
            FieldElement zi = invs[k++];
            FieldElement zi2 = ff_sqr(zi, ctr);
            out.push_back(CurvePoint::affine(ff_mul(p.x(), zi2, ctr),
                                             ff_mul(p.y(), ff_mul(zi2, zi, ctr), ctr)));
        } else {
            FieldElement zzi = invs[k++];
            FieldElement zzzi = invs[k++];
            out.push_back(CurvePoint::affine(ff_mul(p.x(), zzi, ctr),
                                             ff_mul(p.y(), zzzi, ctr)));
        }
    }
    return out;
}

CurvePoint scalar_mul(const CurvePoint& p, const FixedUint& k, const CurveParams& c,
                      OpCounters& ctr) {
    check_point(p, c);
    CurvePoint acc = CurvePoint::identity(p.form(), c);
    for (unsigned i = k.bit_length(); i-- > 0;) {
        acc = pdbl(acc, c, ctr);
        if (k.bit(i)) acc = padd(acc, p, c, ctr);
    }
    return acc;
}

bool is_on_curve(const CurvePoint& p, const CurveParams& c, OpCounters& ctr) {
    if (p.is_identity()) return true;
    check_point(p, c);
    switch (p.form()) {
        case CoordForm::Affine: {
            FieldElement lhs = ff_sqr(p.y(), ctr);
            FieldElement rhs = ff_mul(ff_sqr(p.x(), ctr), p.x(), ctr);
            rhs = ff_add(rhs, ff_mul(c.a4, p.x(), ctr), ctr);
            rhs = ff_add(rhs, c.b, ctr);
            return lhs == rhs;
        }
        case CoordForm::Jacobian: {
            // Y^2 == X^3 + a*X*Z^4 + b*Z^6
            FieldElement z2 = ff_sqr(p.z(), ctr);
            FieldElement z4 = ff_sqr(z2, ctr);
            FieldElement z6 = ff_mul(z4, z2, ctr);
            FieldElement lhs = ff_sqr(p.y(), ctr);
            FieldElement rhs = ff_mul(ff_sqr(p.x(), ctr), p.x(), ctr);
            rhs = ff_add(rhs, ff_mul(ff_mul(c.a4, p.x(), ctr), z4, ctr), ctr);
            rhs = ff_add(rhs, ff_mul(c.b, z6, ctr), ctr);
            return lhs == rhs;
        }
        case CoordForm::Xyzz: {
            // ZZ^3 == ZZZ^2 and Y^2 == X^3 + a*X*ZZ^2 + b*ZZ^3
            FieldElement zz2 = ff_sqr(p.zz(), ctr);
            FieldElement zz3 = ff_mul(zz2, p.zz(), ctr);
            if (!(ff_sqr(p.zzz(), ctr) == zz3)) return false;
            FieldElement lhs = ff_sqr(p.y(), ctr);
            FieldElement rhs = ff_mul(ff_sqr(p.x(), ctr), p.x(), ctr);
            rhs = ff_add(rhs, ff_mul(ff_mul(c.a4, p.x(), ctr), zz2, ctr), ctr);
            rhs = ff_add(rhs, ff_mul(c.b, zz3, ctr), ctr);
            return lhs == rhs;
        }
    }
    return false;
}

bool points_equal(const CurvePoint& p, const CurvePoint& q, const CurveParams& c,
                  OpCounters& ctr) {
    if (p.is_identity() || q.is_identity()) return p.is_identity() == q.is_identity();
    CurvePoint pa = convert(p, CoordForm::Affine, c, ctr);
    CurvePoint qa = convert(q, CoordForm::Affine, c, ctr);
    return pa.x() == qa.x() && pa.y() == qa.y();
}

std::string point_to_hex(const CurvePoint& p, const CurveParams& c, OpCounters& ctr) {
    if (p.is_identity()) return "inf";
    CurvePoint a = convert(p, CoordForm::Affine, c, ctr);
    return a.x().to_hex(ctr) + a.y().to_hex(ctr);
}

CurvePoint point_from_hex(std::string_view text, const CurveParams& c, OpCounters& ctr) {
    if (text == "inf") return CurvePoint::identity(CoordForm::Affine, c);
    const unsigned nibbles = c.fq->limb_count * c.fq->word_bits / 4;
    if (text.size() != 2 * nibbles)
        throw UsageError("point hex must be exactly " + std::to_string(2 * nibbles) +
                         " digits or \"inf\"");
    FixedUint x = FixedUint::from_hex(text.substr(0, nibbles), c.fq->word_bits, c.fq->limb_count);
    FixedUint y = FixedUint::from_hex(text.substr(nibbles), c.fq->word_bits, c.fq->limb_count);
    CurvePoint p = CurvePoint::affine(FieldElement::from_uint(x, *c.fq, ctr),
                                      FieldElement::from_uint(y, *c.fq, ctr));
    if (!is_on_curve(p, c, ctr))
        throw UsageError("point is not on the curve");
    return p;
}

}  // namespace zkplab
