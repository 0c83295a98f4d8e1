#pragma once

#include <span>
#include <string>
#include <vector>

#include "zkplab/field.hpp"

namespace zkplab {

enum class CoordForm { Affine, Jacobian, Xyzz };

const char* coord_form_name(CoordForm f);

// Short-Weierstrass curve y^2 = x^3 + a4*x + b over F_q with scalar field F_r.
struct CurveParams {
    std::string name;
    const FieldParams* fq = nullptr;
    const FieldParams* fr = nullptr;
    FieldElement a4;  // zero for the built-in presets
    FieldElement b;
    FieldElement gen_x, gen_y;  // generator, affine

    static CurveParams create(const FieldParams& fq, const FieldParams& fr,
                              const FieldElement& a4, const FieldElement& b,
                              const FieldElement& gen_x, const FieldElement& gen_y,
                              std::string name);
    bool same_curve(const CurveParams& o) const;
};

// A point in one of three coordinate forms.
//   Affine   (x, y), identity flagged explicitly
//   Jacobian (X, Y, Z), affine image (X/Z^2, Y/Z^3), Z == 0 is identity
//   XYZZ     (X, Y, ZZ, ZZZ) with ZZ^3 == ZZZ^2, image (X/ZZ, Y/ZZZ),
//            ZZ == 0 is identity
class CurvePoint {
  public:
    CurvePoint() = default;

    static CurvePoint identity(CoordForm form, const CurveParams& c);
    static CurvePoint affine(const FieldElement& x, const FieldElement& y);
    static CurvePoint jacobian(const FieldElement& x, const FieldElement& y,
                               const FieldElement& z);
    static CurvePoint xyzz(const FieldElement& x, const FieldElement& y, const FieldElement& zz,
                           const FieldElement& zzz);

    CoordForm form() const { return form_; }
    bool is_identity() const { return identity_; }
    // Second operand of an addition hits the fast (mixed) path when its
    // projective coordinates are trivial, i.e. it was lifted from affine.
    bool is_normalized() const;

    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }
    const FieldElement& z() const { return z_; }    // Jacobian only
    const FieldElement& zz() const { return z_; }   // XYZZ alias
    const FieldElement& zzz() const { return w_; }  // XYZZ only

    // Raw coordinate equality in the same form (not affine-image equality).
    friend bool operator==(const CurvePoint& a, const CurvePoint& b);

  private:
    CoordForm form_ = CoordForm::Affine;
    bool identity_ = true;
    FieldElement x_, y_, z_, w_;
};

// Group addition within one coordinate form. Identity operands, P == Q and
// P == -Q are detected before (or from the first intermediates of) the
// generic formula; the generic path executes the fixed published schedule
// for the form. For Jacobian/XYZZ a normalized second operand takes the
// cheaper mixed schedule.
CurvePoint padd(const CurvePoint& p, const CurvePoint& q, const CurveParams& c, OpCounters& ctr);

// Doubling; identity and y == 0 double to identity.
CurvePoint pdbl(const CurvePoint& p, const CurveParams& c, OpCounters& ctr);

CurvePoint negate(const CurvePoint& p, const CurveParams& c, OpCounters& ctr);

// Coordinate-form conversion preserving the affine image; conversion to
// Affine spends one ff_inv per call.
CurvePoint convert(const CurvePoint& p, CoordForm target, const CurveParams& c, OpCounters& ctr);

// Batch conversion to Affine: a single ff_inv across all non-identity inputs.
std::vector<CurvePoint> batch_to_affine(std::span<const CurvePoint> pts, const CurveParams& c,
                                        OpCounters& ctr);

// Left-to-right double-and-add; oracle-grade, not performance-critical.
CurvePoint scalar_mul(const CurvePoint& p, const FixedUint& k, const CurveParams& c,
                      OpCounters& ctr);

bool is_on_curve(const CurvePoint& p, const CurveParams& c, OpCounters& ctr);

// Affine-image equality across arbitrary forms.
bool points_equal(const CurvePoint& p, const CurvePoint& q, const CurveParams& c, OpCounters& ctr);

// Serialization: lowercase hex of x followed by hex of y (uncompressed
// affine), or the identity sentinel "inf".
std::string point_to_hex(const CurvePoint& p, const CurveParams& c, OpCounters& ctr);
CurvePoint point_from_hex(std::string_view text, const CurveParams& c, OpCounters& ctr);

}  // namespace zkplab
