#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles/toy_group.hpp"
#include "zkplab/errors.hpp"
#include "zkplab/presets.hpp"

using namespace zkplab;
using namespace testoracle;

namespace {

OpCounters g_ctr;

ToyPoint to_toy(const CurvePoint& p, const CurveParams& c) {
    CurvePoint a = convert(p, CoordForm::Affine, c, g_ctr);
    if (a.is_identity()) return ToyPoint{};
    return ToyPoint{false, std::int64_t(a.x().to_uint(g_ctr).low_u64()),
                    std::int64_t(a.y().to_uint(g_ctr).low_u64())};
}

CurvePoint from_toy(const ToyPoint& p, const CurveParams& c) {
    if (p.inf) return CurvePoint::identity(CoordForm::Affine, c);
    return CurvePoint::affine(FieldElement::from_u64(std::uint64_t(p.x), *c.fq, g_ctr),
                              FieldElement::from_u64(std::uint64_t(p.y), *c.fq, g_ctr));
}

std::array<std::uint64_t, 6> ff_delta(const OpCounters& d) {
    return {d.ff_add, d.ff_sub, d.ff_dbl, d.ff_mul, d.ff_sqr, d.ff_inv};
}

}  // namespace

TEST_CASE("toy preset matches the enumerated group table on every pair") {
    const CurveParams& toy = curve_preset("toy");
    ToyGroup table = ToyGroup::enumerate(409, 0, 21);
    REQUIRE(table.order() == 379);  // prime group order == toy-fr modulus
    REQUIRE(toy.fr->modulus.low_u64() == table.order());

    // padd against the table over all ordered pairs: closure and
    // commutativity come with the table's symmetry.
    for (std::size_t i = 0; i < table.order(); ++i) {
        for (std::size_t j = 0; j < table.order(); ++j) {
            CurvePoint lhs =
                padd(from_toy(table.elements[i], toy), from_toy(table.elements[j], toy), toy,
                     g_ctr);
            REQUIRE(to_toy(lhs, toy) == table.add(table.elements[i], table.elements[j]));
        }
    }
    // pdbl over every element.
    for (const ToyPoint& p : table.elements)
        REQUIRE(to_toy(pdbl(from_toy(p, toy), toy, g_ctr), toy) == table.add(p, p));
}

TEST_CASE("toy group law holds in projective forms too") {
    const CurveParams& toy = curve_preset("toy");
    ToyGroup table = ToyGroup::enumerate(409, 0, 21);
    std::mt19937_64 rng(4);
    for (int round = 0; round < 300; ++round) {
        const ToyPoint& a = table.elements[rng() % table.order()];
        const ToyPoint& b = table.elements[rng() % table.order()];
        const ToyPoint want = table.add(a, b);
        for (CoordForm form : {CoordForm::Jacobian, CoordForm::Xyzz}) {
            CurvePoint pa = convert(from_toy(a, toy), form, toy, g_ctr);
            CurvePoint pb = convert(from_toy(b, toy), form, toy, g_ctr);
            CHECK(to_toy(padd(pa, pb, toy, g_ctr), toy) == want);
        }
    }
    // associativity on random triples
    for (int round = 0; round < 2000; ++round) {
        CurvePoint a = from_toy(table.elements[rng() % table.order()], toy);
        CurvePoint b = from_toy(table.elements[rng() % table.order()], toy);
        CurvePoint c = from_toy(table.elements[rng() % table.order()], toy);
        CHECK(points_equal(padd(padd(a, b, toy, g_ctr), c, toy, g_ctr),
                           padd(a, padd(b, c, toy, g_ctr), toy, g_ctr), toy, g_ctr));
    }
}

TEST_CASE("enumerated f17 curve agrees with the group table") {
    // y^2 = x^3 + 1 over F_17 (order 18); exhaustive including associativity.
    OpCounters c;
    const FieldParams& f17 = field_preset("f17");
    const FieldParams& f_dummy = field_preset("toy-fr");
    CurveParams curve = CurveParams::create(
        f17, f_dummy, FieldElement::zero(f17), FieldElement::from_u64(1, f17, c),
        FieldElement::from_u64(1, f17, c), FieldElement::from_u64(6, f17, c), "f17-b1");
    ToyGroup table = ToyGroup::enumerate(17, 0, 1);
    REQUIRE(table.order() == 18);

    for (std::size_t i = 0; i < table.order(); ++i)
        for (std::size_t j = 0; j < table.order(); ++j)
            REQUIRE(to_toy(padd(from_toy(table.elements[i], curve),
                                from_toy(table.elements[j], curve), curve, c),
                           curve) == table.add(table.elements[i], table.elements[j]));
    for (std::size_t i = 0; i < table.order(); ++i)
        for (std::size_t j = 0; j < table.order(); ++j)
            for (std::size_t k = 0; k < table.order(); ++k) {
                const ToyPoint want =
                    table.add(table.add(table.elements[i], table.elements[j]), table.elements[k]);
                // library path: (i + j) + k via mixed forms
                CurvePoint lhs =
                    padd(convert(padd(from_toy(table.elements[i], curve),
                                      from_toy(table.elements[j], curve), curve, c),
                                 CoordForm::Xyzz, curve, c),
                         convert(from_toy(table.elements[k], curve), CoordForm::Xyzz, curve, c),
                         curve, c);
                REQUIRE(to_toy(lhs, curve) == want);
            }

    // y == 0 points double to identity: (16, 0) is 2-torsion here.
    CurvePoint torsion = CurvePoint::affine(FieldElement::from_u64(16, f17, c),
                                            FieldElement::zero(f17));
    REQUIRE(is_on_curve(torsion, curve, c));
    CHECK(pdbl(torsion, curve, c).is_identity());
    CHECK(pdbl(convert(torsion, CoordForm::Jacobian, curve, c), curve, c).is_identity());
    CHECK(pdbl(convert(torsion, CoordForm::Xyzz, curve, c), curve, c).is_identity());
}

TEST_CASE("nonzero a4 curve follows the table (generic doubling path)") {
    OpCounters c;
    const FieldParams& f17 = field_preset("f17");
    const FieldParams& f_dummy = field_preset("toy-fr");
    CurveParams curve = CurveParams::create(
        f17, f_dummy, FieldElement::from_u64(2, f17, c), FieldElement::from_u64(3, f17, c),
        FieldElement::from_u64(2, f17, c), FieldElement::from_u64(7, f17, c), "f17-a2b3");
    ToyGroup table = ToyGroup::enumerate(17, 2, 3);
    REQUIRE(table.order() == 22);
    for (std::size_t i = 0; i < table.order(); ++i) {
        for (std::size_t j = 0; j < table.order(); ++j) {
            const ToyPoint want = table.add(table.elements[i], table.elements[j]);
            for (CoordForm form : {CoordForm::Affine, CoordForm::Jacobian, CoordForm::Xyzz}) {
                CurvePoint pa = convert(from_toy(table.elements[i], curve), form, curve, c);
                CurvePoint pb = convert(from_toy(table.elements[j], curve), form, curve, c);
                REQUIRE(to_toy(padd(pa, pb, curve, c), curve) == want);
            }
        }
    }
}

TEST_CASE("identity and inverse handling") {
    OpCounters c;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    CurvePoint g = CurvePoint::affine(bls.gen_x, bls.gen_y);
    for (CoordForm form : {CoordForm::Affine, CoordForm::Jacobian, CoordForm::Xyzz}) {
        CurvePoint p = convert(g, form, bls, c);
        CurvePoint id = CurvePoint::identity(form, bls);
        CHECK(points_equal(padd(p, id, bls, c), p, bls, c));
        CHECK(points_equal(padd(id, p, bls, c), p, bls, c));
        CHECK(padd(p, negate(p, bls, c), bls, c).is_identity());
        CHECK(pdbl(id, bls, c).is_identity());
        CHECK(points_equal(padd(p, p, bls, c), pdbl(p, bls, c), bls, c));  // delegation
        CHECK(convert(id, CoordForm::Affine, bls, c).is_identity());
    }
}

TEST_CASE("cross-form padd consistency on 10^3 random pairs") {
    OpCounters c;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    std::mt19937_64 rng(17);
    CurvePoint gj = convert(CurvePoint::affine(bls.gen_x, bls.gen_y), CoordForm::Jacobian, bls, c);
    CurvePoint p = scalar_mul(gj, random_uint_below(bls.fr->modulus, rng), bls, c);
    CurvePoint q = scalar_mul(gj, random_uint_below(bls.fr->modulus, rng), bls, c);
    for (int round = 0; round < 1000; ++round) {
        CurvePoint pa = convert(p, CoordForm::Affine, bls, c);
        CurvePoint qa = convert(q, CoordForm::Affine, bls, c);
        CurvePoint sum_a = padd(pa, qa, bls, c);
        CurvePoint sum_j = padd(p, q, bls, c);
        CurvePoint sum_x = padd(convert(p, CoordForm::Xyzz, bls, c),
                                convert(q, CoordForm::Xyzz, bls, c), bls, c);
        REQUIRE(points_equal(sum_a, sum_j, bls, c));
        REQUIRE(points_equal(sum_a, sum_x, bls, c));
        REQUIRE(is_on_curve(sum_j, bls, c));
        REQUIRE(is_on_curve(sum_x, bls, c));
        p = padd(p, gj, bls, c);
        q = sum_j;
    }
}

TEST_CASE("published operation-count matrix") {
    const CurveParams& bls = curve_preset("bls12-377-g1");
    OpCounters c;
    std::mt19937_64 rng(42);
    CurvePoint gj = convert(CurvePoint::affine(bls.gen_x, bls.gen_y), CoordForm::Jacobian, bls, c);
    CurvePoint p_aff =
        convert(scalar_mul(gj, random_uint_below(bls.fr->modulus, rng), bls, c),
                CoordForm::Affine, bls, c);
    CurvePoint q_aff =
        convert(scalar_mul(gj, random_uint_below(bls.fr->modulus, rng), bls, c),
                CoordForm::Affine, bls, c);

    struct Want {
        CoordForm form;
        std::array<std::uint64_t, 6> padd, pdbl;  // add, sub, dbl, mul, sqr, inv
    } wants[] = {
        {CoordForm::Affine, {0, 6, 0, 3, 0, 1}, {2, 4, 2, 2, 2, 1}},
        {CoordForm::Jacobian, {1, 8, 5, 7, 4, 0}, {2, 6, 6, 2, 5, 0}},
        {CoordForm::Xyzz, {0, 6, 1, 8, 2, 0}, {1, 3, 3, 6, 3, 0}},
    };
    std::uint64_t padd_total = 0, pdbl_total = 0;
    for (const Want& w : wants) {
        CurvePoint p = convert(p_aff, w.form, bls, c);
        CurvePoint q = convert(q_aff, w.form, bls, c);
        CurvePoint pg = w.form == CoordForm::Affine ? p : padd(pdbl(p, bls, c), q, bls, c);
        OpCounters base = c;
        padd(pg, q, bls, c);
        auto dpadd = c.delta_since(base);
        CHECK(ff_delta(dpadd) == w.padd);

        base = c;
        pdbl(pg, bls, c);
        auto dpdbl = c.delta_since(base);
        CHECK(ff_delta(dpdbl) == w.pdbl);

        if (w.form == CoordForm::Affine) {
            padd_total = dpadd.ff_total();
            pdbl_total = dpdbl.ff_total();
        }
        // dominance ratios from the measured counts
        const double pct = 100.0 *
                           double(dpadd.ff_mul + dpadd.ff_sqr + dpdbl.ff_mul + dpdbl.ff_sqr) /
                           double(dpadd.ff_total() + dpdbl.ff_total());
        if (w.form == CoordForm::Jacobian) CHECK(pct == doctest::Approx(39.1).epsilon(0.001));
        if (w.form == CoordForm::Xyzz) CHECK(pct == doctest::Approx(57.6).epsilon(0.001));
        if (w.form == CoordForm::Affine) CHECK(pct == doctest::Approx(30.4).epsilon(0.01));
    }
    CHECK(padd_total == 10);
    CHECK(pdbl_total == 13);
}

TEST_CASE("scalar_mul basics and homomorphism") {
    OpCounters c;
    const CurveParams& toy = curve_preset("toy");
    CurvePoint g = CurvePoint::affine(toy.gen_x, toy.gen_y);
    auto u = [&](std::uint64_t k) { return FixedUint::from_u64(k, 32, 1); };
    CHECK(scalar_mul(g, u(0), toy, c).is_identity());
    CHECK(points_equal(scalar_mul(g, u(1), toy, c), g, toy, c));
    CHECK(scalar_mul(g, toy.fr->modulus, toy, c).is_identity());

    std::mt19937_64 rng(6);
    const std::uint64_t order = toy.fr->modulus.low_u64();
    for (int round = 0; round < 50; ++round) {
        const std::uint64_t a = rng() % order, b = rng() % order;
        CHECK(points_equal(scalar_mul(g, u(a + b), toy, c),
                           padd(scalar_mul(g, u(a), toy, c), scalar_mul(g, u(b), toy, c), toy, c),
                           toy, c));
    }
}

TEST_CASE("is_on_curve accepts presets and rejects perturbations") {
    OpCounters c;
    for (const char* name : {"bls12-377-g1", "bls12-381-g1", "toy"}) {
        const CurveParams& curve = curve_preset(name);
        CurvePoint g = CurvePoint::affine(curve.gen_x, curve.gen_y);
        CHECK(is_on_curve(g, curve, c));
        CHECK(is_on_curve(CurvePoint::identity(CoordForm::Xyzz, curve), curve, c));
        CurvePoint bad = CurvePoint::affine(
            curve.gen_x, ff_add(curve.gen_y, FieldElement::one(*curve.fq), c));
        CHECK(!is_on_curve(bad, curve, c));
        CHECK(is_on_curve(convert(pdbl(convert(g, CoordForm::Jacobian, curve, c), curve, c),
                                  CoordForm::Xyzz, curve, c),
                          curve, c));
    }
}

TEST_CASE("conversions preserve the affine image") {
    OpCounters c;
    const CurveParams& bls = curve_preset("bls12-381-g1");
    std::mt19937_64 rng(9);
    CurvePoint gj = convert(CurvePoint::affine(bls.gen_x, bls.gen_y), CoordForm::Jacobian, bls, c);
    CurvePoint p = scalar_mul(gj, random_uint_below(bls.fr->modulus, rng), bls, c);
    for (CoordForm from : {CoordForm::Affine, CoordForm::Jacobian, CoordForm::Xyzz})
        for (CoordForm to : {CoordForm::Affine, CoordForm::Jacobian, CoordForm::Xyzz}) {
            CurvePoint a = convert(p, from, bls, c);
            CurvePoint b = convert(a, to, bls, c);
            CHECK(points_equal(b, p, bls, c));
            CHECK(is_on_curve(b, bls, c));
        }
}

TEST_CASE("batch to_affine spends exactly one inversion") {
    OpCounters c;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    std::mt19937_64 rng(10);
    CurvePoint gj = convert(CurvePoint::affine(bls.gen_x, bls.gen_y), CoordForm::Jacobian, bls, c);
    std::vector<CurvePoint> pts;
    CurvePoint acc = scalar_mul(gj, random_uint_below(bls.fr->modulus, rng), bls, c);
    for (int i = 0; i < 64; ++i) {
        pts.push_back(acc);
        acc = pdbl(acc, bls, c);
    }
    OpCounters cc;
    auto affine = batch_to_affine(pts, bls, cc);
    CHECK(cc.ff_inv == 1);
    for (int i = 0; i < 64; ++i) {
        CHECK(affine[i].form() == CoordForm::Affine);
        CHECK(points_equal(affine[i], pts[i], bls, cc));
    }

    // XYZZ inputs also take one inversion total.
    std::vector<CurvePoint> xz;
    for (const CurvePoint& p : pts) xz.push_back(convert(p, CoordForm::Xyzz, bls, cc));
    OpCounters c2;
    auto affine2 = batch_to_affine(xz, bls, c2);
    CHECK(c2.ff_inv == 1);
    CHECK(points_equal(affine2[5], pts[5], bls, cc));
}

TEST_CASE("point hex round trip with identity sentinel") {
    OpCounters c;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    CurvePoint g = CurvePoint::affine(bls.gen_x, bls.gen_y);
    std::string hex = point_to_hex(g, bls, c);
    CHECK(hex.size() == 2 * bls.fq->limb_count * bls.fq->word_bits / 4);
    CurvePoint back = point_from_hex(hex, bls, c);
    CHECK(points_equal(back, g, bls, c));

    CHECK(point_to_hex(CurvePoint::identity(CoordForm::Jacobian, bls), bls, c) == "inf");
    CHECK(point_from_hex("inf", bls, c).is_identity());
    CHECK_THROWS_AS(point_from_hex("beef", bls, c), UsageError);
    // off-curve point rejected
    std::string bad = hex;
    bad[bad.size() - 1] = bad.back() == '0' ? '1' : '0';
    CHECK_THROWS_AS(point_from_hex(bad, bls, c), UsageError);
}

TEST_CASE("mixed forms are rejected") {
    OpCounters c;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    CurvePoint g = CurvePoint::affine(bls.gen_x, bls.gen_y);
    CHECK_THROWS_AS(padd(g, convert(g, CoordForm::Jacobian, bls, c), bls, c), UsageError);
}

TEST_CASE("singular curve parameters are rejected") {
    OpCounters c;
    const FieldParams& f17 = field_preset("f17");
    const FieldParams& fr = field_preset("toy-fr");
    // y^2 = x^3 has zero discriminant
    CHECK_THROWS_AS(CurveParams::create(f17, fr, FieldElement::zero(f17),
                                        FieldElement::zero(f17), FieldElement::one(f17),
                                        FieldElement::one(f17), "singular"),
                    UsageError);
}
