#include "zkplab/errors.hpp"
#include "zkplab/harness.hpp"
#include "zkplab/presets.hpp"
#include "zkplab/prover.hpp"

namespace zkplab {

namespace {

struct Checker {
    unsigned cases = 0;
    unsigned failures = 0;
    void check(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
};

SuiteResult limbs_suite(const VerifyOptions& opt) {
    Checker ck;
    std::mt19937_64 rng(opt.seed);
    OpCounters c;

    // Two-limb shapes against native 128-bit arithmetic.
    for (unsigned w : {32u, 64u}) {
        for (int round = 0; round < 50; ++round) {
            const unsigned L = 2;
            FixedUint a = FixedUint::zero(w, L), b = FixedUint::zero(w, L);
            const std::uint64_t mask = w == 64 ? ~0ull : 0xffffffffull;
            for (unsigned i = 0; i < L; ++i) {
                a.set_limb(i, rng() & mask);
                b.set_limb(i, rng() & mask);
            }
            auto to128 = [&](const FixedUint& x) {
                return (unsigned __int128)x.limb(1) << w | x.limb(0);
            };
            const unsigned total = 2 * w;
            const unsigned __int128 av = to128(a), bv = to128(b);
            const unsigned __int128 lim =
                total == 128 ? 0 : ((unsigned __int128)1 << total);  // 0 means full width

            auto add = add_with_carry(a, b, c);
            unsigned __int128 want = av + bv;
            bool carry_want;
            if (total == 128) {
                carry_want = want < av;
            } else {
                carry_want = want >= lim;
                want = carry_want ? want - lim : want;
            }
            ck.check(to128(add.sum) == want && (add.carry == 1) == carry_want);

            auto sub = sub_with_borrow(a, b, c);
            ck.check((sub.borrow == 1) == (av < bv));

            auto sh = shl1(a, c);
            unsigned __int128 shifted = av << 1;
            if (total != 128) shifted &= lim - 1;
            ck.check(to128(sh.shifted) == shifted);

            Ordering o = cmp(a, b, c);
            ck.check(o == (av < bv   ? Ordering::Less
                           : av > bv ? Ordering::Greater
                                     : Ordering::Equal));
        }
    }

    // add/sub round trip at the big shapes.
    for (unsigned L : {8u, 12u}) {
        for (int round = 0; round < 25; ++round) {
            FixedUint a = FixedUint::zero(32, L), b = FixedUint::zero(32, L);
            for (unsigned i = 0; i < L; ++i) {
                a.set_limb(i, rng() & 0xffffffffull);
                b.set_limb(i, rng() & 0xffffffffull);
            }
            auto add = add_with_carry(a, b, c);
            auto back = sub_with_borrow(add.sum, b, c);
            ck.check(back.diff == a && back.borrow == add.carry);
        }
    }
    return {"limbs", ck.cases, ck.failures};
}

SuiteResult field_suite(const VerifyOptions& opt) {
    Checker ck;
    OpCounters c;
    const FieldParams& f17 = field_preset("f17", opt.word_bits);
    auto e17 = [&](std::uint64_t v) { return FieldElement::from_u64(v, f17, c); };
    ck.check(ff_add(e17(9), e17(12), c).to_uint(c).low_u64() == 4);
    ck.check(ff_sub(e17(3), e17(9), c).to_uint(c).low_u64() == 11);
    ck.check(ff_dbl(e17(9), c).to_uint(c).low_u64() == 1);
    ck.check(ff_mul(e17(5), e17(7), c).to_uint(c).low_u64() == 1);
    ck.check(ff_inv(e17(4), c).to_uint(c).low_u64() == 13);
    ck.check(ff_pow(e17(3), FixedUint::from_u64(5, f17.word_bits, 1), c).to_uint(c).low_u64() == 5);

    const FieldParams& fr = field_preset("bls12-377-fr", opt.word_bits);
    std::mt19937_64 rng(opt.seed + 1);
    for (int round = 0; round < 100; ++round) {
        FieldElement a = random_element(fr, rng, c);
        FieldElement b = random_element(fr, rng, c);
        FieldElement d = random_element(fr, rng, c);
        ck.check(ff_add(ff_add(a, b, c), d, c) == ff_add(a, ff_add(b, d, c), c));
        ck.check(ff_mul(ff_mul(a, b, c), d, c) == ff_mul(a, ff_mul(b, d, c), c));
        ck.check(ff_mul(a, b, c) == ff_mul(b, a, c));
        ck.check(ff_mul(a, ff_add(b, d, c), c) ==
                 ff_add(ff_mul(a, b, c), ff_mul(a, d, c), c));
        ck.check(ff_dbl(a, c) == ff_add(a, a, c));
        ck.check(ff_sqr(a, c) == ff_mul(a, a, c));
        if (!a.is_zero()) ck.check(ff_mul(a, ff_inv(a, c), c).is_one());
        ck.check(ff_add(a, ff_neg(a, c), c).is_zero());
    }
    return {"field", ck.cases, ck.failures};
}

SuiteResult batch_inverse_suite(const VerifyOptions& opt) {
    Checker ck;
    const FieldParams& fr = field_preset("bls12-377-fr", opt.word_bits);
    std::mt19937_64 rng(opt.seed + 2);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{64}}) {
        OpCounters scratch;
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < n; ++i) {
            FieldElement x = random_element(fr, rng, scratch);
            while (x.is_zero()) x = random_element(fr, rng, scratch);
            v.push_back(x);
        }
        OpCounters c;
        auto inv = batch_inverse(v, c);
        ck.check(c.ff_inv == 1);
        ck.check(c.ff_mul <= 3 * n);
        for (std::size_t i = 0; i < n; ++i)
            ck.check(inv[i] == ff_inv(v[i], scratch));
    }
    return {"batch-inverse", ck.cases, ck.failures};
}

SuiteResult curve_suite(const VerifyOptions& opt) {
    Checker ck;
    OpCounters c;
    const CurveParams& toy = curve_preset("toy", opt.word_bits);
    CurvePoint g = CurvePoint::affine(toy.gen_x, toy.gen_y);
    ck.check(scalar_mul(g, toy.fr->modulus, toy, c).is_identity());
    ck.check(padd(g, negate(g, toy, c), toy, c).is_identity());

    const std::uint64_t order = toy.fr->modulus.low_u64();
    std::mt19937_64 rng(opt.seed + 3);
    auto smul = [&](std::uint64_t k) {
        return scalar_mul(g, FixedUint::from_u64(k, toy.fq->word_bits, toy.fq->limb_count), toy, c);
    };
    for (int round = 0; round < 25; ++round) {
        const std::uint64_t a = rng() % order, b = rng() % order;
        CurvePoint lhs = smul((a + b) % order);
        CurvePoint rhs = padd(smul(a), smul(b), toy, c);
        ck.check(points_equal(lhs, rhs, toy, c));
    }

    const CurveParams& bls = curve_preset("bls12-377-g1", opt.word_bits);
    CurvePoint bg = CurvePoint::affine(bls.gen_x, bls.gen_y);
    CurvePoint bgj = convert(bg, CoordForm::Jacobian, bls, c);
    for (int round = 0; round < 20; ++round) {
        CurvePoint p = scalar_mul(bgj, random_uint_below(bls.fr->modulus, rng), bls, c);
        CurvePoint q = scalar_mul(bgj, random_uint_below(bls.fr->modulus, rng), bls, c);
        CurvePoint pa = convert(p, CoordForm::Affine, bls, c);
        CurvePoint qa = convert(q, CoordForm::Affine, bls, c);
        CurvePoint sum_a = padd(pa, qa, bls, c);
        CurvePoint sum_j = padd(p, q, bls, c);
        CurvePoint sum_x = padd(convert(p, CoordForm::Xyzz, bls, c),
                                convert(q, CoordForm::Xyzz, bls, c), bls, c);
        ck.check(points_equal(sum_a, sum_j, bls, c));
        ck.check(points_equal(sum_a, sum_x, bls, c));
        ck.check(is_on_curve(sum_j, bls, c));
    }

    // Perturbed coordinate leaves the curve.
    OpCounters scratch;
    CurvePoint bad = CurvePoint::affine(
        bls.gen_x, ff_add(bls.gen_y, FieldElement::one(*bls.fq), scratch));
    ck.check(!is_on_curve(bad, bls, c));
    return {"curve", ck.cases, ck.failures};
}

// Componentwise Pippenger pipeline; `stride_override` models the injected
// recombination bug when nonzero.
CurvePoint pipeline_msm(std::span<const CurvePoint> points, std::span<const FixedUint> scalars,
                        const MsmConfig& cfg, const CurveParams& cp, OpCounters& ctr,
                        unsigned stride_override) {
    const unsigned w = cfg.window_count();
    std::vector<CurvePoint> sums;
    for (unsigned j = 0; j < w; ++j) {
        std::vector<std::uint32_t> digits(points.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            digits[i] = window_decompose(scalars[i], cfg)[j];
        auto buckets = bucket_accumulate(points, digits, cfg, cp, ctr);
        sums.push_back(bucket_reduce(buckets, cp, ctr));
    }
    return window_reduce(sums, stride_override ? stride_override : cfg.window_bits, cp, ctr);
}

SuiteResult msm_suite(const VerifyOptions& opt) {
    Checker ck;
    OpCounters c;
    std::mt19937_64 rng(opt.seed + 4);

    const CurveParams& toy = curve_preset("toy", opt.word_bits);
    CurvePoint tg = convert(CurvePoint::affine(toy.gen_x, toy.gen_y), CoordForm::Jacobian, toy, c);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{8},
                          std::size_t{16}}) {
        std::vector<CurvePoint> pts;
        std::vector<FixedUint> ks;
        for (std::size_t i = 0; i < n; ++i) {
            FixedUint k = random_uint_below(toy.fr->modulus, rng);
            FixedUint m = random_uint_below(toy.fr->modulus, rng);
            CurvePoint p = scalar_mul(tg, m, toy, c);
            if (p.is_identity()) p = tg;
            pts.push_back(convert(p, CoordForm::Affine, toy, c));
            ks.push_back(k);
        }
        MsmConfig cfg;
        cfg.scalar_bits = toy.fr->bit_length;
        cfg.window_bits = 3;
        CurvePoint want = msm_naive(pts, ks, toy, c);
        ck.check(points_equal(msm(pts, ks, cfg, toy, c), want, toy, c));
        const unsigned bug = opt.inject_window_reduce_bug ? cfg.window_bits - 1 : 0;
        ck.check(points_equal(pipeline_msm(pts, ks, cfg, toy, c, bug), want, toy, c));
    }

    const CurveParams& bls = curve_preset("bls12-377-g1", opt.word_bits);
    CurvePoint bgj = convert(CurvePoint::affine(bls.gen_x, bls.gen_y), CoordForm::Jacobian, bls, c);
    const std::size_t n = 64;
    std::vector<CurvePoint> pts;
    std::vector<FixedUint> ks;
    CurvePoint acc = scalar_mul(bgj, random_uint_below(bls.fr->modulus, rng), bls, c);
    std::vector<CurvePoint> chain;
    for (std::size_t i = 0; i < n; ++i) {
        chain.push_back(acc);
        acc = padd(acc, bgj, bls, c);
        ks.push_back(random_uint_below(bls.fr->modulus, rng));
    }
    pts = batch_to_affine(chain, bls, c);
    CurvePoint want = msm_naive(pts, ks, bls, c);
    for (CoordForm form : {CoordForm::Affine, CoordForm::Jacobian, CoordForm::Xyzz}) {
        MsmConfig cfg;
        cfg.scalar_bits = bls.fr->bit_length;
        cfg.window_bits = 4;
        cfg.form = form;
        ck.check(points_equal(msm(pts, ks, cfg, bls, c), want, bls, c));
    }
    // Precompute fold.
    {
        MsmConfig cfg;
        cfg.scalar_bits = bls.fr->bit_length;
        cfg.window_bits = 8;
        cfg.precompute_factor = 2;
        auto table = precompute_points(pts, cfg, bls, c);
        ck.check(points_equal(msm_precomputed(table, ks, cfg, bls, c), want, bls, c));
    }
    return {"msm", ck.cases, ck.failures};
}

SuiteResult ntt_suite(const VerifyOptions& opt) {
    Checker ck;
    OpCounters c;
    std::mt19937_64 rng(opt.seed + 5);
    const FieldParams& fr = field_preset("bls12-377-fr", opt.word_bits);

    for (std::size_t n = 2; n <= 256; n *= 2) {
        NttDomain d = build_domain(n, fr, c);
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(fr, rng, c));
        auto fast = ntt_radix2(v, d, Direction::Forward, c);
        auto slow = dft_naive(v, d, Direction::Forward, c);
        ck.check(fast == slow);
        ck.check(ntt_radix2(fast, d, Direction::Inverse, c) == v);
    }
    {
        const std::size_t n = 1024;
        NttDomain d = build_domain(n, fr, c);
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(fr, rng, c));
        auto ref = ntt_radix2(v, d, Direction::Forward, c);
        for (unsigned r = 1; r <= 8; ++r)
            ck.check(ntt_staged(v, d, Direction::Forward, r, c) == ref);
    }
    {
        const std::size_t n = 64;
        NttDomain d = build_domain(n, fr, c);
        std::vector<FieldElement> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(fr, rng, c));
        ck.check(coset_ntt(coset_ntt(v, d, Direction::Forward, c), d, Direction::Inverse, c) == v);
    }
    {
        // f17, n=4: the derived root is one of the two primitive ones.
        const FieldParams& f17 = field_preset("f17", opt.word_bits);
        NttDomain d = build_domain(4, f17, c);
        const std::uint64_t omega = d.omega.to_uint(c).low_u64();
        ck.check(omega == 4 || omega == 13);
        ck.check(ff_sqr(d.omega, c).to_uint(c).low_u64() == 16);
    }
    {
        // Schoolbook convolution oracle.
        std::vector<FieldElement> p, q;
        for (int i = 0; i < 32; ++i) {
            p.push_back(random_element(fr, rng, c));
            q.push_back(random_element(fr, rng, c));
        }
        auto got = poly_mul(p, q, fr, c);
        std::vector<FieldElement> want(p.size() + q.size() - 1, FieldElement::zero(fr));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j)
                want[i + j] = ff_add(want[i + j], ff_mul(p[i], q[j], c), c);
        ck.check(got == want);
    }
    return {"ntt", ck.cases, ck.failures};
}

SuiteResult compute_h_suite(const VerifyOptions& opt) {
    Checker ck;
    OpCounters c;
    const FieldParams& fr = field_preset("bls12-377-fr", opt.word_bits);
    NttDomain d = build_domain(64, fr, c);
    for (int round = 0; round < 10; ++round) {
        ProverInputs in = random_instance(64, 4, opt.seed + 100 + round, fr, c);
        NttStats stats;
        bool threw = false;
        ComputeHResult res;
        try {
            res = compute_h(in.a_evals, in.b_evals, in.c_evals, d, c, &stats);
        } catch (const UnsatisfiedInstanceError&) {
            threw = true;
        }
        ck.check(!threw);
        ck.check(res.transforms == 7);
        if (!res.h.empty()) ck.check(res.h.back().is_zero());
    }
    {
        // Break one evaluation: the divisibility check must fire.
        ProverInputs in = random_instance(64, 4, opt.seed + 200, fr, c);
        in.c_evals[5] = ff_add(in.c_evals[5], FieldElement::one(fr), c);
        bool threw = false;
        try {
            compute_h(in.a_evals, in.b_evals, in.c_evals, d, c);
        } catch (const UnsatisfiedInstanceError&) {
            threw = true;
        }
        ck.check(threw);
    }
    return {"compute-h", ck.cases, ck.failures};
}

SuiteResult prover_suite(const VerifyOptions& opt) {
    Checker ck;
    OpCounters c;
    const CurveParams& curve = curve_preset("bls12-377-g1", opt.word_bits);
    const std::size_t n = 16, m = 8;
    NttDomain d = build_domain(n, *curve.fr, c);
    auto [pk, td] = mock_setup(n, m, opt.seed + 6, curve, c);
    MsmConfig cfg = MsmConfig::for_curve(curve, n);

    std::mt19937_64 rng(opt.seed + 7);
    for (int round = 0; round < 5; ++round) {
        ProverInputs in = random_instance(n, m, opt.seed + 300 + round, *curve.fr, c);
        Proof proof = prove(pk, in, d, cfg, c);
        ck.check(proof.transcript.transforms == 7);
        ck.check(check_with_trapdoor(proof, td, pk, in, d, c));

        // One flipped witness bit must be rejected against the original inputs.
        ProverInputs tampered = in;
        const std::size_t slot = rng() % m;
        const unsigned bit = unsigned(rng() % curve.fr->bit_length);
        FixedUint z = tampered.witness[slot];
        const unsigned limb = bit / z.word_bits();
        z.set_limb(limb, z.limb(limb) ^ (std::uint64_t{1} << (bit % z.word_bits())));
        OpCounters probe;
        if (cmp(z, curve.fr->modulus, probe) == Ordering::Less) {
            tampered.witness[slot] = z;
            Proof bad = prove(pk, tampered, d, cfg, c);
            ck.check(!check_with_trapdoor(bad, td, pk, in, d, c));
        } else {
            ck.check(true);  // flipped scalar left the field; skip this draw
        }
    }
    return {"prover", ck.cases, ck.failures};
}

}  // namespace

VerifySummary verify_suite(const VerifyOptions& opt) {
    VerifySummary summary;
    summary.suites.push_back(limbs_suite(opt));
    summary.suites.push_back(field_suite(opt));
    summary.suites.push_back(batch_inverse_suite(opt));
    summary.suites.push_back(curve_suite(opt));
    summary.suites.push_back(msm_suite(opt));
    summary.suites.push_back(ntt_suite(opt));
    summary.suites.push_back(compute_h_suite(opt));
    summary.suites.push_back(prover_suite(opt));
    for (const SuiteResult& s : summary.suites) {
        summary.total_cases += s.cases;
        summary.total_failures += s.failures;
    }
    summary.ok = summary.total_failures == 0;
    return summary;
}

}  // namespace zkplab
