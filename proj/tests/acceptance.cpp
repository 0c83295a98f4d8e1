// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code 0 only when everything passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles/toy_group.hpp"
#include "zkplab/errors.hpp"
#include "zkplab/harness.hpp"
#include "zkplab/presets.hpp"
#include "zkplab/prover.hpp"

using namespace zkplab;
using nlohmann::json;

namespace {

int g_failures = 0;

double now_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

void report(int id, const std::string& title, const Verdict& v, double seconds) {
    if (!v.pass) ++g_failures;
    std::printf("%s  criterion %2d: %s (%.1fs)%s%s\n", v.pass ? "PASS" : "FAIL", id,
                title.c_str(), seconds, v.detail.empty() ? "" : " -- ", v.detail.c_str());
    std::fflush(stdout);
}

OpCounters g_ctr;

std::vector<CurvePoint> chain_points(const CurveParams& c, std::size_t n, std::mt19937_64& rng) {
    CurvePoint g = convert(CurvePoint::affine(c.gen_x, c.gen_y), CoordForm::Jacobian, c, g_ctr);
    CurvePoint acc = scalar_mul(g, random_uint_below(c.fr->modulus, rng), c, g_ctr);
    if (acc.is_identity()) acc = g;
    std::vector<CurvePoint> chain;
    for (std::size_t i = 0; i < n; ++i) {
        chain.push_back(acc);
        acc = padd(acc, g, c, g_ctr);
    }
    return batch_to_affine(chain, c, g_ctr);
}

std::vector<FixedUint> random_scalars(const FieldParams& fr, std::size_t n,
                                      std::mt19937_64& rng) {
    std::vector<FixedUint> ks;
    for (std::size_t i = 0; i < n; ++i) ks.push_back(random_uint_below(fr.modulus, rng));
    return ks;
}

// --- 1. MSM oracle equivalence ---------------------------------------------

void criterion_1() {
    const double t0 = now_s();
    Verdict v;
    const unsigned windows[] = {1, 4, 8, 13, 16};
    const CoordForm forms[] = {CoordForm::Affine, CoordForm::Jacobian, CoordForm::Xyzz};

    // Toy curve: exhaustive n in 1..64.
    {
        const CurveParams& toy = curve_preset("toy");
        testoracle::ToyGroup table = testoracle::ToyGroup::enumerate(409, 0, 21);
        std::mt19937_64 rng(101);
        std::vector<CurvePoint> pts;
        std::vector<FixedUint> ks;
        for (std::size_t n = 1; n <= 64 && v.pass; ++n) {
            const testoracle::ToyPoint& tp = table.elements[1 + rng() % (table.order() - 1)];
            pts.push_back(CurvePoint::affine(
                FieldElement::from_u64(std::uint64_t(tp.x), *toy.fq, g_ctr),
                FieldElement::from_u64(std::uint64_t(tp.y), *toy.fq, g_ctr)));
            ks.push_back(random_uint_below(toy.fr->modulus, rng));
            CurvePoint want = msm_naive(pts, ks, toy, g_ctr);
            for (unsigned c : windows) {
                for (CoordForm form : forms) {
                    MsmConfig cfg;
                    cfg.scalar_bits = toy.fr->bit_length;
                    cfg.window_bits = c;
                    cfg.form = form;
                    if (!points_equal(msm(pts, ks, cfg, toy, g_ctr), want, toy, g_ctr)) {
                        v.require(false, "toy mismatch at n=" + std::to_string(n) +
                                             " c=" + std::to_string(c));
                        break;
                    }
                }
                if (!v.pass) break;
            }
        }
    }

    // BLS12-377 G1: sampled scales across every window width and form.
    {
        const CurveParams& bls = curve_preset("bls12-377-g1");
        std::mt19937_64 rng(202);
        for (unsigned scale : {8u, 10u, 12u}) {
            const std::size_t n = std::size_t{1} << scale;
            auto pts = chain_points(bls, n, rng);
            auto ks = random_scalars(*bls.fr, n, rng);
            CurvePoint want = msm_naive(pts, ks, bls, g_ctr);
            for (unsigned c : windows) {
                for (CoordForm form : forms) {
                    MsmConfig cfg;
                    cfg.scalar_bits = bls.fr->bit_length;
                    cfg.window_bits = c;
                    cfg.form = form;
                    if (!points_equal(msm(pts, ks, cfg, bls, g_ctr), want, bls, g_ctr))
                        v.require(false, "bls mismatch at 2^" + std::to_string(scale) +
                                             " c=" + std::to_string(c) + " " +
                                             coord_form_name(form));
                }
            }
        }
    }
    const double dt = now_s() - t0;
    v.require(dt < 300.0, "runtime bound exceeded: " + std::to_string(dt) + "s");
    report(1, "msm equals msm_naive (toy 1..64 exhaustive; bls 2^{8,10,12}; c in "
              "{1,4,8,13,16}; 3 forms)",
           v, dt);
}

// --- 2. NTT oracle equivalence ----------------------------------------------

void criterion_2() {
    const double t0 = now_s();
    Verdict v;
    std::mt19937_64 rng(303);
    for (const char* field : {"bls12-377-fr", "bls12-381-fr"}) {
        const FieldParams& f = field_preset(field);
        for (std::size_t n = 2; n <= 1024; n *= 2) {
            NttDomain d = build_domain(n, f, g_ctr);
            std::vector<FieldElement> vec;
            for (std::size_t i = 0; i < n; ++i) vec.push_back(random_element(f, rng, g_ctr));
            auto want = dft_naive(vec, d, Direction::Forward, g_ctr);
            if (ntt_radix2(vec, d, Direction::Forward, g_ctr) != want)
                v.require(false, std::string("radix2 != dft at n=") + std::to_string(n));
            for (unsigned r = 1; r <= 8; ++r)
                if (ntt_staged(vec, d, Direction::Forward, r, g_ctr) != want)
                    v.require(false, "staged(r=" + std::to_string(r) +
                                         ") != dft at n=" + std::to_string(n));
        }
        for (std::size_t n = 2; n <= (std::size_t{1} << 14); n *= 2) {
            NttDomain d = build_domain(n, f, g_ctr);
            std::vector<FieldElement> vec;
            for (std::size_t i = 0; i < n; ++i) vec.push_back(random_element(f, rng, g_ctr));
            if (ntt_radix2(ntt_radix2(vec, d, Direction::Forward, g_ctr), d, Direction::Inverse,
                           g_ctr) != vec)
                v.require(false, "intt(ntt(v)) != v at n=" + std::to_string(n));
        }
    }
    const double dt = now_s() - t0;
    v.require(dt < 120.0, "runtime bound exceeded");
    report(2, "ntt_radix2 and ntt_staged(1..8) equal dft_naive (n in 2..2^10, both scalar "
              "fields); intt o ntt = id up to 2^14",
           v, dt);
}

// --- 3. published operation-count matrix ------------------------------------

void criterion_3() {
    const double t0 = now_s();
    Verdict v;
    OptableReport rep = optable_report();
    v.require(rep.all_match, "at least one tracked cell reported DIFF");
    unsigned tracked = 0;
    for (const OptableEntry& e : rep.entries) {
        if (!e.tracked) continue;
        ++tracked;
        if (!e.match)
            v.require(false, e.form + " " + e.op + " diverges from the reference counts");
    }
    v.require(tracked == 6, "expected six tracked cells");
    v.require(rep.jacobian_mul_sqr_pct > 39.0 && rep.jacobian_mul_sqr_pct < 39.2,
              "jacobian mul+sqr share outside 39.1 +/- 0.1");
    v.require(rep.xyzz_mul_sqr_pct > 57.5 && rep.xyzz_mul_sqr_pct < 57.7,
              "xyzz mul+sqr share outside 57.6 +/- 0.1");
    report(3, "instrumented PADD/PDBL deltas match the published matrix; dominance 39.1% / "
              "57.6% within 0.1",
           v, now_s() - t0);
}

// --- 4. cost-model anchors ---------------------------------------------------

void criterion_4() {
    const double t0 = now_s();
    Verdict v;
    const std::uint64_t GiB = std::uint64_t{1} << 30;

    MsmCostModel m = cost_model(std::uint64_t{1} << 26, 253, 23, 1, 96);
    v.require(m.window_count == 11, "w != 11 at lambda=253, c=23");
    v.require(m.bucket_reduce_padds == std::uint64_t{11} * 2 * (1 << 23),
              "bucket-reduce bound != w * 2*2^23");
    v.require(m.bucket_reduce_padds / m.effective_windows == std::uint64_t{2} * (1 << 23),
              "per-window bound != 2*2^23");
    v.require(m.precompute_memory_bytes == 6 * GiB, "base-point memory != 6 GiB at 2^26");

    TradeoffReport at48 = tradeoff_report(253, 23, std::uint64_t{1} << 26, 48 * GiB);
    v.require(at48.smallest_fitting_weff == 2, "smallest fit at 48 GiB != 2");
    TradeoffReport at80 = tradeoff_report(253, 23, std::uint64_t{1} << 26, 80 * GiB);
    v.require(at80.smallest_fitting_weff == 1, "smallest fit at 80 GiB != 1");
    report(4, "cost model anchors: w=11; 2*2^23 PADDs per window; 6 GiB base points; 48/80 "
              "GiB fits at w_eff 2/1",
           v, now_s() - t0);
}

// --- 5. precomputation equivalence ------------------------------------------

void criterion_5() {
    const double t0 = now_s();
    Verdict v;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    std::mt19937_64 rng(505);
    const std::size_t n = 1 << 10;
    auto pts = chain_points(bls, n, rng);
    auto ks = random_scalars(*bls.fr, n, rng);

    MsmConfig cfg;
    cfg.scalar_bits = bls.fr->bit_length;
    cfg.window_bits = 16;  // w = 16: folds 1, 2, 4, 8, 16 all divide
    CurvePoint want = msm(pts, ks, cfg, bls, g_ctr);
    for (unsigned q : {1u, 2u, 4u, 8u, 16u}) {
        cfg.precompute_factor = q;
        auto table = precompute_points(pts, cfg, bls, g_ctr);
        if (!points_equal(msm_precomputed(table, ks, cfg, bls, g_ctr), want, bls, g_ctr))
            v.require(false, "fold q=" + std::to_string(q) + " diverges");
    }
    report(5, "msm_precomputed equals msm at n=2^10 for every q_max dividing w", v,
           now_s() - t0);
}

// --- 6. batched inversion ----------------------------------------------------

void criterion_6() {
    const double t0 = now_s();
    Verdict v;
    const FieldParams& fr = field_preset("bls12-377-fr");
    std::mt19937_64 rng(606);
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{1024}}) {
        std::vector<FieldElement> in;
        for (std::size_t i = 0; i < n; ++i) {
            FieldElement x = random_element(fr, rng, g_ctr);
            while (x.is_zero()) x = random_element(fr, rng, g_ctr);
            in.push_back(x);
        }
        OpCounters c;
        auto out = batch_inverse(in, c);
        v.require(c.ff_inv == 1, "N=" + std::to_string(n) + ": ff_inv != 1");
        v.require(c.ff_mul <= 3 * n, "N=" + std::to_string(n) + ": ff_mul > 3N");
        for (std::size_t i = 0; i < n; ++i)
            if (!(out[i] == ff_inv(in[i], g_ctr)))
                v.require(false, "N=" + std::to_string(n) + ": element mismatch");
    }
    report(6, "batch_inverse equals per-element ff_inv with 1 ff_inv and <= 3N ff_mul "
              "(N in {1,2,1024})",
           v, now_s() - t0);
}

// --- 7. quotient pipeline contract -------------------------------------------

void criterion_7() {
    const double t0 = now_s();
    Verdict v;
    const FieldParams& fr = field_preset("bls12-377-fr");
    const std::size_t n = 64;
    NttDomain d = build_domain(n, fr, g_ctr);
    std::mt19937_64 rng(707);
    unsigned failures = 0;
    for (int round = 0; round < 100; ++round) {
        std::vector<FieldElement> a, b, c;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(random_element(fr, rng, g_ctr));
            b.push_back(random_element(fr, rng, g_ctr));
            c.push_back(ff_mul(a[i], b[i], g_ctr));
        }
        NttStats stats;
        ComputeHResult res;
        try {
            res = compute_h(a, b, c, d, g_ctr, &stats);
        } catch (const UnsatisfiedInstanceError&) {
            ++failures;
            continue;
        }
        if (res.transforms != 7 || stats.transforms != 7) {
            v.require(false, "transform count != 7");
            break;
        }
        // independent divisibility check at 8 fresh random points
        auto ac = dft_naive(a, d, Direction::Inverse, g_ctr);
        auto bc = dft_naive(b, d, Direction::Inverse, g_ctr);
        auto cc = dft_naive(c, d, Direction::Inverse, g_ctr);
        const FixedUint n_exp = FixedUint::from_u64(n, fr.word_bits, fr.limb_count);
        for (int k = 0; k < 8; ++k) {
            FieldElement s = random_element(fr, rng, g_ctr);
            FieldElement sn = ff_pow(s, n_exp, g_ctr);
            while (sn.is_one()) {
                s = random_element(fr, rng, g_ctr);
                sn = ff_pow(s, n_exp, g_ctr);
            }
            FieldElement lhs =
                ff_sub(ff_mul(poly_eval(ac, s, g_ctr), poly_eval(bc, s, g_ctr), g_ctr),
                       poly_eval(cc, s, g_ctr), g_ctr);
            FieldElement rhs = ff_mul(poly_eval(res.h, s, g_ctr),
                                      ff_sub(sn, FieldElement::one(fr), g_ctr), g_ctr);
            if (!(lhs == rhs)) ++failures;
        }
    }
    v.require(failures == 0, std::to_string(failures) + " divisibility failures");
    report(7, "compute_h: 7 transforms per call; a(s)b(s)-c(s) = h(s)(s^n - 1) at 8 points "
              "x 100 instances, zero failures",
           v, now_s() - t0);
}

// --- 8. prover end-to-end -----------------------------------------------------

void criterion_8() {
    const double t0 = now_s();
    Verdict v;
    const CurveParams& bls = curve_preset("bls12-377-g1");
    const std::size_t n = 64, m = 64;
    NttDomain d = build_domain(n, *bls.fr, g_ctr);
    auto [pk, td] = mock_setup(n, m, 808, bls, g_ctr);
    MsmConfig cfg = MsmConfig::for_curve(bls, n);
    std::mt19937_64 rng(809);

    unsigned accept_failures = 0, reject_failures = 0;
    for (int round = 0; round < 100; ++round) {
        ProverInputs in = random_instance(n, m, 9000 + round, *bls.fr, g_ctr);
        Proof proof = prove(pk, in, d, cfg, g_ctr);
        if (!check_with_trapdoor(proof, td, pk, in, d, g_ctr)) ++accept_failures;

        // single-bit tamper of a proof coordinate (kept canonical)
        Proof bad = proof;
        CurvePoint a_aff = convert(bad.a_point, CoordForm::Affine, bls, g_ctr);
        FixedUint x = a_aff.is_identity() ? FixedUint::zero(bls.fq->word_bits, bls.fq->limb_count)
                                          : a_aff.x().repr();
        OpCounters probe;
        for (;;) {
            const unsigned bit = unsigned(rng() % bls.fq->bit_length);
            FixedUint flipped = x;
            const unsigned limb = bit / flipped.word_bits();
            flipped.set_limb(limb,
                             flipped.limb(limb) ^ (std::uint64_t{1} << (bit % flipped.word_bits())));
            if (cmp(flipped, bls.fq->modulus, probe) == Ordering::Less) {
                x = flipped;
                break;
            }
        }
        bad.a_point = a_aff.is_identity()
                          ? CurvePoint::affine(FieldElement::from_repr(x, *bls.fq),
                                               FieldElement::one(*bls.fq))
                          : CurvePoint::affine(FieldElement::from_repr(x, *bls.fq), a_aff.y());
        if (check_with_trapdoor(bad, td, pk, in, d, g_ctr)) ++reject_failures;
    }
    v.require(accept_failures == 0,
              std::to_string(accept_failures) + " honest proofs rejected");
    v.require(reject_failures == 0,
              std::to_string(reject_failures) + " tampered proofs accepted");
    const double dt = now_s() - t0;
    v.require(dt < 120.0, "runtime bound exceeded");
    report(8, "trapdoor check accepts 100 honest and rejects 100 single-bit-tampered proofs "
              "at n=2^6",
           v, dt);
}

// --- 9. substituted desk-scale properties -------------------------------------

void criterion_9() {
    const double t0 = now_s();
    Verdict v;
    BenchConfig cfg;
    cfg.scale_min = cfg.scale_max = 10;
    cfg.warmup = 1;
    cfg.reps = 2;
    cfg.seed = 909;
    cfg.window_bits = 7;
    BenchReport rep = run_bench(cfg);

    double total = 0;
    for (const BenchEntry& e : rep.entries) total += e.share_pct;
    v.require(total > 99.9 && total < 100.1, "shares do not sum to 100 +/- 0.1");

    json j = to_json(rep);
    v.require(j.contains("schema_version") && j.contains("entries") && j["entries"].size() == 2,
              "report shape missing expected sections");
    for (const json& e : j["entries"])
        v.require(e.contains("counters") && e.contains("timing") && e.contains("scale"),
                  "entry missing counters/timing/scale");

    // counters invariant under the thread count
    BenchConfig threaded = cfg;
    threaded.threads = 3;
    BenchReport rep3 = run_bench(threaded);
    json v1 = bench_counters_view(rep);
    json v3 = bench_counters_view(rep3);
    v1.erase("config");
    v3.erase("config");
    v.require(v1.dump() == v3.dump(), "counters changed with the thread count");

    // limb-work ordering analog at L=12
    const FieldParams& fq = field_preset("bls12-377-fq");
    std::mt19937_64 rng(910);
    FieldElement a = random_element(fq, rng, g_ctr);
    FieldElement b = random_element(fq, rng, g_ctr);
    OpCounters cm, ca;
    ff_mul(a, b, cm);
    ff_add(a, b, ca);
    v.require(cm.limb_total() >= 5 * ca.limb_total(), "ff_mul/ff_add limb ratio below 5");

    report(9, "report shapes from real CPU runs: shares sum to 100 +/- 0.1; counters "
              "thread-invariant; ff_mul/ff_add limb ratio >= 5 at L=12",
           v, now_s() - t0);
}

// --- 10. determinism -----------------------------------------------------------

void criterion_10() {
    const double t0 = now_s();
    Verdict v;
    BenchConfig cfg;
    cfg.scale_min = cfg.scale_max = 8;
    cfg.warmup = 0;
    cfg.reps = 1;
    cfg.seed = 1010;
    cfg.window_bits = 5;
    BenchReport a = run_bench(cfg);
    BenchReport b = run_bench(cfg);
    v.require(bench_counters_view(a).dump() == bench_counters_view(b).dump(),
              "counter sections differ between identical runs");
    report(10, "byte-identical counter sections for identical seed/config/threads", v,
           now_s() - t0);
}

}  // namespace

int main() {
    const double t0 = now_s();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s: %d/10 criteria passed (%.1fs total)\n", g_failures == 0 ? "OK" : "FAILED",
                10 - g_failures, now_s() - t0);
    return g_failures == 0 ? 0 : 1;
}
