#include "zkplab/ntt.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zkplab/errors.hpp"

namespace zkplab {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::size_t n) {
    unsigned l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

FixedUint pow2_exponent(unsigned k, const FieldParams& f) {
    FixedUint e = FixedUint::zero(f.word_bits, f.limb_count);
    e.set_limb(k / f.word_bits, std::uint64_t{1} << (k % f.word_bits));
    return e;
}

std::vector<FieldElement> bit_reverse_copy(std::span<const FieldElement> v, unsigned log2n) {
    std::vector<FieldElement> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t r = 0;
        for (unsigned b = 0; b < log2n; ++b) r |= ((i >> b) & 1) << (log2n - 1 - b);
        out[r] = v[i];
    }
    return out;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

}  // namespace

NttDomain build_domain(std::size_t n, const FieldParams& f, OpCounters& ctr) {
    if (!is_pow2(n))
        throw UsageError("domain size must be a power of two");
    const unsigned log2n = log2_exact(n);
    if (log2n > f.two_adicity)
        throw UsageError("domain size 2^" + std::to_string(log2n) +
                         " exceeds the field's 2-adicity 2^" + std::to_string(f.two_adicity));

    NttDomain d;
    d.field = &f;
    d.n = n;
    d.log2n = log2n;

    // g^t_odd has order exactly 2^s; lower it to order n.
    FieldElement g = FieldElement::from_uint(f.generator, f, ctr);
    FieldElement root = ff_pow(g, f.t_odd, ctr);
    d.omega = ff_pow(root, pow2_exponent(f.two_adicity - log2n, f), ctr);

    FieldElement w = ff_pow(d.omega, FixedUint::from_u64(n, f.word_bits, f.limb_count), ctr);
    if (!w.is_one())
        throw UsageError("root of unity is not n-th order");
    if (n > 1) {
        FieldElement half = ff_pow(d.omega, FixedUint::from_u64(n / 2, f.word_bits, f.limb_count),
                                   ctr);
        if (!(ff_add(half, FieldElement::one(f), ctr).is_zero()))
            throw UsageError("root of unity is not primitive");
    }

    d.omega_inv = ff_inv(d.omega, ctr);
    d.n_inv = ff_inv(FieldElement::from_u64(n, f, ctr), ctr);
    d.coset_g = g;
    d.coset_g_inv = ff_inv(g, ctr);
    d.z_coset = ff_sub(ff_pow(g, FixedUint::from_u64(n, f.word_bits, f.limb_count), ctr),
                       FieldElement::one(f), ctr);
    if (d.z_coset.is_zero())
        throw UsageError("coset generator vanishes on x^n - 1");
    d.z_coset_inv = ff_inv(d.z_coset, ctr);

    d.twiddles.reserve(n / 2 + 1);
    d.inv_twiddles.reserve(n / 2 + 1);
    d.twiddles.push_back(FieldElement::one(f));
    d.inv_twiddles.push_back(FieldElement::one(f));
    for (std::size_t k = 1; k < n / 2; ++k) {
        d.twiddles.push_back(ff_mul(d.twiddles.back(), d.omega, ctr));
        d.inv_twiddles.push_back(ff_mul(d.inv_twiddles.back(), d.omega_inv, ctr));
    }
    return d;
}

void butterfly(FieldElement& a, FieldElement& b, const FieldElement& twiddle, OpCounters& ctr,
               NttStats* stats) {
    FieldElement bt = ff_mul(b, twiddle, ctr);
    FieldElement a2 = ff_add(a, bt, ctr);
    b = ff_sub(a, bt, ctr);
    a = a2;
    if (stats) ++stats->butterflies;
}

std::vector<FieldElement> dft_naive(std::span<const FieldElement> v, const NttDomain& d,
                                    Direction dir, OpCounters& ctr) {
    if (v.size() != d.n)
        throw UsageError("dft_naive: vector size does not match the domain");
    const FieldParams& f = *d.field;
    const FieldElement& w = dir == Direction::Forward ? d.omega : d.omega_inv;
    std::vector<FieldElement> out(d.n, FieldElement::zero(f));
    FieldElement wk = FieldElement::one(f);  // w^k
    for (std::size_t k = 0; k < d.n; ++k) {
        FieldElement acc = FieldElement::zero(f);
        FieldElement wkj = FieldElement::one(f);  // w^(k*j)
        for (std::size_t j = 0; j < d.n; ++j) {
            acc = ff_add(acc, ff_mul(v[j], wkj, ctr), ctr);
            wkj = ff_mul(wkj, wk, ctr);
        }
        out[k] = acc;
        wk = ff_mul(wk, w, ctr);
    }
    if (dir == Direction::Inverse)
        for (auto& x : out) x = ff_mul(x, d.n_inv, ctr);
    return out;
}

namespace {

// One decimation-in-time stage over the whole vector: blocks of size 2^s,
// butterfly pairs (q, q + half) against twiddle[q * n/2^s]. Pairs are
// disjoint, so any execution order gives the same bits.
void run_stage(std::vector<FieldElement>& a, const std::vector<FieldElement>& tw, unsigned s,
               std::size_t n, OpCounters& ctr, NttStats* stats, int threads) {
    const std::size_t m = std::size_t{1} << s;
    const std::size_t half = m >> 1;
    const std::size_t stride = n >> s;
    const std::size_t pairs = n / 2;
#ifdef _OPENMP
    if (threads > 1) {
        std::vector<OpCounters> tctr(threads);
        std::vector<NttStats> tstats(threads);
#pragma omp parallel num_threads(threads)
        {
            const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
            for (long long p = 0; p < (long long)pairs; ++p) {
                const std::size_t k = (std::size_t(p) / half) * m;
                const std::size_t q = std::size_t(p) % half;
                butterfly(a[k + q], a[k + q + half], tw[q * stride], tctr[tid],
                          stats ? &tstats[tid] : nullptr);
            }
        }
        for (int t = 0; t < threads; ++t) {
            ctr.merge(tctr[t]);
            if (stats) stats->merge(tstats[t]);
        }
        return;
    }
#else
    (void)threads;
#endif
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::size_t k = (p / half) * m;
        const std::size_t q = p % half;
        butterfly(a[k + q], a[k + q + half], tw[q * stride], ctr, stats);
    }
}

void scale_all(std::vector<FieldElement>& a, const FieldElement& s, OpCounters& ctr) {
    for (auto& x : a) x = ff_mul(x, s, ctr);
}

}  // namespace

std::vector<FieldElement> ntt_radix2(std::span<const FieldElement> v, const NttDomain& d,
                                     Direction dir, OpCounters& ctr, NttStats* stats,
                                     int threads) {
    if (v.size() != d.n)
        throw UsageError("ntt_radix2: vector size does not match the domain");
    if (stats) ++stats->transforms;
    std::vector<FieldElement> a = bit_reverse_copy(v, d.log2n);
    if (d.n == 1) return a;
    const auto& tw = dir == Direction::Forward ? d.twiddles : d.inv_twiddles;
    const int nt = resolve_threads(threads);
    for (unsigned s = 1; s <= d.log2n; ++s) run_stage(a, tw, s, d.n, ctr, stats, nt);
    if (dir == Direction::Inverse) scale_all(a, d.n_inv, ctr);
    return a;
}

std::vector<FieldElement> ntt_staged(std::span<const FieldElement> v, const NttDomain& d,
                                     Direction dir, unsigned radix_log, OpCounters& ctr,
                                     NttStats* stats, int threads) {
    if (radix_log < 1 || radix_log > 8)
        throw UsageError("radix_log must be in [1, 8]");
    if (v.size() != d.n)
        throw UsageError("ntt_staged: vector size does not match the domain");
    if (stats) ++stats->transforms;
    std::vector<FieldElement> a = bit_reverse_copy(v, d.log2n);
    if (d.n == 1) return a;
    const auto& tw = dir == Direction::Forward ? d.twiddles : d.inv_twiddles;
    const std::size_t n = d.n;
    const int nt = resolve_threads(threads);

    // Each pass fuses rb stages: a tile gathers 2^rb elements with stride
    // 2^s0, runs its rb local stages, scatters back. The tile is the
    // shared-memory working set of the batched-stage kernels this mirrors.
    for (unsigned s0 = 0; s0 < d.log2n;) {
        const unsigned rb = std::min(radix_log, d.log2n - s0);
        const std::size_t tile = std::size_t{1} << rb;
        const std::size_t in_stride = std::size_t{1} << s0;
        const std::size_t block = tile * in_stride;
        const std::size_t tiles = n / tile;

        auto run_tile = [&](std::size_t tidx, OpCounters& c, NttStats* st) {
            const std::size_t base = (tidx / in_stride) * block;
            const std::size_t t = tidx % in_stride;
            std::vector<FieldElement> local(tile);
            for (std::size_t j = 0; j < tile; ++j) local[j] = a[base + t + (j << s0)];
            for (unsigned ls = 1; ls <= rb; ++ls) {
                const std::size_t m = std::size_t{1} << ls;
                const std::size_t half = m >> 1;
                const std::size_t stride = n >> (s0 + ls);
                for (std::size_t j0 = 0; j0 < tile; j0 += m)
                    for (std::size_t q = 0; q < half; ++q)
                        butterfly(local[j0 + q], local[j0 + q + half],
                                  tw[(t + (q << s0)) * stride], c, st);
            }
            for (std::size_t j = 0; j < tile; ++j) a[base + t + (j << s0)] = local[j];
        };

#ifdef _OPENMP
        if (nt > 1) {
            std::vector<OpCounters> tctr(nt);
            std::vector<NttStats> tstats(nt);
#pragma omp parallel num_threads(nt)
            {
                const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
                for (long long i = 0; i < (long long)tiles; ++i)
                    run_tile(std::size_t(i), tctr[tid], stats ? &tstats[tid] : nullptr);
            }
            for (int t = 0; t < nt; ++t) {
                ctr.merge(tctr[t]);
                if (stats) stats->merge(tstats[t]);
            }
        } else
#endif
        {
            for (std::size_t i = 0; i < tiles; ++i) run_tile(i, ctr, stats);
        }
        s0 += rb;
    }
    if (dir == Direction::Inverse) scale_all(a, d.n_inv, ctr);
    return a;
}

std::vector<FieldElement> coset_ntt(std::span<const FieldElement> v, const NttDomain& d,
                                    Direction dir, OpCounters& ctr, NttStats* stats,
                                    int threads) {
    if (v.size() != d.n)
        throw UsageError("coset_ntt: vector size does not match the domain");
    const FieldParams& f = *d.field;
    if (dir == Direction::Forward) {
        std::vector<FieldElement> scaled(d.n);
        FieldElement gp = FieldElement::one(f);
        for (std::size_t j = 0; j < d.n; ++j) {
            scaled[j] = ff_mul(v[j], gp, ctr);
            if (j + 1 < d.n) gp = ff_mul(gp, d.coset_g, ctr);
        }
        return ntt_radix2(scaled, d, Direction::Forward, ctr, stats, threads);
    }
    std::vector<FieldElement> out = ntt_radix2(v, d, Direction::Inverse, ctr, stats, threads);
    FieldElement gp = FieldElement::one(f);
    for (std::size_t j = 0; j < d.n; ++j) {
        out[j] = ff_mul(out[j], gp, ctr);
        if (j + 1 < d.n) gp = ff_mul(gp, d.coset_g_inv, ctr);
    }
    return out;
}

std::vector<FieldElement> poly_mul(std::span<const FieldElement> p,
                                   std::span<const FieldElement> q, const FieldParams& f,
                                   OpCounters& ctr, NttStats* stats) {
    if (p.empty() || q.empty())
        throw UsageError("poly_mul: empty polynomial");
    const std::size_t out_len = p.size() + q.size() - 1;
    std::size_t n = 1;
    while (n < out_len) n <<= 1;
    if (log2_exact(n) > f.two_adicity)
        throw UsageError("poly_mul: product degree exceeds every available domain");

    NttDomain d = build_domain(n, f, ctr);
    std::vector<FieldElement> pa(n, FieldElement::zero(f));
    std::vector<FieldElement> qa(n, FieldElement::zero(f));
    std::copy(p.begin(), p.end(), pa.begin());
    std::copy(q.begin(), q.end(), qa.begin());
    auto pe = ntt_radix2(pa, d, Direction::Forward, ctr, stats);
    auto qe = ntt_radix2(qa, d, Direction::Forward, ctr, stats);
    for (std::size_t i = 0; i < n; ++i) pe[i] = ff_mul(pe[i], qe[i], ctr);
    auto full = ntt_radix2(pe, d, Direction::Inverse, ctr, stats);
    full.resize(out_len, FieldElement::zero(f));
    return full;
}

FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x,
                       OpCounters& ctr) {
    FieldElement acc = FieldElement::zero(x.params());
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = ff_add(ff_mul(acc, x, ctr), coeffs[i], ctr);
    return acc;
}

ComputeHResult compute_h(std::span<const FieldElement> a_evals,
                         std::span<const FieldElement> b_evals,
                         std::span<const FieldElement> c_evals, const NttDomain& d,
                         OpCounters& ctr, NttStats* stats, unsigned check_points,
                         std::uint64_t check_seed, int threads) {
    if (a_evals.size() != d.n || b_evals.size() != d.n || c_evals.size() != d.n)
        throw UsageError("compute_h: evaluation vectors must match the domain size");
    const FieldParams& f = *d.field;
    NttStats local;

    // Coefficient forms.
    auto ac = ntt_radix2(a_evals, d, Direction::Inverse, ctr, &local, threads);
    auto bc = ntt_radix2(b_evals, d, Direction::Inverse, ctr, &local, threads);
    auto cc = ntt_radix2(c_evals, d, Direction::Inverse, ctr, &local, threads);

    // Evaluations on the coset, where x^n - 1 is the nonzero constant g^n - 1.
    auto ag = coset_ntt(ac, d, Direction::Forward, ctr, &local, threads);
    auto bg = coset_ntt(bc, d, Direction::Forward, ctr, &local, threads);
    auto cg = coset_ntt(cc, d, Direction::Forward, ctr, &local, threads);

    std::vector<FieldElement> hg(d.n);
    for (std::size_t i = 0; i < d.n; ++i) {
        FieldElement t = ff_sub(ff_mul(ag[i], bg[i], ctr), cg[i], ctr);
        hg[i] = ff_mul(t, d.z_coset_inv, ctr);
    }
    auto h = coset_ntt(hg, d, Direction::Inverse, ctr, &local, threads);

    // Divisibility spot check at random points off the domain:
    // a(s)b(s) - c(s) == h(s) * (s^n - 1).
    std::mt19937_64 rng(check_seed);
    const FixedUint n_exp = FixedUint::from_u64(d.n, f.word_bits, f.limb_count);
    for (unsigned k = 0; k < check_points; ++k) {
        FieldElement s = random_element(f, rng, ctr);
        FieldElement sn = ff_pow(s, n_exp, ctr);
        while (sn.is_one()) {  // stay outside the domain (and off the coset roots)
            s = random_element(f, rng, ctr);
            sn = ff_pow(s, n_exp, ctr);
        }
        FieldElement lhs = ff_sub(
            ff_mul(poly_eval(ac, s, ctr), poly_eval(bc, s, ctr), ctr), poly_eval(cc, s, ctr), ctr);
        FieldElement rhs =
            ff_mul(poly_eval(h, s, ctr), ff_sub(sn, FieldElement::one(f), ctr), ctr);
        if (!(lhs == rhs))
            throw UnsatisfiedInstanceError("quotient divisibility check failed at spot " +
                                           std::to_string(k));
    }

    if (stats) stats->merge(local);
    return {std::move(h), local.transforms};
}

}  // namespace zkplab
