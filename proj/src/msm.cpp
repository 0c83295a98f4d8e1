#include "zkplab/msm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zkplab/errors.hpp"

namespace zkplab {

MsmConfig MsmConfig::for_curve(const CurveParams& c, std::size_t n) {
    MsmConfig cfg;
    cfg.scalar_bits = c.fr->bit_length;
    unsigned log2n = 0;
    while ((std::size_t{1} << (log2n + 1)) <= n) ++log2n;
    cfg.window_bits = log2n > 4 ? log2n - 3 : 1;
    return cfg;
}

std::vector<std::uint32_t> window_decompose(const FixedUint& k, const MsmConfig& cfg) {
    if (cfg.window_bits < 1 || cfg.window_bits > 31)
        throw UsageError("window_bits must be in [1, 31]");
    if (k.bit_length() > cfg.scalar_bits)
        throw UsageError("scalar exceeds the configured bit width");
    const unsigned w = cfg.window_count();
    std::vector<std::uint32_t> digits(w);
    for (unsigned j = 0; j < w; ++j) digits[j] = k.window_digit(j, cfg.window_bits);
    return digits;
}

std::vector<CurvePoint> bucket_accumulate(std::span<const CurvePoint> points,
                                          std::span<const std::uint32_t> digits,
                                          const MsmConfig& cfg, const CurveParams& c,
                                          OpCounters& ctr, MsmStats* stats) {
    if (points.size() != digits.size())
        throw UsageError("bucket_accumulate: point/digit count mismatch");
    const std::size_t bucket_count = (std::size_t{1} << cfg.window_bits) - 1;
    std::vector<CurvePoint> buckets(bucket_count, CurvePoint::identity(cfg.form, c));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::uint32_t d = digits[i];
        if (d == 0) continue;
        CurvePoint lifted = convert(points[i], cfg.form, c, ctr);  // affine lift is free
        CurvePoint& slot = buckets[d - 1];
        if (!slot.is_identity() && stats) ++stats->bucket_accum_padds;
        slot = padd(slot, lifted, c, ctr);
    }
    return buckets;
}

CurvePoint bucket_reduce(std::span<const CurvePoint> buckets, const CurveParams& c,
                         OpCounters& ctr, MsmStats* stats) {
    CurvePoint running = CurvePoint::identity(buckets.empty() ? CoordForm::Xyzz : buckets[0].form(), c);
    CurvePoint acc = running;
    for (std::size_t b = buckets.size(); b-- > 0;) {
        const CurvePoint& bucket = buckets[b];
        if (!bucket.is_identity()) {
            if (!running.is_identity() && stats) ++stats->bucket_reduce_padds;
            running = padd(running, bucket, c, ctr);
        }
        if (!running.is_identity()) {
            if (!acc.is_identity() && stats) ++stats->bucket_reduce_padds;
            acc = padd(acc, running, c, ctr);
        }
    }
    return acc;
}

CurvePoint window_reduce(std::span<const CurvePoint> window_sums, unsigned stride_bits,
                         const CurveParams& c, OpCounters& ctr, MsmStats* stats) {
    if (window_sums.empty())
        throw UsageError("window_reduce: need at least one window");
    CurvePoint acc = window_sums.back();
    for (std::size_t j = window_sums.size() - 1; j-- > 0;) {
        for (unsigned k = 0; k < stride_bits; ++k) {
            if (!acc.is_identity() && stats) ++stats->window_reduce_pdbls;
            acc = pdbl(acc, c, ctr);
        }
        if (!window_sums[j].is_identity()) {
            if (!acc.is_identity() && stats) ++stats->window_reduce_padds;
            acc = padd(acc, window_sums[j], c, ctr);
        }
    }
    return acc;
}

namespace {

void check_msm_inputs(std::span<const CurvePoint> points, std::span<const FixedUint> scalars,
                      const CurveParams& c, OpCounters& ctr) {
    if (points.size() != scalars.size())
        throw UsageError("msm: point/scalar count mismatch");
    if (points.empty())
        throw UsageError("msm: empty input");
    for (const CurvePoint& p : points) {
        if (p.form() != CoordForm::Affine)
            throw UsageError("msm: input points must be affine");
        if (!is_on_curve(p, c, ctr))
            throw UsageError("msm: input point not on the curve");
    }
}

// Runs one effective window: accumulate digits into buckets, reduce. The
// digit/point pairs come from `source`, letting plain and folded MSM share
// the loop.
struct WindowTask {
    std::vector<CurvePoint> buckets;
};

}  // namespace

CurvePoint msm(std::span<const CurvePoint> points, std::span<const FixedUint> scalars,
               const MsmConfig& cfg, const CurveParams& c, OpCounters& ctr, MsmStats* stats) {
    check_msm_inputs(points, scalars, c, ctr);
    const std::size_t n = points.size();
    const unsigned w = cfg.window_count();

    // Digit matrix, window-major stride.
    std::vector<std::uint32_t> digits(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        auto d = window_decompose(scalars[i], cfg);
        for (unsigned j = 0; j < w; ++j) digits[i * w + j] = d[j];
    }

    // Windows are independent; each gets its own counter context so the
    // merged totals do not depend on the thread count.
    std::vector<OpCounters> wctr(w);
    std::vector<MsmStats> wstats(w);
    std::vector<CurvePoint> sums(w);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
#endif
    for (int j = 0; j < int(w); ++j) {
        std::vector<std::uint32_t> column(n);
        for (std::size_t i = 0; i < n; ++i) column[i] = digits[i * w + j];
        auto buckets = bucket_accumulate(points, column, cfg, c, wctr[j], &wstats[j]);
        sums[j] = bucket_reduce(buckets, c, wctr[j], &wstats[j]);
    }

    for (unsigned j = 0; j < w; ++j) {
        ctr.merge(wctr[j]);
        if (stats) stats->merge(wstats[j]);
    }
    return window_reduce(sums, cfg.window_bits, c, ctr, stats);
}

CurvePoint msm_naive(std::span<const CurvePoint> points, std::span<const FixedUint> scalars,
                     const CurveParams& c, OpCounters& ctr) {
    if (points.size() != scalars.size())
        throw UsageError("msm_naive: point/scalar count mismatch");
    if (points.empty())
        throw UsageError("msm_naive: empty input");
    CurvePoint acc = CurvePoint::identity(CoordForm::Jacobian, c);
    for (std::size_t i = 0; i < points.size(); ++i) {
        CurvePoint base = convert(points[i], CoordForm::Jacobian, c, ctr);
        acc = padd(acc, scalar_mul(base, scalars[i], c, ctr), c, ctr);
    }
    return acc;
}

std::vector<std::vector<CurvePoint>> precompute_points(std::span<const CurvePoint> points,
                                                       const MsmConfig& cfg, const CurveParams& c,
                                                       OpCounters& ctr) {
    if (cfg.precompute_factor < 1)
        throw UsageError("precompute_factor must be >= 1");
    std::vector<std::vector<CurvePoint>> table;
    table.reserve(cfg.precompute_factor);
    table.emplace_back(points.begin(), points.end());
    for (unsigned q = 1; q < cfg.precompute_factor; ++q) {
        // Scale the previous row by 2^c, then normalize the whole row with a
        // single batched inversion.
        std::vector<CurvePoint> row;
        row.reserve(points.size());
        for (const CurvePoint& prev : table[q - 1]) {
            CurvePoint acc = convert(prev, CoordForm::Jacobian, c, ctr);
            for (unsigned k = 0; k < cfg.window_bits; ++k) acc = pdbl(acc, c, ctr);
            row.push_back(acc);
        }
        table.push_back(batch_to_affine(row, c, ctr));
    }
    return table;
}

CurvePoint msm_precomputed(std::span<const std::vector<CurvePoint>> table,
                           std::span<const FixedUint> scalars, const MsmConfig& cfg,
                           const CurveParams& c, OpCounters& ctr, MsmStats* stats) {
    if (table.empty() || table.size() != cfg.precompute_factor)
        throw UsageError("msm_precomputed: table rows must equal precompute_factor");
    const std::size_t n = scalars.size();
    for (const auto& row : table)
        if (row.size() != n)
            throw UsageError("msm_precomputed: table row size mismatch");

    const unsigned w = cfg.window_count();
    const unsigned q_max = cfg.precompute_factor;
    const unsigned w_eff = cfg.effective_windows();

    std::vector<std::uint32_t> digits(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        auto d = window_decompose(scalars[i], cfg);
        for (unsigned j = 0; j < w; ++j) digits[i * w + j] = d[j];
    }

    std::vector<OpCounters> wctr(w_eff);
    std::vector<MsmStats> wstats(w_eff);
    std::vector<CurvePoint> sums(w_eff);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
#endif
    for (int s = 0; s < int(w_eff); ++s) {
        OpCounters& wc = wctr[s];
        MsmStats& ws = wstats[s];
        const std::size_t bucket_count = (std::size_t{1} << cfg.window_bits) - 1;
        std::vector<CurvePoint> buckets(bucket_count, CurvePoint::identity(cfg.form, c));
        // Window j = s*q_max + q feeds effective window s with table row q.
        for (unsigned q = 0; q < q_max; ++q) {
            const unsigned j = unsigned(s) * q_max + q;
            if (j >= w) break;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t d = digits[i * w + j];
                if (d == 0) continue;
                CurvePoint lifted = convert(table[q][i], cfg.form, c, wc);
                CurvePoint& slot = buckets[d - 1];
                if (!slot.is_identity()) ++ws.bucket_accum_padds;
                slot = padd(slot, lifted, c, wc);
            }
        }
        sums[s] = bucket_reduce(buckets, c, wc, &ws);
    }

    for (unsigned s = 0; s < w_eff; ++s) {
        ctr.merge(wctr[s]);
        if (stats) stats->merge(wstats[s]);
    }
    return window_reduce(sums, cfg.window_bits * q_max, c, ctr, stats);
}

MsmCostModel cost_model(std::uint64_t n, unsigned scalar_bits, unsigned window_bits,
                        unsigned precompute_factor, unsigned affine_point_bytes,
                        unsigned ffmul_per_padd) {
    if (scalar_bits == 0 || window_bits == 0 || precompute_factor == 0)
        throw UsageError("cost_model: parameters must be positive");
    MsmCostModel m;
    m.window_count = (scalar_bits + window_bits - 1) / window_bits;
    m.effective_windows = (m.window_count + precompute_factor - 1) / precompute_factor;
    m.bucket_reduce_padds =
        std::uint64_t(m.effective_windows) * 2 * (std::uint64_t{1} << window_bits);
    m.total_ffmul_estimate = m.bucket_reduce_padds * ffmul_per_padd;
    m.precompute_memory_bytes = n * std::uint64_t(precompute_factor) * affine_point_bytes;
    return m;
}

}  // namespace zkplab
