#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zkplab/curve.hpp"

namespace zkplab {

// Pippenger bucket-method configuration. A scalar_bits-wide scalar splits
// into window_count() digits of window_bits each; buckets accumulate in
// `form` (XYZZ by default). precompute_factor q >= 1 folds the window set by
// q using a table of 2^(q*c) multiples.
struct MsmConfig {
    unsigned scalar_bits = 0;
    unsigned window_bits = 0;
    CoordForm form = CoordForm::Xyzz;
    unsigned precompute_factor = 1;
    int threads = 0;  // 0 = runtime default

    unsigned window_count() const { return (scalar_bits + window_bits - 1) / window_bits; }
    unsigned effective_windows() const {
        return (window_count() + precompute_factor - 1) / precompute_factor;
    }

    // Standard sizing: c = max(1, floor(log2 n) - 3), lambda from the curve's
    // scalar field.
    static MsmConfig for_curve(const CurveParams& c, std::size_t n);
};

// Point-operation tallies of one MSM run (identity-skipping fast paths are
// not counted; only additions/doublings that ran a generic formula).
struct MsmStats {
    std::uint64_t bucket_accum_padds = 0;
    std::uint64_t bucket_reduce_padds = 0;
    std::uint64_t window_reduce_padds = 0;
    std::uint64_t window_reduce_pdbls = 0;

    void merge(const MsmStats& o) {
        bucket_accum_padds += o.bucket_accum_padds;
        bucket_reduce_padds += o.bucket_reduce_padds;
        window_reduce_padds += o.window_reduce_padds;
        window_reduce_pdbls += o.window_reduce_pdbls;
    }
};

// Base-2^c digits of k, least-significant window first; recombination
// sum(digits[j] * 2^(j*c)) == k holds exactly. Throws if k has more than
// scalar_bits bits.
std::vector<std::uint32_t> window_decompose(const FixedUint& k, const MsmConfig& cfg);

// Buckets for one window: result[b-1] == sum of points whose digit equals b,
// accumulated in cfg.form; digit 0 contributes nothing. `digits` holds this
// window's digit per point.
std::vector<CurvePoint> bucket_accumulate(std::span<const CurvePoint> points,
                                          std::span<const std::uint32_t> digits,
                                          const MsmConfig& cfg, const CurveParams& c,
                                          OpCounters& ctr, MsmStats* stats = nullptr);

// Sum-of-sums: sum_b b * buckets[b-1] with two running accumulators;
// at most 2 * 2^c point additions (identity buckets are skipped).
CurvePoint bucket_reduce(std::span<const CurvePoint> buckets, const CurveParams& c,
                         OpCounters& ctr, MsmStats* stats = nullptr);

// Horner recombination sum_j 2^(j*stride_bits) * window_sums[j], most
// significant window first; serial by design.
CurvePoint window_reduce(std::span<const CurvePoint> window_sums, unsigned stride_bits,
                         const CurveParams& c, OpCounters& ctr, MsmStats* stats = nullptr);

// Full Pippenger MSM over affine input points. Windows are processed as
// independent work items (parallelized when OpenMP is enabled); results and
// counter totals are identical for any thread count.
CurvePoint msm(std::span<const CurvePoint> points, std::span<const FixedUint> scalars,
               const MsmConfig& cfg, const CurveParams& c, OpCounters& ctr,
               MsmStats* stats = nullptr);

// Reference dot product sum_i k_i * P_i via double-and-add; the oracle for
// msm and msm_precomputed.
CurvePoint msm_naive(std::span<const CurvePoint> points, std::span<const FixedUint> scalars,
                     const CurveParams& c, OpCounters& ctr);

// table[q][i] == 2^(q*c) * P_i in affine form, q in [0, precompute_factor).
std::vector<std::vector<CurvePoint>> precompute_points(std::span<const CurvePoint> points,
                                                       const MsmConfig& cfg, const CurveParams& c,
                                                       OpCounters& ctr);

// MSM with the window set folded by precompute_factor: window j = s*q + r
// lands in effective window s using table row r. Same group result as msm.
CurvePoint msm_precomputed(std::span<const std::vector<CurvePoint>> table,
                           std::span<const FixedUint> scalars, const MsmConfig& cfg,
                           const CurveParams& c, OpCounters& ctr, MsmStats* stats = nullptr);

struct MsmCostModel {
    unsigned window_count = 0;             // w = ceil(lambda / c)
    unsigned effective_windows = 0;        // ceil(w / q)
    std::uint64_t bucket_reduce_padds = 0;     // w_eff * 2 * 2^c
    std::uint64_t total_ffmul_estimate = 0;    // bucket_reduce_padds * ffmul_per_padd
    std::uint64_t precompute_memory_bytes = 0; // n * q * affine_point_bytes
};

// Closed-form bucket-reduction cost and precompute-table storage.
MsmCostModel cost_model(std::uint64_t n, unsigned scalar_bits, unsigned window_bits,
                        unsigned precompute_factor, unsigned affine_point_bytes,
                        unsigned ffmul_per_padd = 10);

}  // namespace zkplab
