#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zkplab/field.hpp"

namespace zkplab {

enum class Direction { Forward, Inverse };

// Transform-level tallies (the field work lands in OpCounters).
struct NttStats {
    std::uint64_t transforms = 0;
    std::uint64_t butterflies = 0;

    void merge(const NttStats& o) {
        transforms += o.transforms;
        butterflies += o.butterflies;
    }
};

// Power-of-two evaluation domain over F_r: a primitive n-th root of unity,
// its inverse, 1/n, the coset generator, and precomputed twiddle tables.
struct NttDomain {
    const FieldParams* field = nullptr;
    std::size_t n = 0;
    unsigned log2n = 0;
    FieldElement omega, omega_inv;
    FieldElement n_inv;
    FieldElement coset_g, coset_g_inv;
    FieldElement z_coset;      // g^n - 1: the constant value of x^n - 1 on the coset
    FieldElement z_coset_inv;
    std::vector<FieldElement> twiddles;      // omega^0 .. omega^(n/2 - 1)
    std::vector<FieldElement> inv_twiddles;  // same powers of omega^-1
};

// Derives omega as (2-adic root)^(2^s / n) from the field generator and
// checks primitivity (omega^n == 1, omega^(n/2) == -1). Rejects n that is
// not a power of two or exceeds the field's 2-adicity.
NttDomain build_domain(std::size_t n, const FieldParams& f, OpCounters& ctr);

// a' = a + b*t, b' = a - b*t; exactly one ff_mul, one ff_add, one ff_sub.
void butterfly(FieldElement& a, FieldElement& b, const FieldElement& twiddle, OpCounters& ctr,
               NttStats* stats = nullptr);

// Direct O(n^2) evaluation A_k = sum_j v_j omega^(jk); the transform oracle.
std::vector<FieldElement> dft_naive(std::span<const FieldElement> v, const NttDomain& d,
                                    Direction dir, OpCounters& ctr);

// Iterative radix-2 decimation-in-time with a bit-reversal pre-permutation;
// natural-order output, (n/2)*log2(n) butterflies. Butterflies within a
// stage run in parallel when OpenMP is enabled; output and counter totals
// are identical for any thread count.
std::vector<FieldElement> ntt_radix2(std::span<const FieldElement> v, const NttDomain& d,
                                     Direction dir, OpCounters& ctr, NttStats* stats = nullptr,
                                     int threads = 0);

// Tiled execution combining up to radix_log stages per pass over the data:
// each tile gathers 2^r strided elements, runs r stages locally, scatters
// back. Pass count == ceil(log2(n)/r); output identical to ntt_radix2.
std::vector<FieldElement> ntt_staged(std::span<const FieldElement> v, const NttDomain& d,
                                     Direction dir, unsigned radix_log, OpCounters& ctr,
                                     NttStats* stats = nullptr, int threads = 0);

// Forward: NTT of v scaled elementwise by coset-generator powers; inverse
// undoes both. Makes x^n - 1 a nonzero constant at every evaluation point.
std::vector<FieldElement> coset_ntt(std::span<const FieldElement> v, const NttDomain& d,
                                    Direction dir, OpCounters& ctr, NttStats* stats = nullptr,
                                    int threads = 0);

// Coefficients of p*q via transform, pointwise multiply, inverse transform.
std::vector<FieldElement> poly_mul(std::span<const FieldElement> p,
                                   std::span<const FieldElement> q, const FieldParams& f,
                                   OpCounters& ctr, NttStats* stats = nullptr);

// Horner evaluation of a coefficient vector.
FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x,
                       OpCounters& ctr);

struct ComputeHResult {
    std::vector<FieldElement> h;     // n coefficients; top coefficient zero
    std::uint64_t transforms = 0;    // always 7
};

// Quotient pipeline over evaluation vectors satisfying a_i*b_i == c_i:
// three inverse transforms, three coset transforms, the elementwise
// (a*b - c) / (x^n - 1) division, one inverse coset transform -- seven
// transforms total. The divisibility identity is spot-checked at
// `check_points` random points off the domain; failure throws
// UnsatisfiedInstanceError.
ComputeHResult compute_h(std::span<const FieldElement> a_evals,
                         std::span<const FieldElement> b_evals,
                         std::span<const FieldElement> c_evals, const NttDomain& d,
                         OpCounters& ctr, NttStats* stats = nullptr, unsigned check_points = 8,
                         std::uint64_t check_seed = 0x5eed, int threads = 0);

}  // namespace zkplab
