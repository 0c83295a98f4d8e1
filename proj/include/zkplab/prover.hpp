#pragma once

#include <cstdint>
#include <vector>

#include "zkplab/msm.hpp"
#include "zkplab/ntt.hpp"

namespace zkplab {

// Evaluation vectors over the domain plus the witness assignment. The
// instance is satisfied when a_i * b_i == c_i at every domain point.
struct ProverInputs {
    std::vector<FieldElement> a_evals, b_evals, c_evals;  // size n, in F_r
    std::vector<FixedUint> witness;                       // size m, scalars < r
    std::size_t public_len = 0;                           // public-input prefix of witness
};

// G1 vectors whose discrete logs are retained in the trapdoor: independent
// per-slot secrets for the witness combination, powers of tau for the h
// coefficients.
struct MockProvingKey {
    const CurveParams* curve = nullptr;
    std::size_t domain_n = 0;
    CurvePoint generator;                  // affine
    std::vector<CurvePoint> witness_points;  // m points, affine
    std::vector<CurvePoint> h_points;        // n-1 points, affine
};

// Setup secrets, kept only for desk-scale verification. Never serialized.
struct Trapdoor {
    FixedUint tau;
    std::vector<FixedUint> witness_secrets;  // m scalars
    std::vector<FixedUint> h_secrets;        // n-1 scalars (powers of tau)
};

// Per-phase record of one proof run.
struct ProofTranscript {
    double ntt_seconds = 0.0;
    double msm_seconds = 0.0;
    std::uint64_t transforms = 0;  // always 7
    OpCounters ntt_counters;
    OpCounters msm_counters;
    OpCounters glue_counters;  // everything not attributed to a kernel phase
    MsmStats msm_stats;
    NttStats ntt_stats;
};

struct Proof {
    CurvePoint a_point;  // witness combination
    CurvePoint c_point;  // h-polynomial combination
    ProofTranscript transcript;
};

// Deterministic mock setup: n a power of two (domain size), m >= 1 witness
// slots. Every key point is a known scalar multiple of the curve generator.
std::pair<MockProvingKey, Trapdoor> mock_setup(std::size_t n, std::size_t m, std::uint64_t seed,
                                               const CurveParams& c, OpCounters& ctr);

// Random satisfied instance: a, b random on the domain, c = a .* b, witness
// random.
ProverInputs random_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                             const FieldParams& fr, OpCounters& ctr);

// h = compute_h(a, b, c); A = msm(witness_points, witness);
// C = msm(h_points, coefficients of h). Counters are attributed per phase.
Proof prove(const MockProvingKey& pk, const ProverInputs& inputs, const NttDomain& domain,
            const MsmConfig& cfg, OpCounters& ctr);

// Recomputes the expected proof points directly in F_r from the retained
// secrets: A == (sum u_i z_i) G and C == (sum tau^j h_j) G.
bool check_with_trapdoor(const Proof& proof, const Trapdoor& trapdoor,
                         const MockProvingKey& pk, const ProverInputs& inputs,
                         const NttDomain& domain, OpCounters& ctr);

}  // namespace zkplab
