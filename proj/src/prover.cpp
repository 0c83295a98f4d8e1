#include "zkplab/prover.hpp"

#include <chrono>

#include "zkplab/errors.hpp"

namespace zkplab {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FixedUint random_nonzero_below(const FixedUint& p, std::mt19937_64& rng) {
    for (;;) {
        FixedUint x = random_uint_below(p, rng);
        if (!x.is_zero()) return x;
    }
}

}  // namespace

std::pair<MockProvingKey, Trapdoor> mock_setup(std::size_t n, std::size_t m, std::uint64_t seed,
                                               const CurveParams& c, OpCounters& ctr) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw UsageError("mock_setup: domain size must be a power of two >= 2");
    if (m < 1)
        throw UsageError("mock_setup: need at least one witness slot");

    std::mt19937_64 rng(seed);
    const FieldParams& fr = *c.fr;

    MockProvingKey pk;
    Trapdoor td;
    pk.curve = &c;
    pk.domain_n = n;
    pk.generator = CurvePoint::affine(c.gen_x, c.gen_y);

    td.tau = random_nonzero_below(fr.modulus, rng);
    td.witness_secrets.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        td.witness_secrets.push_back(random_nonzero_below(fr.modulus, rng));

    // h-slot secrets are tau^0 .. tau^(n-2), computed in F_r.
    FieldElement tau = FieldElement::from_uint(td.tau, fr, ctr);
    FieldElement tpow = FieldElement::one(fr);
    td.h_secrets.reserve(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        td.h_secrets.push_back(tpow.to_uint(ctr));
        tpow = ff_mul(tpow, tau, ctr);
    }

    CurvePoint base = convert(pk.generator, CoordForm::Jacobian, c, ctr);
    auto make_points = [&](const std::vector<FixedUint>& secrets) {
        std::vector<CurvePoint> pts;
        pts.reserve(secrets.size());
        for (const FixedUint& s : secrets) pts.push_back(scalar_mul(base, s, c, ctr));
        return batch_to_affine(pts, c, ctr);
    };
    pk.witness_points = make_points(td.witness_secrets);
    pk.h_points = make_points(td.h_secrets);
    return {std::move(pk), std::move(td)};
}

ProverInputs random_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                             const FieldParams& fr, OpCounters& ctr) {
    std::mt19937_64 rng(seed);
    ProverInputs in;
    in.a_evals.reserve(n);
    in.b_evals.reserve(n);
    in.c_evals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        in.a_evals.push_back(random_element(fr, rng, ctr));
        in.b_evals.push_back(random_element(fr, rng, ctr));
        in.c_evals.push_back(ff_mul(in.a_evals[i], in.b_evals[i], ctr));
    }
    in.witness.reserve(m);
    for (std::size_t i = 0; i < m; ++i) in.witness.push_back(random_uint_below(fr.modulus, rng));
    in.public_len = m > 0 ? 1 : 0;
    return in;
}

Proof prove(const MockProvingKey& pk, const ProverInputs& inputs, const NttDomain& domain,
            const MsmConfig& cfg, OpCounters& ctr) {
    if (domain.n != pk.domain_n)
        throw UsageError("prove: domain does not match the proving key");
    if (inputs.a_evals.size() != domain.n || inputs.b_evals.size() != domain.n ||
        inputs.c_evals.size() != domain.n)
        throw UsageError("prove: evaluation vectors must match the domain size");
    if (inputs.witness.size() != pk.witness_points.size())
        throw UsageError("prove: witness length does not match the proving key");

    Proof proof;
    ProofTranscript& tr = proof.transcript;

    auto t0 = std::chrono::steady_clock::now();
    ComputeHResult hres = compute_h(inputs.a_evals, inputs.b_evals, inputs.c_evals, domain,
                                    tr.ntt_counters, &tr.ntt_stats, 8, 0x5eed, cfg.threads);
    tr.ntt_seconds = seconds_since(t0);
    tr.transforms = hres.transforms;

    // Coefficient-to-scalar conversions are glue, not kernel work.
    std::vector<FixedUint> h_scalars;
    h_scalars.reserve(domain.n - 1);
    for (std::size_t j = 0; j + 1 < domain.n; ++j)
        h_scalars.push_back(hres.h[j].to_uint(tr.glue_counters));

    t0 = std::chrono::steady_clock::now();
    proof.a_point = msm(pk.witness_points, inputs.witness, cfg, *pk.curve, tr.msm_counters,
                        &tr.msm_stats);
    proof.c_point = msm(pk.h_points, h_scalars, cfg, *pk.curve, tr.msm_counters, &tr.msm_stats);
    tr.msm_seconds = seconds_since(t0);

    ctr.merge(tr.ntt_counters);
    ctr.merge(tr.msm_counters);
    ctr.merge(tr.glue_counters);
    return proof;
}

bool check_with_trapdoor(const Proof& proof, const Trapdoor& trapdoor, const MockProvingKey& pk,
                         const ProverInputs& inputs, const NttDomain& domain, OpCounters& ctr) {
    const FieldParams& fr = *pk.curve->fr;
    const CurveParams& c = *pk.curve;
    try {
        ComputeHResult hres =
            compute_h(inputs.a_evals, inputs.b_evals, inputs.c_evals, domain, ctr);

        FieldElement a_acc = FieldElement::zero(fr);
        for (std::size_t i = 0; i < inputs.witness.size(); ++i) {
            FieldElement u = FieldElement::from_uint(trapdoor.witness_secrets[i], fr, ctr);
            FieldElement z = FieldElement::from_uint(inputs.witness[i], fr, ctr);
            a_acc = ff_add(a_acc, ff_mul(u, z, ctr), ctr);
        }
        FieldElement c_acc = FieldElement::zero(fr);
        for (std::size_t j = 0; j + 1 < domain.n; ++j) {
            FieldElement v = FieldElement::from_uint(trapdoor.h_secrets[j], fr, ctr);
            c_acc = ff_add(c_acc, ff_mul(v, hres.h[j], ctr), ctr);
        }

        CurvePoint g = convert(pk.generator, CoordForm::Jacobian, c, ctr);
        CurvePoint a_exp = scalar_mul(g, a_acc.to_uint(ctr), c, ctr);
        CurvePoint c_exp = scalar_mul(g, c_acc.to_uint(ctr), c, ctr);
        return points_equal(proof.a_point, a_exp, c, ctr) &&
               points_equal(proof.c_point, c_exp, c, ctr);
    } catch (const UnsatisfiedInstanceError&) {
        return false;
    }
}

}  // namespace zkplab
