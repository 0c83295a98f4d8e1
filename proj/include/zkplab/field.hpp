#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "zkplab/counters.hpp"
#include "zkplab/limbs.hpp"

namespace zkplab {

// Description of a prime field F_p together with the Montgomery constants
// for the configured word width. All constants are computed from the modulus
// at construction time and validated; nothing is trusted.
struct FieldParams {
    std::string name;
    FixedUint modulus;       // p, odd prime
    unsigned word_bits = 32;
    unsigned limb_count = 1;
    unsigned bit_length = 0;          // of p
    FixedUint r_mod_p;                // R mod p, R = 2^(W*L); Montgomery form of 1
    FixedUint r2_mod_p;               // R^2 mod p
    std::uint64_t p_inv_neg = 0;      // -p^{-1} mod 2^W
    unsigned two_adicity = 0;         // s with 2^s || p-1
    FixedUint t_odd;                  // (p-1) / 2^two_adicity
    FixedUint generator;              // multiplicative generator, plain form

    // Computes R, R^2, p_inv_neg, and the 2-adic decomposition, then checks:
    // p odd, p probabilistically prime, p * p_inv_neg == -1 mod 2^W, and the
    // generator a quadratic nonresidue (so its 2^s-th power ladder spans the
    // full 2-adic subgroup).
    static FieldParams create(const FixedUint& modulus, const FixedUint& generator,
                              std::string name);

    bool same_field(const FieldParams& o) const;
    unsigned element_bytes() const { return limb_count * word_bits / 8; }
};

// An element of F_p held in Montgomery form (repr == value * R mod p).
// Canonical: repr < p after every operation.
class FieldElement {
  public:
    FieldElement() = default;  // detached; any arithmetic on it throws

    static FieldElement zero(const FieldParams& f);
    static FieldElement one(const FieldParams& f);
    // Montgomery conversion: one ff_mul by R^2. Throws RangeError if x >= p.
    static FieldElement from_uint(const FixedUint& x, const FieldParams& f, OpCounters& ctr);
    static FieldElement from_u64(std::uint64_t x, const FieldParams& f, OpCounters& ctr);
    // Adopts `repr` as-is; caller guarantees repr < p and Montgomery form.
    static FieldElement from_repr(const FixedUint& repr, const FieldParams& f);

    FixedUint to_uint(OpCounters& ctr) const;  // Montgomery reduction, one ff_mul
    std::string to_hex(OpCounters& ctr) const { return to_uint(ctr).to_hex(); }

    const FixedUint& repr() const { return repr_; }
    const FieldParams& params() const { return *params_; }
    bool attached() const { return params_ != nullptr; }
    bool is_zero() const { return repr_.is_zero(); }
    bool is_one(const OpCounters* = nullptr) const;

    // Raw representation equality; canonical form makes this value equality.
    friend bool operator==(const FieldElement& a, const FieldElement& b);

  private:
    FixedUint repr_;
    const FieldParams* params_ = nullptr;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b, OpCounters& ctr);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b, OpCounters& ctr);
FieldElement ff_dbl(const FieldElement& a, OpCounters& ctr);
FieldElement ff_neg(const FieldElement& a, OpCounters& ctr);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b, OpCounters& ctr);
FieldElement ff_sqr(const FieldElement& a, OpCounters& ctr);

// Binary extended-Euclidean inversion. Counts one ff_inv (its internal limb
// work lands in the limb counters; no ff_mul is charged, so batched-inversion
// counter contracts stay exact). Throws NonInvertibleError on zero.
FieldElement ff_inv(const FieldElement& a, OpCounters& ctr);

// Square-and-multiply; 0^0 == 1. Internal squarings/multiplications are
// charged as ff_sqr/ff_mul.
FieldElement ff_pow(const FieldElement& a, const FixedUint& e, OpCounters& ctr);

// Montgomery trick: one ff_inv plus 3(N-1) ff_mul for N nonzero inputs.
// Throws NonInvertibleError naming the first zero index.
std::vector<FieldElement> batch_inverse(std::span<const FieldElement> v, OpCounters& ctr);

// Uniform element via rejection sampling; conversion charges one ff_mul.
FieldElement random_element(const FieldParams& f, std::mt19937_64& rng, OpCounters& ctr);

// Uniform nonzero scalar as a plain integer < p (no Montgomery conversion).
FixedUint random_uint_below(const FixedUint& p, std::mt19937_64& rng);

}  // namespace zkplab
