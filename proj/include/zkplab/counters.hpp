#pragma once

#include <cstdint>

namespace zkplab {

// Tally of field-level operations, limb-level operations, and a bytes-touched
// estimate. A context is owned by one worker at a time; contexts merge into
// each other at phase boundaries (merge is commutative and associative with
// the zero-initialized tally as identity).
//
// Bytes-touched convention: every operand a field operation reads or writes
// contributes limb_count * (word_bits / 8) bytes.
struct OpCounters {
    std::uint64_t ff_add = 0;
    std::uint64_t ff_sub = 0;
    std::uint64_t ff_dbl = 0;
    std::uint64_t ff_mul = 0;
    std::uint64_t ff_sqr = 0;
    std::uint64_t ff_inv = 0;

    std::uint64_t limb_muladd = 0;
    std::uint64_t limb_add = 0;
    std::uint64_t limb_sub = 0;
    std::uint64_t limb_shift = 0;
    std::uint64_t limb_cmp = 0;

    std::uint64_t bytes_touched = 0;

    void merge(const OpCounters& o) {
        ff_add += o.ff_add;
        ff_sub += o.ff_sub;
        ff_dbl += o.ff_dbl;
        ff_mul += o.ff_mul;
        ff_sqr += o.ff_sqr;
        ff_inv += o.ff_inv;
        limb_muladd += o.limb_muladd;
        limb_add += o.limb_add;
        limb_sub += o.limb_sub;
        limb_shift += o.limb_shift;
        limb_cmp += o.limb_cmp;
        bytes_touched += o.bytes_touched;
    }

    OpCounters& operator+=(const OpCounters& o) {
        merge(o);
        return *this;
    }

    friend OpCounters operator+(OpCounters a, const OpCounters& b) {
        a.merge(b);
        return a;
    }

    friend bool operator==(const OpCounters&, const OpCounters&) = default;

    // Field-wise a - b; valid when every count in *this >= the count in base
    // (measuring a delta across a monotone context).
    OpCounters delta_since(const OpCounters& base) const {
        OpCounters d;
        d.ff_add = ff_add - base.ff_add;
        d.ff_sub = ff_sub - base.ff_sub;
        d.ff_dbl = ff_dbl - base.ff_dbl;
        d.ff_mul = ff_mul - base.ff_mul;
        d.ff_sqr = ff_sqr - base.ff_sqr;
        d.ff_inv = ff_inv - base.ff_inv;
        d.limb_muladd = limb_muladd - base.limb_muladd;
        d.limb_add = limb_add - base.limb_add;
        d.limb_sub = limb_sub - base.limb_sub;
        d.limb_shift = limb_shift - base.limb_shift;
        d.limb_cmp = limb_cmp - base.limb_cmp;
        d.bytes_touched = bytes_touched - base.bytes_touched;
        return d;
    }

    std::uint64_t ff_total() const {
        return ff_add + ff_sub + ff_dbl + ff_mul + ff_sqr + ff_inv;
    }

    std::uint64_t limb_total() const {
        return limb_muladd + limb_add + limb_sub + limb_shift + limb_cmp;
    }

    // Multiply-accumulate weighted twice, everything else once.
    std::uint64_t weighted_limb_ops() const {
        return 2 * limb_muladd + limb_add + limb_sub + limb_shift + limb_cmp;
    }
};

}  // namespace zkplab
