#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "zkplab/counters.hpp"

namespace zkplab {

// Widest shape in use: 384 bits as 12 x 32-bit limbs (or 6 x 64-bit).
inline constexpr unsigned kMaxLimbs = 12;

enum class Ordering { Less, Equal, Greater };

// Fixed-width unsigned integer on word-sized limbs.
//
// Limbs are little-endian in memory: value == sum limbs[i] * 2^(W*i).
// Word width W is 32 or 64; each limb is stored in a 64-bit slot and masked
// to W bits, so both widths run behind the same interface.
class FixedUint {
  public:
    FixedUint() = default;

    static FixedUint zero(unsigned word_bits, unsigned limb_count);
    static FixedUint from_u64(std::uint64_t v, unsigned word_bits, unsigned limb_count);
    // Big-endian hex text, exactly 2 * limb_count * (word_bits/8) digits
    // (an optional 0x prefix is accepted).
    static FixedUint from_hex(std::string_view hex, unsigned word_bits, unsigned limb_count);

    std::string to_hex() const;  // big-endian, fixed width, lowercase, no prefix

    unsigned word_bits() const { return word_bits_; }
    unsigned limb_count() const { return limb_count_; }
    unsigned bit_width() const { return word_bits_ * limb_count_; }
    std::uint64_t word_mask() const {
        return word_bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << word_bits_) - 1;
    }

    std::uint64_t limb(unsigned i) const { return limbs_[i]; }
    void set_limb(unsigned i, std::uint64_t v) { limbs_[i] = v & word_mask(); }

    bool is_zero() const;
    bool is_odd() const { return (limbs_[0] & 1) != 0; }
    bool bit(unsigned i) const;            // i < word_bits * limb_count
    unsigned bit_length() const;           // position of highest set bit + 1; 0 for zero
    std::uint64_t low_u64() const;         // value mod 2^64

    // Digit of `bits`-wide window w, i.e. (value >> (w*bits)) & (2^bits - 1).
    // bits <= 31.
    std::uint32_t window_digit(unsigned window, unsigned bits) const;

    bool same_shape(const FixedUint& o) const {
        return word_bits_ == o.word_bits_ && limb_count_ == o.limb_count_;
    }

    friend bool operator==(const FixedUint& a, const FixedUint& b);

  private:
    std::array<std::uint64_t, kMaxLimbs> limbs_{};
    std::uint32_t word_bits_ = 32;
    std::uint32_t limb_count_ = 1;
};

struct AddResult {
    FixedUint sum;
    std::uint64_t carry;  // 0 or 1
};

struct SubResult {
    FixedUint diff;
    std::uint64_t borrow;  // 0 or 1
};

struct ShlResult {
    FixedUint shifted;
    std::uint64_t bit_out;  // 0 or 1
};

struct MulWideResult {
    std::uint64_t hi;
    std::uint64_t lo;
};

// Limb-wise add with carry propagation; counts limb_count limb-adds.
AddResult add_with_carry(const FixedUint& a, const FixedUint& b, OpCounters& ctr);

// Limb-wise subtract with borrow propagation; counts limb_count limb-subs.
SubResult sub_with_borrow(const FixedUint& a, const FixedUint& b, OpCounters& ctr);

// Left shift by one bit; returns the bit shifted out of the top.
ShlResult shl1(const FixedUint& a, OpCounters& ctr);

// Right shift by one bit (divide by two); returns the bit shifted out of the
// bottom. Counted as limb-shift work like shl1.
ShlResult shr1(const FixedUint& a, OpCounters& ctr);

// Lexicographic compare from the most-significant limb; counts one limb_cmp
// per limb examined (early exit on the first difference).
Ordering cmp(const FixedUint& a, const FixedUint& b, OpCounters& ctr);

// hi * 2^W + lo == a * b + c + d. Never overflows 2W bits. One limb_muladd.
MulWideResult mul_wide_limb(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                            unsigned word_bits, OpCounters& ctr);

}  // namespace zkplab
