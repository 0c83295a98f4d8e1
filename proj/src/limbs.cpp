#include "zkplab/limbs.hpp"

#include <algorithm>
#include <cctype>

#include "zkplab/errors.hpp"

namespace zkplab {

namespace {

void check_shape(unsigned word_bits, unsigned limb_count) {
    if (word_bits != 32 && word_bits != 64)
        throw UsageError("word width must be 32 or 64");
    if (limb_count == 0 || limb_count > kMaxLimbs)
        throw UsageError("limb count must be in [1, " + std::to_string(kMaxLimbs) + "]");
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

FixedUint FixedUint::zero(unsigned word_bits, unsigned limb_count) {
    check_shape(word_bits, limb_count);
    FixedUint x;
    x.word_bits_ = word_bits;
    x.limb_count_ = limb_count;
    return x;
}

FixedUint FixedUint::from_u64(std::uint64_t v, unsigned word_bits, unsigned limb_count) {
    FixedUint x = zero(word_bits, limb_count);
    const std::uint64_t mask = x.word_mask();
    for (unsigned i = 0; i < limb_count && v != 0; ++i) {
        x.limbs_[i] = v & mask;
        v = word_bits == 64 ? 0 : v >> word_bits;
    }
    if (v != 0)
        throw RangeError("value does not fit in the requested width");
    return x;
}

FixedUint FixedUint::from_hex(std::string_view hex, unsigned word_bits, unsigned limb_count) {
    FixedUint x = zero(word_bits, limb_count);
    if (hex.substr(0, 2) == "0x" || hex.substr(0, 2) == "0X")
        hex.remove_prefix(2);
    const unsigned nibbles = limb_count * word_bits / 4;
    if (hex.size() != nibbles)
        throw UsageError("hex literal must be exactly " + std::to_string(nibbles) +
                         " digits, got " + std::to_string(hex.size()));
    const unsigned nibbles_per_limb = word_bits / 4;
    for (unsigned i = 0; i < nibbles; ++i) {
        const int d = hex_digit(hex[hex.size() - 1 - i]);
        if (d < 0)
            throw UsageError("invalid hex digit");
        const unsigned limb = i / nibbles_per_limb;
        const unsigned shift = 4 * (i % nibbles_per_limb);
        x.limbs_[limb] |= std::uint64_t(d) << shift;
    }
    return x;
}

std::string FixedUint::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const unsigned nibbles_per_limb = word_bits_ / 4;
    std::string out(limb_count_ * nibbles_per_limb, '0');
    for (unsigned i = 0; i < limb_count_; ++i) {
        const std::uint64_t v = limbs_[i];
        for (unsigned n = 0; n < nibbles_per_limb; ++n) {
            const unsigned pos = out.size() - 1 - (i * nibbles_per_limb + n);
            out[pos] = digits[(v >> (4 * n)) & 0xf];
        }
    }
    return out;
}

bool FixedUint::is_zero() const {
    for (unsigned i = 0; i < limb_count_; ++i)
        if (limbs_[i] != 0) return false;
    return true;
}

bool FixedUint::bit(unsigned i) const {
    const unsigned limb = i / word_bits_;
    if (limb >= limb_count_) return false;
    return (limbs_[limb] >> (i % word_bits_)) & 1;
}

unsigned FixedUint::bit_length() const {
    for (unsigned i = limb_count_; i-- > 0;) {
        if (limbs_[i] != 0)
            return i * word_bits_ + (64 - unsigned(__builtin_clzll(limbs_[i])));
    }
    return 0;
}

std::uint64_t FixedUint::low_u64() const {
    if (word_bits_ == 64) return limbs_[0];
    std::uint64_t v = limbs_[0];
    if (limb_count_ > 1) v |= limbs_[1] << 32;
    return v;
}

std::uint32_t FixedUint::window_digit(unsigned window, unsigned bits) const {
    std::uint32_t digit = 0;
    const unsigned base = window * bits;
    for (unsigned b = 0; b < bits; ++b)
        digit |= std::uint32_t(bit(base + b)) << b;
    return digit;
}

bool operator==(const FixedUint& a, const FixedUint& b) {
    if (!a.same_shape(b)) return false;
    return std::equal(a.limbs_.begin(), a.limbs_.begin() + a.limb_count_, b.limbs_.begin());
}

AddResult add_with_carry(const FixedUint& a, const FixedUint& b, OpCounters& ctr) {
    if (!a.same_shape(b))
        throw UsageError("add_with_carry: mismatched limb shapes");
    const unsigned L = a.limb_count();
    AddResult r{FixedUint::zero(a.word_bits(), L), 0};
    std::uint64_t carry = 0;
    if (a.word_bits() == 32) {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t t = a.limb(i) + b.limb(i) + carry;
            r.sum.set_limb(i, t);
            carry = t >> 32;
        }
    } else {
        for (unsigned i = 0; i < L; ++i) {
            const unsigned __int128 t =
                (unsigned __int128)a.limb(i) + b.limb(i) + carry;
            r.sum.set_limb(i, std::uint64_t(t));
            carry = std::uint64_t(t >> 64);
        }
    }
    r.carry = carry;
    ctr.limb_add += L;
    return r;
}

SubResult sub_with_borrow(const FixedUint& a, const FixedUint& b, OpCounters& ctr) {
    if (!a.same_shape(b))
        throw UsageError("sub_with_borrow: mismatched limb shapes");
    const unsigned L = a.limb_count();
    SubResult r{FixedUint::zero(a.word_bits(), L), 0};
    std::uint64_t borrow = 0;
    if (a.word_bits() == 32) {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t t = a.limb(i) - b.limb(i) - borrow;
            r.diff.set_limb(i, t);
            borrow = (t >> 32) & 1;  // wrapped below zero iff bit 32 set
        }
    } else {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t ai = a.limb(i);
            const std::uint64_t bi = b.limb(i);
            const std::uint64_t t = ai - bi - borrow;
            borrow = (ai < bi) || (borrow && ai == bi);
            r.diff.set_limb(i, t);
        }
    }
    r.borrow = borrow;
    ctr.limb_sub += L;
    return r;
}

ShlResult shl1(const FixedUint& a, OpCounters& ctr) {
    const unsigned L = a.limb_count();
    const unsigned W = a.word_bits();
    ShlResult r{FixedUint::zero(W, L), 0};
    std::uint64_t carry = 0;
    for (unsigned i = 0; i < L; ++i) {
        const std::uint64_t v = a.limb(i);
        r.shifted.set_limb(i, (v << 1) | carry);
        carry = v >> (W - 1);
    }
    r.bit_out = carry;
    ctr.limb_shift += L;
    return r;
}

ShlResult shr1(const FixedUint& a, OpCounters& ctr) {
    const unsigned L = a.limb_count();
    const unsigned W = a.word_bits();
    ShlResult r{FixedUint::zero(W, L), a.limb(0) & 1};
    std::uint64_t carry = 0;
    for (unsigned i = L; i-- > 0;) {
        const std::uint64_t v = a.limb(i);
        r.shifted.set_limb(i, (v >> 1) | (carry << (W - 1)));
        carry = v & 1;
    }
    ctr.limb_shift += L;
    return r;
}

Ordering cmp(const FixedUint& a, const FixedUint& b, OpCounters& ctr) {
    if (!a.same_shape(b))
        throw UsageError("cmp: mismatched limb shapes");
    for (unsigned i = a.limb_count(); i-- > 0;) {
        ++ctr.limb_cmp;
        if (a.limb(i) != b.limb(i))
            return a.limb(i) < b.limb(i) ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

MulWideResult mul_wide_limb(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                            unsigned word_bits, OpCounters& ctr) {
    ++ctr.limb_muladd;
    if (word_bits == 32) {
        const std::uint64_t t = a * b + c + d;
        return {t >> 32, t & 0xffffffffull};
    }
    const unsigned __int128 t = (unsigned __int128)a * b + c + d;
    return {std::uint64_t(t >> 64), std::uint64_t(t)};
}

}  // namespace zkplab
