#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles/bigmod.hpp"
#include "zkplab/errors.hpp"
#include "zkplab/limbs.hpp"

using namespace zkplab;
using namespace testoracle;

namespace {

FixedUint rand_uint(unsigned w, unsigned L, std::mt19937_64& rng) {
    FixedUint x = FixedUint::zero(w, L);
    for (unsigned i = 0; i < L; ++i) x.set_limb(i, rng());
    return x;
}

Big to_big(const FixedUint& x) {
    // Hex is the interop format; width in 32-bit words.
    return big_from_hex(x.to_hex(), x.limb_count() * x.word_bits() / 32);
}

}  // namespace

TEST_CASE("add_with_carry examples") {
    OpCounters c;
    FixedUint zero = FixedUint::zero(32, 2);
    FixedUint x = FixedUint::from_u64(0x123456789abcdefull, 32, 2);
    auto r = add_with_carry(zero, x, c);
    CHECK(r.sum == x);
    CHECK(r.carry == 0);

    // (2^32 - 1) + 1 = 2^32: limbs [0, 1], no carry out of two limbs
    FixedUint a = FixedUint::from_u64(0xffffffffull, 32, 2);
    FixedUint one = FixedUint::from_u64(1, 32, 2);
    r = add_with_carry(a, one, c);
    CHECK(r.sum.limb(0) == 0);
    CHECK(r.sum.limb(1) == 1);
    CHECK(r.carry == 0);

    // (2^64 - 1) + 1 wraps with carry
    FixedUint maxv = FixedUint::from_hex("ffffffffffffffff", 32, 2);
    r = add_with_carry(maxv, one, c);
    CHECK(r.sum.is_zero());
    CHECK(r.carry == 1);
}

TEST_CASE("sub_with_borrow examples") {
    OpCounters c;
    FixedUint x = FixedUint::from_u64(0xdeadbeefull, 32, 2);
    FixedUint zero = FixedUint::zero(32, 2);
    auto r = sub_with_borrow(x, zero, c);
    CHECK(r.diff == x);
    CHECK(r.borrow == 0);

    r = sub_with_borrow(x, x, c);
    CHECK(r.diff.is_zero());
    CHECK(r.borrow == 0);

    FixedUint one = FixedUint::from_u64(1, 32, 2);
    r = sub_with_borrow(zero, one, c);
    CHECK(r.diff == FixedUint::from_hex("ffffffffffffffff", 32, 2));
    CHECK(r.borrow == 1);
}

TEST_CASE("shl1 examples") {
    OpCounters c;
    auto r = shl1(FixedUint::zero(32, 2), c);
    CHECK(r.shifted.is_zero());
    CHECK(r.bit_out == 0);

    r = shl1(FixedUint::from_u64(0x80000000ull, 32, 1), c);
    CHECK(r.shifted.is_zero());
    CHECK(r.bit_out == 1);

    r = shl1(FixedUint::from_u64(3, 32, 2), c);
    CHECK(r.shifted == FixedUint::from_u64(6, 32, 2));
    CHECK(r.bit_out == 0);
}

TEST_CASE("cmp examples") {
    OpCounters c;
    FixedUint x = FixedUint::from_u64(77, 32, 2);
    CHECK(cmp(x, x, c) == Ordering::Equal);
    CHECK(cmp(FixedUint::zero(32, 2), FixedUint::from_u64(1, 32, 2), c) == Ordering::Less);
    CHECK(cmp(FixedUint::from_hex("0000000100000000", 32, 2),
              FixedUint::from_u64(0xffffffffull, 32, 2), c) == Ordering::Greater);
}

TEST_CASE("mul_wide_limb examples") {
    OpCounters c;
    auto r = mul_wide_limb(0x12345678, 0, 0, 0, 32, c);
    CHECK(r.hi == 0);
    CHECK(r.lo == 0);

    r = mul_wide_limb(1, 0xabcdef01, 0, 0, 32, c);
    CHECK(r.hi == 0);
    CHECK(r.lo == 0xabcdef01);

    // all-max never overflows 2W bits
    const std::uint64_t m = 0xffffffffull;
    r = mul_wide_limb(m, m, m, m, 32, c);
    CHECK(r.hi == m);
    CHECK(r.lo == m);

    const std::uint64_t m64 = ~std::uint64_t{0};
    r = mul_wide_limb(m64, m64, m64, m64, 64, c);
    CHECK(r.hi == m64);
    CHECK(r.lo == m64);
}

TEST_CASE("random ops match the word-array oracle") {
    std::mt19937_64 rng(2024);
    OpCounters c;
    for (unsigned L : {1u, 2u, 8u, 12u}) {
        const std::size_t words = L;  // W=32
        Big lim = big_zero(words);    // 2^(32L) implied by fixed width
        for (int round = 0; round < 200; ++round) {
            FixedUint a = rand_uint(32, L, rng);
            FixedUint b = rand_uint(32, L, rng);
            Big ba = to_big(a), bb = to_big(b);

            auto add = add_with_carry(a, b, c);
            Big sum = ba;
            const std::uint32_t carry = big_add_inplace(sum, bb);
            CHECK(to_big(add.sum).w == sum.w);
            CHECK(add.carry == carry);

            auto sub = sub_with_borrow(a, b, c);
            Big diff = ba;
            const std::uint32_t borrow = big_sub_inplace(diff, bb);
            CHECK(to_big(sub.diff).w == diff.w);
            CHECK(sub.borrow == borrow);

            auto sh = shl1(a, c);
            Big shifted = ba;
            const std::uint32_t out = big_shl1_inplace(shifted);
            CHECK(to_big(sh.shifted).w == shifted.w);
            CHECK(sh.bit_out == out);

            const int ord = big_cmp(ba, bb);
            CHECK(cmp(a, b, c) == (ord < 0   ? Ordering::Less
                                   : ord > 0 ? Ordering::Greater
                                             : Ordering::Equal));
        }
        (void)lim;
    }
}

TEST_CASE("add then sub round trip") {
    std::mt19937_64 rng(7);
    OpCounters c;
    for (unsigned L : {1u, 2u, 8u, 12u}) {
        for (unsigned w : {32u, 64u}) {
            if (w == 64 && L > 6) continue;
            for (int round = 0; round < 100; ++round) {
                FixedUint a = rand_uint(w, L, rng);
                FixedUint b = rand_uint(w, L, rng);
                auto add = add_with_carry(a, b, c);
                auto back = sub_with_borrow(add.sum, b, c);
                CHECK(back.diff == a);
                CHECK(back.borrow == add.carry);
            }
        }
    }
}

TEST_CASE("counters are exact per call") {
    OpCounters c;
    FixedUint a = FixedUint::from_u64(5, 32, 8);
    FixedUint b = FixedUint::from_u64(9, 32, 8);
    add_with_carry(a, b, c);
    CHECK(c.limb_add == 8);
    sub_with_borrow(a, b, c);
    CHECK(c.limb_sub == 8);
    shl1(a, c);
    CHECK(c.limb_shift == 8);
    mul_wide_limb(1, 2, 3, 4, 32, c);
    CHECK(c.limb_muladd == 1);
    cmp(a, a, c);
    CHECK(c.limb_cmp == 8);  // equal values examine every limb
    c = OpCounters{};
    cmp(FixedUint::from_hex("ff00000000000001", 32, 2), FixedUint::from_u64(1, 32, 2), c);
    CHECK(c.limb_cmp == 1);  // top limbs differ immediately
}

TEST_CASE("counter merge is commutative with zero identity") {
    OpCounters a, b;
    a.limb_add = 3;
    a.ff_mul = 2;
    b.limb_add = 5;
    b.bytes_touched = 96;
    CHECK(a + b == b + a);
    CHECK(a + OpCounters{} == a);
}

TEST_CASE("hex parsing enforces the exact width") {
    FixedUint x = FixedUint::from_hex("00000000deadbeef", 32, 2);
    CHECK(x.limb(0) == 0xdeadbeefull);
    CHECK(x.to_hex() == "00000000deadbeef");
    CHECK(FixedUint::from_hex("0x00000000deadbeef", 32, 2) == x);
    CHECK_THROWS_AS(FixedUint::from_hex("deadbeef", 32, 2), UsageError);  // too short
    CHECK_THROWS_AS(FixedUint::from_hex("00000000deadbeeg", 32, 2), UsageError);
    OpCounters c;
    CHECK_THROWS_AS(add_with_carry(FixedUint::zero(32, 2), FixedUint::zero(32, 3), c), UsageError);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(FixedUint::zero(16, 2), UsageError);
    CHECK_THROWS_AS(FixedUint::zero(32, 0), UsageError);
    CHECK_THROWS_AS(FixedUint::zero(32, kMaxLimbs + 1), UsageError);
    CHECK_THROWS_AS(FixedUint::from_u64(std::uint64_t{1} << 40, 32, 1), RangeError);
}

TEST_CASE("window digits recombine") {
    std::mt19937_64 rng(11);
    OpCounters c;
    FixedUint k = rand_uint(32, 8, rng);
    const unsigned bits = 5;
    const unsigned windows = (8 * 32 + bits - 1) / bits;
    // sum digit_j * 2^(j*bits) == k, checked with the word-array oracle
    Big acc = big_zero(8);
    Big base = big_from_u64(1, 8);
    Big p_unused = big_zero(8);
    (void)p_unused;
    for (unsigned j = 0; j < windows; ++j) {
        Big term = base;
        Big digit = big_from_u64(k.window_digit(j, bits), 8);
        // multiply term by digit via repeated addition (digit < 32)
        Big scaled = big_zero(8);
        for (std::uint32_t i = 0; i < digit.w[0]; ++i) big_add_inplace(scaled, term);
        big_add_inplace(acc, scaled);
        for (unsigned s = 0; s < bits; ++s) big_shl1_inplace(base);
    }
    CHECK(acc.w == to_big(k).w);
    (void)c;
}
