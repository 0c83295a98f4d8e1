#include "zkplab/field.hpp"

#include <cassert>

#include "zkplab/errors.hpp"

namespace zkplab {

namespace {

// ---------------------------------------------------------------------------
// Raw kernels on limb arrays. These carry out the exact schedules whose
// counter deltas the public operations advertise; the deltas are added in
// aggregate by the callers below.
// ---------------------------------------------------------------------------

std::uint64_t raw_add(const FieldParams& f, const std::uint64_t* a, const std::uint64_t* b,
                      std::uint64_t* out) {
    const unsigned L = f.limb_count;
    std::uint64_t carry = 0;
    if (f.word_bits == 32) {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t t = a[i] + b[i] + carry;
            out[i] = t & 0xffffffffull;
            carry = t >> 32;
        }
    } else {
        for (unsigned i = 0; i < L; ++i) {
            const unsigned __int128 t = (unsigned __int128)a[i] + b[i] + carry;
            out[i] = std::uint64_t(t);
            carry = std::uint64_t(t >> 64);
        }
    }
    return carry;
}

std::uint64_t raw_sub(const FieldParams& f, const std::uint64_t* a, const std::uint64_t* b,
                      std::uint64_t* out) {
    const unsigned L = f.limb_count;
    std::uint64_t borrow = 0;
    if (f.word_bits == 32) {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t t = a[i] - b[i] - borrow;
            out[i] = t & 0xffffffffull;
            borrow = (t >> 32) & 1;
        }
    } else {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t ai = a[i];
            const std::uint64_t bi = b[i];
            out[i] = ai - bi - borrow;
            borrow = (ai < bi) || (borrow && ai == bi);
        }
    }
    return borrow;
}

// Compare against the modulus from the most-significant limb; returns number
// of limbs examined via *examined and <0 / 0 / >0 ordering.
int raw_cmp_p(const FieldParams& f, const std::uint64_t* a, unsigned* examined) {
    unsigned n = 0;
    int r = 0;
    for (unsigned i = f.limb_count; i-- > 0;) {
        ++n;
        const std::uint64_t pi = f.modulus.limb(i);
        if (a[i] != pi) {
            r = a[i] < pi ? -1 : 1;
            break;
        }
    }
    *examined = n;
    return r;
}

void load(const FixedUint& x, std::uint64_t* out) {
    for (unsigned i = 0; i < x.limb_count(); ++i) out[i] = x.limb(i);
}

FixedUint store(const FieldParams& f, const std::uint64_t* a) {
    FixedUint x = FixedUint::zero(f.word_bits, f.limb_count);
    for (unsigned i = 0; i < f.limb_count; ++i) x.set_limb(i, a[i]);
    return x;
}

// Conditional subtraction of p given the carry/overflow bit of the raw
// result. Counts the comparison limbs and, when taken, L limb-subs.
void reduce_once(const FieldParams& f, std::uint64_t* t, std::uint64_t overflow, OpCounters& ctr) {
    bool take = overflow != 0;
    if (!take) {
        unsigned examined = 0;
        take = raw_cmp_p(f, t, &examined) >= 0;
        ctr.limb_cmp += examined;
    }
    if (take) {
        std::uint64_t p[kMaxLimbs];
        load(f.modulus, p);
        raw_sub(f, t, p, t);
        ctr.limb_sub += f.limb_count;
    }
}

// Montgomery CIOS product: out = a * b * R^{-1} mod p, out < p.
// Schedule: per outer limb, L multiply-accumulates for the partial product,
// one for the m digit, L for the reduction row -- L*(2L+1) == 2L^2+L total --
// plus two carry-bookkeeping adds.
void mont_mul_raw(const FieldParams& f, const std::uint64_t* a, const std::uint64_t* b,
                  std::uint64_t* out, OpCounters& ctr) {
    const unsigned L = f.limb_count;
    std::uint64_t t[kMaxLimbs + 2] = {0};
    std::uint64_t p[kMaxLimbs];
    load(f.modulus, p);

    if (f.word_bits == 32) {
        constexpr std::uint64_t mask = 0xffffffffull;
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t bi = b[i];
            std::uint64_t carry = 0;
            for (unsigned j = 0; j < L; ++j) {
                const std::uint64_t v = a[j] * bi + t[j] + carry;
                t[j] = v & mask;
                carry = v >> 32;
            }
            std::uint64_t s = t[L] + carry;
            t[L] = s & mask;
            t[L + 1] += s >> 32;

            const std::uint64_t m = (t[0] * f.p_inv_neg) & mask;
            std::uint64_t v = m * p[0] + t[0];
            carry = v >> 32;
            for (unsigned j = 1; j < L; ++j) {
                v = m * p[j] + t[j] + carry;
                t[j - 1] = v & mask;
                carry = v >> 32;
            }
            s = t[L] + carry;
            t[L - 1] = s & mask;
            t[L] = t[L + 1] + (s >> 32);
            t[L + 1] = 0;
        }
    } else {
        for (unsigned i = 0; i < L; ++i) {
            const std::uint64_t bi = b[i];
            std::uint64_t carry = 0;
            for (unsigned j = 0; j < L; ++j) {
                const unsigned __int128 v = (unsigned __int128)a[j] * bi + t[j] + carry;
                t[j] = std::uint64_t(v);
                carry = std::uint64_t(v >> 64);
            }
            unsigned __int128 s = (unsigned __int128)t[L] + carry;
            t[L] = std::uint64_t(s);
            t[L + 1] += std::uint64_t(s >> 64);

            const std::uint64_t m = t[0] * f.p_inv_neg;
            unsigned __int128 v = (unsigned __int128)m * p[0] + t[0];
            carry = std::uint64_t(v >> 64);
            for (unsigned j = 1; j < L; ++j) {
                v = (unsigned __int128)m * p[j] + t[j] + carry;
                t[j - 1] = std::uint64_t(v);
                carry = std::uint64_t(v >> 64);
            }
            s = (unsigned __int128)t[L] + carry;
            t[L - 1] = std::uint64_t(s);
            t[L] = t[L + 1] + std::uint64_t(s >> 64);
            t[L + 1] = 0;
        }
    }
    ctr.limb_muladd += std::uint64_t(L) * (2 * L + 1);
    ctr.limb_add += 2 * std::uint64_t(L);
    reduce_once(f, t, t[L], ctr);
    for (unsigned i = 0; i < L; ++i) out[i] = t[i];
}

// Montgomery closure: every arithmetic result must stay below p. Active in
// debug builds only.
void debug_canonical(const FieldParams& f, const std::uint64_t* t) {
#ifndef NDEBUG
    unsigned examined = 0;
    assert(raw_cmp_p(f, t, &examined) < 0);
#else
    (void)f;
    (void)t;
#endif
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.attached() || !b.attached())
        throw UsageError("operation on a detached field element");
    if (!a.params().same_field(b.params()))
        throw UsageError("field elements belong to different fields");
}

std::uint64_t bytes_per_operand(const FieldParams& f) { return f.element_bytes(); }

}  // namespace

// ---------------------------------------------------------------------------
// FieldParams
// ---------------------------------------------------------------------------

bool FieldParams::same_field(const FieldParams& o) const {
    if (this == &o) return true;
    return word_bits == o.word_bits && limb_count == o.limb_count && modulus == o.modulus;
}

namespace {

std::uint64_t word_inverse_neg(std::uint64_t p0, unsigned word_bits) {
    // Newton iteration doubles correct low bits each round; p odd.
    std::uint64_t x = 1;
    for (int i = 0; i < 6; ++i) x *= 2 - p0 * x;
    std::uint64_t neg = ~x + 1;
    if (word_bits == 32) neg &= 0xffffffffull;
    return neg;
}

// x (< p) doubled mod p, carry-aware; used only at parameter-build time.
void double_mod(const FieldParams& f, FixedUint& x, OpCounters& scratch) {
    auto sh = shl1(x, scratch);
    std::uint64_t t[kMaxLimbs];
    load(sh.shifted, t);
    reduce_once(f, t, sh.bit_out, scratch);
    x = store(f, t);
}

// Miller-Rabin with the small fixed base set; enough certainty for presets
// and for rejecting typoed moduli.
bool probably_prime(const FieldParams& f) {
    OpCounters scratch;
    static const std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    const FixedUint& p = f.modulus;
    if (p.bit_length() <= 6) {
        const std::uint64_t v = p.low_u64();
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }
    // p - 1 == t_odd * 2^two_adicity, already decomposed by create().
    FieldElement minus_one =
        FieldElement::from_repr(sub_with_borrow(p, f.r_mod_p, scratch).diff, f);
    for (std::uint64_t b : bases) {
        FieldElement x = ff_pow(FieldElement::from_u64(b, f, scratch), f.t_odd, scratch);
        if (x.is_one() || x == minus_one) continue;
        bool witness = true;
        for (unsigned i = 1; i < f.two_adicity; ++i) {
            x = ff_sqr(x, scratch);
            if (x == minus_one) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

FieldParams FieldParams::create(const FixedUint& modulus, const FixedUint& generator,
                                std::string name) {
    FieldParams f;
    f.name = std::move(name);
    f.modulus = modulus;
    f.word_bits = modulus.word_bits();
    f.limb_count = modulus.limb_count();
    f.bit_length = modulus.bit_length();
    if (!modulus.is_odd())
        throw UsageError("field modulus must be odd");

    f.p_inv_neg = word_inverse_neg(modulus.limb(0), f.word_bits);
    const std::uint64_t mask =
        f.word_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.word_bits) - 1;
    if (((modulus.limb(0) * f.p_inv_neg + 1) & mask) != 0)
        throw UsageError("montgomery word inverse failed; modulus not odd?");

    // R and R^2 by repeated modular doubling of 1: W*L doublings reach
    // 2^(W*L) mod p, another W*L reach R^2 mod p.
    OpCounters scratch;
    FixedUint x = FixedUint::from_u64(1, f.word_bits, f.limb_count);
    const unsigned total_bits = f.word_bits * f.limb_count;
    for (unsigned i = 0; i < total_bits; ++i) double_mod(f, x, scratch);
    f.r_mod_p = x;
    for (unsigned i = 0; i < total_bits; ++i) double_mod(f, x, scratch);
    f.r2_mod_p = x;

    // 2-adic decomposition of p-1.
    FixedUint pm1 = modulus;
    pm1.set_limb(0, pm1.limb(0) - 1);  // p odd, no borrow
    unsigned s = 0;
    while (!pm1.is_odd()) {
        pm1 = shr1(pm1, scratch).shifted;
        ++s;
    }
    f.two_adicity = s;
    f.t_odd = pm1;

    if (!probably_prime(f))
        throw UsageError("field modulus failed the primality test: " + f.name);

    // Generator must be a nonzero nonresidue: g^((p-1)/2) == -1.
    if (generator.is_zero() || !generator.same_shape(modulus))
        throw UsageError("bad field generator shape");
    f.generator = generator;
    {
        FixedUint half = sub_with_borrow(modulus, FixedUint::from_u64(1, f.word_bits, f.limb_count),
                                         scratch)
                             .diff;
        half = shr1(half, scratch).shifted;
        FieldElement g = FieldElement::from_uint(generator, f, scratch);
        FieldElement gp = ff_pow(g, half, scratch);
        FieldElement minus_one =
            FieldElement::from_repr(sub_with_borrow(modulus, f.r_mod_p, scratch).diff, f);
        if (!(gp == minus_one))
            throw UsageError("field generator is not a quadratic nonresidue: " + f.name);
    }
    return f;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement FieldElement::zero(const FieldParams& f) {
    return from_repr(FixedUint::zero(f.word_bits, f.limb_count), f);
}

FieldElement FieldElement::one(const FieldParams& f) { return from_repr(f.r_mod_p, f); }

FieldElement FieldElement::from_repr(const FixedUint& repr, const FieldParams& f) {
    FieldElement e;
    e.repr_ = repr;
    e.params_ = &f;
    return e;
}

FieldElement FieldElement::from_uint(const FixedUint& x, const FieldParams& f, OpCounters& ctr) {
    if (!x.same_shape(f.modulus))
        throw UsageError("from_uint: value shape does not match the field");
    OpCounters probe;
    if (cmp(x, f.modulus, probe) != Ordering::Less)
        throw RangeError("from_uint: value is not reduced mod p");
    return ff_mul(from_repr(x, f), from_repr(f.r2_mod_p, f), ctr);
}

FieldElement FieldElement::from_u64(std::uint64_t x, const FieldParams& f, OpCounters& ctr) {
    return from_uint(FixedUint::from_u64(x, f.word_bits, f.limb_count), f, ctr);
}

FixedUint FieldElement::to_uint(OpCounters& ctr) const {
    if (!attached()) throw UsageError("to_uint on a detached element");
    const FieldParams& f = *params_;
    FieldElement one_raw = from_repr(FixedUint::from_u64(1, f.word_bits, f.limb_count), f);
    return ff_mul(*this, one_raw, ctr).repr();
}

bool FieldElement::is_one(const OpCounters*) const {
    return attached() && repr_ == params_->r_mod_p;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.params_ == nullptr || b.params_ == nullptr) return a.params_ == b.params_;
    return a.params_->same_field(*b.params_) && a.repr_ == b.repr_;
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

FieldElement ff_add(const FieldElement& a, const FieldElement& b, OpCounters& ctr) {
    check_same_field(a, b);
    const FieldParams& f = a.params();
    std::uint64_t t[kMaxLimbs], ra[kMaxLimbs], rb[kMaxLimbs];
    load(a.repr(), ra);
    load(b.repr(), rb);
    const std::uint64_t carry = raw_add(f, ra, rb, t);
    ctr.limb_add += f.limb_count;
    reduce_once(f, t, carry, ctr);
    ++ctr.ff_add;
    ctr.bytes_touched += 3 * bytes_per_operand(f);
    return FieldElement::from_repr(store(f, t), f);
}

FieldElement ff_sub(const FieldElement& a, const FieldElement& b, OpCounters& ctr) {
    check_same_field(a, b);
    const FieldParams& f = a.params();
    std::uint64_t t[kMaxLimbs], ra[kMaxLimbs], rb[kMaxLimbs], p[kMaxLimbs];
    load(a.repr(), ra);
    load(b.repr(), rb);
    const std::uint64_t borrow = raw_sub(f, ra, rb, t);
    ctr.limb_sub += f.limb_count;
    if (borrow) {
        load(f.modulus, p);
        raw_add(f, t, p, t);
        ctr.limb_add += f.limb_count;
    }
    ++ctr.ff_sub;
    ctr.bytes_touched += 3 * bytes_per_operand(f);
    return FieldElement::from_repr(store(f, t), f);
}

FieldElement ff_dbl(const FieldElement& a, OpCounters& ctr) {
    if (!a.attached()) throw UsageError("ff_dbl on a detached element");
    const FieldParams& f = a.params();
    auto sh = shl1(a.repr(), ctr);
    std::uint64_t t[kMaxLimbs];
    load(sh.shifted, t);
    reduce_once(f, t, sh.bit_out, ctr);
    ++ctr.ff_dbl;
    ctr.bytes_touched += 2 * bytes_per_operand(f);
    return FieldElement::from_repr(store(f, t), f);
}

FieldElement ff_neg(const FieldElement& a, OpCounters& ctr) {
    return ff_sub(FieldElement::zero(a.params()), a, ctr);
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b, OpCounters& ctr) {
    check_same_field(a, b);
    const FieldParams& f = a.params();
    std::uint64_t ra[kMaxLimbs], rb[kMaxLimbs], out[kMaxLimbs];
    load(a.repr(), ra);
    load(b.repr(), rb);
    mont_mul_raw(f, ra, rb, out, ctr);
    ++ctr.ff_mul;
    ctr.bytes_touched += 3 * bytes_per_operand(f);
    return FieldElement::from_repr(store(f, out), f);
}

FieldElement ff_sqr(const FieldElement& a, OpCounters& ctr) {
    if (!a.attached()) throw UsageError("ff_sqr on a detached element");
    const FieldParams& f = a.params();
    std::uint64_t ra[kMaxLimbs], out[kMaxLimbs];
    load(a.repr(), ra);
    mont_mul_raw(f, ra, ra, out, ctr);
    ++ctr.ff_sqr;
    ctr.bytes_touched += 2 * bytes_per_operand(f);
    return FieldElement::from_repr(store(f, out), f);
}

namespace {

bool raw_is_one(const std::uint64_t* x, unsigned L) {
    if (x[0] != 1) return false;
    for (unsigned i = 1; i < L; ++i)
        if (x[i] != 0) return false;
    return true;
}

// x >>= 1 with `top` shifted into the most-significant bit.
void raw_shr1(std::uint64_t* x, unsigned L, unsigned W, std::uint64_t top) {
    for (unsigned i = 0; i + 1 < L; ++i)
        x[i] = ((x[i] >> 1) | (x[i + 1] << (W - 1))) & (W == 64 ? ~0ull : 0xffffffffull);
    x[L - 1] = (x[L - 1] >> 1) | (top << (W - 1));
}

int raw_cmp(const std::uint64_t* a, const std::uint64_t* b, unsigned L, unsigned* examined) {
    unsigned n = 0;
    int r = 0;
    for (unsigned i = L; i-- > 0;) {
        ++n;
        if (a[i] != b[i]) {
            r = a[i] < b[i] ? -1 : 1;
            break;
        }
    }
    *examined = n;
    return r;
}

}  // namespace

FieldElement ff_inv(const FieldElement& a, OpCounters& ctr) {
    if (!a.attached()) throw UsageError("ff_inv on a detached element");
    if (a.is_zero()) throw NonInvertibleError(0);
    const FieldParams& f = a.params();
    const unsigned L = f.limb_count;
    const unsigned W = f.word_bits;

    // Leave the Montgomery domain (uncharged multiply; only limb work counts),
    // run the binary extended-Euclidean loop on the plain value, re-enter.
    std::uint64_t ra[kMaxLimbs], u[kMaxLimbs], v[kMaxLimbs], x1[kMaxLimbs] = {1},
                                 x2[kMaxLimbs] = {0}, p[kMaxLimbs],
                                 one_raw[kMaxLimbs] = {1};
    load(a.repr(), ra);
    mont_mul_raw(f, ra, one_raw, u, ctr);
    load(f.modulus, p);
    load(f.modulus, v);

    std::uint64_t n_shift = 0, n_add = 0, n_sub = 0, n_cmp = 0;
    // u and v only shrink; track their active limb counts to keep the loop
    // proportional to the live data. The Bezout coefficients stay full width.
    unsigned ul = L, vl = L;
    auto trim = [&](const std::uint64_t* x, unsigned len) {
        while (len > 1 && x[len - 1] == 0) --len;
        return len;
    };
    auto halve = [&](std::uint64_t* val, unsigned len, std::uint64_t* coeff) {
        raw_shr1(val, len, W, 0);
        std::uint64_t carry = 0;
        if (coeff[0] & 1) {
            carry = raw_add(f, coeff, p, coeff);
            n_add += L;
        }
        raw_shr1(coeff, L, W, carry);
        n_shift += std::uint64_t(len) + L;
    };
    auto mod_sub_raw = [&](std::uint64_t* x, const std::uint64_t* y) {
        if (raw_sub(f, x, y, x)) {
            raw_add(f, x, p, x);
            n_add += L;
        }
        n_sub += L;
    };
    auto sub_active = [&](std::uint64_t* x, const std::uint64_t* y, unsigned len) {
        // x >= y; subtract over the active window only
        std::uint64_t borrow = 0;
        if (W == 32) {
            for (unsigned i = 0; i < len; ++i) {
                const std::uint64_t t = x[i] - y[i] - borrow;
                x[i] = t & 0xffffffffull;
                borrow = (t >> 32) & 1;
            }
        } else {
            for (unsigned i = 0; i < len; ++i) {
                const std::uint64_t xi = x[i], yi = y[i];
                x[i] = xi - yi - borrow;
                borrow = (xi < yi) || (borrow && xi == yi);
            }
        }
        n_sub += len;
    };

    ul = trim(u, L);
    while (!raw_is_one(u, ul) && !raw_is_one(v, vl)) {
        while ((u[0] & 1) == 0) {
            halve(u, ul, x1);
            ul = trim(u, ul);
        }
        while ((v[0] & 1) == 0) {
            halve(v, vl, x2);
            vl = trim(v, vl);
        }
        const unsigned span = ul > vl ? ul : vl;
        unsigned examined = 0;
        const int order = raw_cmp(u, v, span, &examined);
        n_cmp += examined;
        if (order >= 0) {
            sub_active(u, v, span);
            ul = trim(u, span);
            mod_sub_raw(x1, x2);
        } else {
            sub_active(v, u, span);
            vl = trim(v, span);
            mod_sub_raw(x2, x1);
        }
    }
    const std::uint64_t* result = raw_is_one(u, ul) ? x1 : x2;
    ctr.limb_shift += n_shift;
    ctr.limb_add += n_add;
    ctr.limb_sub += n_sub;
    ctr.limb_cmp += n_cmp;

    std::uint64_t r2[kMaxLimbs], out[kMaxLimbs];
    load(f.r2_mod_p, r2);
    mont_mul_raw(f, result, r2, out, ctr);
    ++ctr.ff_inv;
    ctr.bytes_touched += 2 * bytes_per_operand(f);
    return FieldElement::from_repr(store(f, out), f);
}

FieldElement ff_pow(const FieldElement& a, const FixedUint& e, OpCounters& ctr) {
    if (!a.attached()) throw UsageError("ff_pow on a detached element");
    const FieldParams& f = a.params();
    const unsigned top = e.bit_length();
    FieldElement acc = FieldElement::one(f);
    for (unsigned i = top; i-- > 0;) {
        acc = ff_sqr(acc, ctr);
        if (e.bit(i)) acc = ff_mul(acc, a, ctr);
    }
    return acc;
}

std::vector<FieldElement> batch_inverse(std::span<const FieldElement> v, OpCounters& ctr) {
    const std::size_t n = v.size();
    std::vector<FieldElement> out(n);
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].is_zero()) throw NonInvertibleError(i);

    // Prefix products, one inversion of the total, then peel back. The
    // partials are plain field elements, so the working set stays constant
    // per entry.
    std::vector<FieldElement> prefix(n);
    prefix[0] = v[0];
    for (std::size_t i = 1; i < n; ++i) prefix[i] = ff_mul(prefix[i - 1], v[i], ctr);

    FieldElement inv = ff_inv(prefix[n - 1], ctr);
    for (std::size_t i = n; i-- > 1;) {
        out[i] = ff_mul(inv, prefix[i - 1], ctr);
        inv = ff_mul(inv, v[i], ctr);
    }
    out[0] = inv;
    return out;
}

FieldElement random_element(const FieldParams& f, std::mt19937_64& rng, OpCounters& ctr) {
    return FieldElement::from_uint(random_uint_below(f.modulus, rng), f, ctr);
}

FixedUint random_uint_below(const FixedUint& p, std::mt19937_64& rng) {
    const unsigned W = p.word_bits();
    const unsigned L = p.limb_count();
    const unsigned bits = p.bit_length();
    const unsigned top_limb = (bits - 1) / W;
    const unsigned top_bits = bits - top_limb * W;
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    OpCounters probe;
    for (;;) {
        FixedUint x = FixedUint::zero(W, L);
        for (unsigned i = 0; i <= top_limb; ++i) {
            std::uint64_t w = rng();
            if (i == top_limb) w &= top_mask;
            x.set_limb(i, w);
        }
        if (cmp(x, p, probe) == Ordering::Less) return x;
    }
}

}  // namespace zkplab
