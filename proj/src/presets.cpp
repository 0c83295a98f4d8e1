#include "zkplab/presets.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "zkplab/errors.hpp"

namespace zkplab {

namespace {

// Left-pads a big-endian hex literal to the exact width of the shape.
FixedUint hex_padded(std::string_view hex, unsigned word_bits, unsigned limb_count) {
    const unsigned nibbles = limb_count * word_bits / 4;
    std::string padded(nibbles - hex.size(), '0');
    padded.append(hex);
    return FixedUint::from_hex(padded, word_bits, limb_count);
}

unsigned limbs_for_bits(unsigned bits, unsigned word_bits) {
    return (bits + word_bits - 1) / word_bits;
}

struct FieldSpec {
    const char* name;
    const char* modulus_hex;
    unsigned bits;
    std::uint64_t small_generator;  // 0 means "p - generator_offset"
    std::uint64_t generator_offset;
};

// Moduli and generators of the supported curves' fields, from the public
// curve specifications; FieldParams::create re-derives and checks everything
// else (primality, Montgomery constants, 2-adicity, nonresidue property).
constexpr FieldSpec kFieldSpecs[] = {
    {"bls12-377-fr", "12ab655e9a2ca55660b44d1e5c37b00159aa76fed00000010a11800000000001", 253, 22,
     0},
    {"bls12-377-fq",
     "1ae3a4617c510eac63b05c06ca1493b1a22d9f300f5138f1ef3622fba094800170b5d44300000008508c0000000000"
     "1",
     377, 0, 5},
    {"bls12-381-fr", "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 255, 7, 0},
    {"bls12-381-fq",
     "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaa"
     "ab",
     381, 2, 0},
    {"f17", "11", 5, 3, 0},
    {"toy-fq", "199", 9, 7, 0},   // p = 409
    {"toy-fr", "17b", 9, 2, 0},   // group order of the toy curve, 379
};

FieldParams build_field(const FieldSpec& spec, unsigned word_bits) {
    const unsigned L = limbs_for_bits(spec.bits, word_bits);
    FixedUint p = hex_padded(spec.modulus_hex, word_bits, L);
    FixedUint g;
    if (spec.small_generator != 0) {
        g = FixedUint::from_u64(spec.small_generator, word_bits, L);
    } else {
        OpCounters scratch;
        g = sub_with_borrow(p, FixedUint::from_u64(spec.generator_offset, word_bits, L), scratch)
                .diff;
    }
    return FieldParams::create(p, g, spec.name);
}

std::mutex g_mutex;

const FieldParams* field_preset_ptr(std::string_view name, unsigned word_bits) {
    static std::map<std::string, std::unique_ptr<FieldParams>> cache;
    std::scoped_lock lock(g_mutex);
    std::string key = std::string(name) + ":" + std::to_string(word_bits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    for (const FieldSpec& spec : kFieldSpecs) {
        if (name == spec.name) {
            auto params = std::make_unique<FieldParams>(build_field(spec, word_bits));
            return cache.emplace(std::move(key), std::move(params)).first->second.get();
        }
    }
    return nullptr;
}

struct CurveSpec {
    const char* name;
    const char* fq;
    const char* fr;
    std::uint64_t b;
    const char* gen_x_hex;
    const char* gen_y_hex;
};

constexpr CurveSpec kCurveSpecs[] = {
    {"bls12-377-g1", "bls12-377-fq", "bls12-377-fr", 1,
     "8848defe740a67c8fc6225bf87ff5485951e2caa9d41bb188282c8bd37cb5cd5481512ffcd394eeab9b16eb21be9e"
     "f",
     "1914a69c5102eff1f674f5d30afeec4bd7fb348ca3e52d96d182ad44fb82305c2fe3d3634a9591afd82de55559c8e"
     "a6"},
    {"bls12-381-g1", "bls12-381-fq", "bls12-381-fr", 4,
     "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c"
     "6bb",
     "8b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa232946c5e7"
     "e1"},
    {"toy", "toy-fq", "toy-fr", 21, "3", "92"},  // G = (3, 146)
};

}  // namespace

const FieldParams& field_preset(std::string_view name, unsigned word_bits) {
    const FieldParams* p = field_preset_ptr(name, word_bits);
    if (p == nullptr)
        throw UsageError("unknown field preset: " + std::string(name));
    return *p;
}

const CurveParams& curve_preset(std::string_view name, unsigned word_bits) {
    static std::map<std::string, std::unique_ptr<CurveParams>> cache;
    for (const CurveSpec& spec : kCurveSpecs) {
        if (name != spec.name) continue;
        const FieldParams& fq = field_preset(spec.fq, word_bits);
        const FieldParams& fr = field_preset(spec.fr, word_bits);
        std::scoped_lock lock(g_mutex);
        std::string key = std::string(name) + ":" + std::to_string(word_bits);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
        OpCounters scratch;
        FieldElement a4 = FieldElement::zero(fq);
        FieldElement b = FieldElement::from_u64(spec.b, fq, scratch);
        const unsigned nib = fq.limb_count * fq.word_bits / 4;
        auto coord = [&](const char* hex) {
            std::string padded(nib - std::string_view(hex).size(), '0');
            padded.append(hex);
            return FieldElement::from_uint(FixedUint::from_hex(padded, fq.word_bits, fq.limb_count),
                                           fq, scratch);
        };
        auto params = std::make_unique<CurveParams>(CurveParams::create(
            fq, fr, a4, b, coord(spec.gen_x_hex), coord(spec.gen_y_hex), spec.name));
        return *cache.emplace(std::move(key), std::move(params)).first->second;
    }
    throw UsageError("unknown curve preset: " + std::string(name));
}

std::vector<std::string> field_preset_names() {
    std::vector<std::string> names;
    for (const FieldSpec& s : kFieldSpecs) names.emplace_back(s.name);
    return names;
}

std::vector<std::string> curve_preset_names() {
    std::vector<std::string> names;
    for (const CurveSpec& s : kCurveSpecs) names.emplace_back(s.name);
    return names;
}

}  // namespace zkplab
