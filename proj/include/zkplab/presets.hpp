#pragma once

#include <string_view>
#include <vector>

#include "zkplab/curve.hpp"
#include "zkplab/field.hpp"

namespace zkplab {

// Built-in field descriptions, constructed on first use and validated by
// FieldParams::create (the constants are inputs, not trusted ground truth):
//   bls12-377-fr  253-bit scalar field
//   bls12-377-fq  377-bit base field
//   bls12-381-fr  255-bit scalar field
//   bls12-381-fq  381-bit base field
//   f17           tiny test field, one limb
//   toy-fq        base field of the toy curve (p = 409)
//   toy-fr        scalar field of the toy curve (group order 379)
const FieldParams& field_preset(std::string_view name, unsigned word_bits = 32);

// Built-in curves: bls12-377-g1, bls12-381-g1, toy.
const CurveParams& curve_preset(std::string_view name, unsigned word_bits = 32);

std::vector<std::string> field_preset_names();
std::vector<std::string> curve_preset_names();

}  // namespace zkplab
