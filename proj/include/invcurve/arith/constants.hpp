#pragma once

#include <map>
#include <string>

#include "invcurve/arith/field_element.hpp"

namespace invcurve::arith {

// Coordinate frames in which the groups and their invariants are realized.
enum class Frame { V, I, K, IWiman, VWiman };

const NumberField& canonical_field(Frame frame);

// Named constants ("rho", "tau", "sqrt5", "zeta15", "zeta", "sqrt-7", "eta") that the
// frame's matrices and polynomials use, all living in canonical_field(frame).
std::map<std::string, FieldElement> embed_constants(Frame frame);

// Quadratic Gauss sums, the source of sqrt(5) and sqrt(-7).
FieldElement sqrt5_in_zeta15();
FieldElement sqrt_minus7_in_zeta7();

}  // namespace invcurve::arith
