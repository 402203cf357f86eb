#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invcurve/arith/constants.hpp"
#include "invcurve/groups/groups.hpp"
#include "invcurve/mpoly/mpoly.hpp"

namespace invcurve::inv {

using groups::GroupId;
using poly::MPoly;

enum class Coords { Standard, Wiman };

Coords parse_coords(std::string_view name);
const char* coords_name(Coords c);
arith::Frame frame_of(GroupId g, Coords c);

// F, Phi, Psi and X for one group in one coordinate frame.
struct InvariantTriple {
  GroupId group;
  Coords coords;
  MPoly F;
  MPoly Phi;
  MPoly Psi;
  MPoly X;

  const arith::NumberField& field() const { return F.field(); }
  const groups::DegreeProfile& degrees() const { return groups::degree_profile(group); }
  // F, Phi, Psi, X in that order.
  std::array<const MPoly*, 4> polys() const { return {&F, &Phi, &Psi, &X}; }
};

// C1 = x^2 + y^2 + z^2, C2 = C1^(Q^-1), C(7-k) = C2^(P^-k) for k = 4..1.
std::array<MPoly, 6> valentiner_conics();
// The closed forms printed alongside the definitions above, transcribed as data
// for cross-checking the generated conics.
std::array<MPoly, 6> printed_conics();

// 10x^3y^3 + 9x^5z + 9y^5z - 45x^2y^2z^2 - 135xyz^4 + 27z^6
MPoly wiman_sextic(const arith::NumberField& field);

InvariantTriple build_valentiner();
InvariantTriple build_wiman_valentiner();
InvariantTriple build_icosahedral(Coords coords);
InvariantTriple build_klein();
InvariantTriple build(GroupId g, Coords coords);

// Process-wide cache of build(); the Valentiner standard frame takes a moment.
const InvariantTriple& cached(GroupId g, Coords coords);

bool is_invariant(const MPoly& f, const std::vector<arith::Matrix3>& matrices);
inline bool is_invariant(const MPoly& f, const groups::GeneratorSet& gens) { return is_invariant(f, gens.matrices); }
inline bool is_invariant(const MPoly& f, const groups::MatrixGroup& g) { return is_invariant(f, g.elements()); }

// Index j and exponent k with C_i^A = rho^k C_j, if any.
struct ConicImage {
  int conic;
  int rho_power;
};
std::optional<ConicImage> conic_image(const MPoly& conic, const arith::Matrix3& a, const std::array<MPoly, 6>& conics);

// Coefficients expressing f in the monomials F^i Phi^j Psi^k of its degree.
struct BasicExpression {
  enum class Status { Ok, EmptyBasis, NotExpressible, NotHomogeneous };

  Status status = Status::NotHomogeneous;
  unsigned degree = 0;
  std::vector<std::array<unsigned, 3>> basis;
  std::vector<arith::FieldElement> coefficients;
  std::string message;

  bool ok() const { return status == Status::Ok; }
};

BasicExpression express_in_basic(const MPoly& f, const InvariantTriple& t);
// sum_l coefficients[l] * F^i Phi^j Psi^k.
MPoly recombine(const BasicExpression& e, const InvariantTriple& t);

}  // namespace invcurve::inv
