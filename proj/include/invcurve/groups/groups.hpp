#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invcurve/arith/matrix3.hpp"

namespace invcurve::groups {

using arith::FieldElement;
using arith::Matrix3;
using arith::NumberField;

// V: Valentiner (A6), I: icosahedral (A5), K: Klein (PSL(2, F_7)).
enum class GroupId { V, I, K };

GroupId parse_group(std::string_view name);
const char* group_name(GroupId g);

// Degrees of F, Phi, Psi and X, and the projective order.
struct DegreeProfile {
  unsigned a;
  unsigned b;
  unsigned c;
  unsigned x;
  unsigned projective_order;
  unsigned lift_order;
};

const DegreeProfile& degree_profile(GroupId g);

struct GeneratorSet {
  GroupId group;
  std::vector<std::string> names;
  std::vector<Matrix3> matrices;

  const NumberField& field() const { return matrices.front().field(); }
  const Matrix3& by_name(std::string_view name) const;
};

// V: Z, T, Q, P over Q(zeta15); I: Z, T, P over Q(zeta15); K: S, T, R over Q(zeta7).
GeneratorSet generators(GroupId g);

class MatrixGroup {
 public:
  MatrixGroup(GroupId group, std::vector<Matrix3> elements);

  GroupId group() const { return group_; }
  const NumberField& field() const { return elements_.front().field(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix3>& elements() const { return elements_; }
  bool contains(const Matrix3& m) const;

 private:
  GroupId group_;
  std::vector<Matrix3> elements_;
};

inline constexpr std::size_t kDefaultClosureCap = 4000;

// Breadth-first closure under right multiplication by the generators. Throws
// Error once more than cap elements appear.
MatrixGroup closure(const GeneratorSet& gens, std::size_t cap = kDefaultClosureCap);

// Number of classes modulo scalar matrices.
std::size_t projective_order(const std::vector<Matrix3>& elements);
inline std::size_t projective_order(const MatrixGroup& g) { return projective_order(g.elements()); }

// Coefficients of t^0..t^n of the group average of 1/det(I - tA), exactly.
std::vector<long> molien_series(const MatrixGroup& g, unsigned n);
// Expansion of (1 - t^(2x)) / ((1 - t^a)(1 - t^b)(1 - t^c)(1 - t^x)).
std::vector<long> expand_poincare(GroupId g, unsigned n);

}  // namespace invcurve::groups
