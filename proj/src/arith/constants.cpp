#include "invcurve/arith/constants.hpp"

namespace invcurve::arith {

const NumberField& canonical_field(Frame frame) {
  switch (frame) {
    case Frame::V:
    case Frame::I:
      return NumberField::cyclotomic15();
    case Frame::K:
      return NumberField::cyclotomic7();
    case Frame::IWiman:
      return NumberField::wiman_eta();
    case Frame::VWiman:
      return NumberField::rationals();
  }
  return NumberField::rationals();
}

FieldElement sqrt5_in_zeta15() {
  // zeta5 - zeta5^2 - zeta5^3 + zeta5^4 with zeta5 = zeta15^3.
  const NumberField& field = NumberField::cyclotomic15();
  const FieldElement z5 = FieldElement::generator(field).pow(3);
  return z5 - z5.pow(2) - z5.pow(3) + z5.pow(4);
}

FieldElement sqrt_minus7_in_zeta7() {
  const NumberField& field = NumberField::cyclotomic7();
  const FieldElement z = FieldElement::generator(field);
  return z + z.pow(2) + z.pow(4) - z.pow(3) - z.pow(5) - z.pow(6);
}

std::map<std::string, FieldElement> embed_constants(Frame frame) {
  std::map<std::string, FieldElement> out;
  switch (frame) {
    case Frame::V:
    case Frame::I: {
      const NumberField& field = NumberField::cyclotomic15();
      const FieldElement z = FieldElement::generator(field);
      const FieldElement s5 = sqrt5_in_zeta15();
      out.emplace("zeta15", z);
      out.emplace("rho", z.pow(5));
      out.emplace("sqrt5", s5);
      out.emplace("tau", (FieldElement(field, 1L) + s5) * FieldElement(field, Rational(1, 2)));
      break;
    }
    case Frame::K:
      out.emplace("zeta", FieldElement::generator(NumberField::cyclotomic7()));
      out.emplace("sqrt-7", sqrt_minus7_in_zeta7());
      break;
    case Frame::IWiman:
      out.emplace("eta", FieldElement::generator(NumberField::wiman_eta()));
      break;
    case Frame::VWiman:
      // W has integer coefficients; the frame needs no constants.
      break;
  }
  return out;
}

}  // namespace invcurve::arith
