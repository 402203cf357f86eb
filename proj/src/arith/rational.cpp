#include "invcurve/arith/rational.hpp"

#include "invcurve/error.hpp"

namespace invcurve::arith {

Rational parse_rational(std::string_view num, std::string_view den) {
  Integer n;
  Integer d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
    throw Error("malformed rational '" + std::string(num) + "/" + std::string(den) + "'");
  }
  if (d == 0) throw DivisionByZero();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace invcurve::arith
