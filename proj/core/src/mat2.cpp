#include "shintani/mat2.hpp"

#include <sstream>

#include "shintani/errors.hpp"

namespace shintani {

Mat2 Mat2::inverse_unimodular() const {
  mpz_class dt = det();
  if (dt == 1) return Mat2(d, -b, -c, a);
  if (dt == -1) return Mat2(-d, b, c, -a);
  throw InternalError("inverse_unimodular: determinant is not a unit");
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

}  // namespace shintani
