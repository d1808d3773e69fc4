#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace shintani {

/// 2x2 integer matrix with exact entries. Group elements have det 1,
/// semigroup elements positive det; omega_inf has det -1.
struct Mat2 {
  mpz_class a, b, c, d;

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  static Mat2 identity() { return Mat2(); }
  static Mat2 from_ints(long a_, long b_, long c_, long d_) {
    return Mat2(mpz_class(a_), mpz_class(b_), mpz_class(c_), mpz_class(d_));
  }

  mpz_class det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }

  /// Inverse for det = +-1 matrices only.
  Mat2 inverse_unimodular() const;

  /// norm(s) * s^{-1}; integral whenever s is (norm = det here).
  Mat2 star() const { return Mat2(d, -b, -c, a) * sign_of_det(); }

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_minus_identity() const {
    return a == -1 && b == 0 && c == 0 && d == -1;
  }

  std::string str() const;

 private:
  int sign_of_det() const { return det() < 0 ? -1 : 1; }
  Mat2 operator*(int s) const { return Mat2(a * s, b * s, c * s, d * s); }
  friend Mat2 operator*(int s, const Mat2& m) { return m * s; }
};

}  // namespace shintani
