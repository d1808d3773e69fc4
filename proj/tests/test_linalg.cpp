#include <doctest.h>

#include "shintani/linalg.hpp"
#include "shintani/zmod.hpp"

using namespace shintani;

TEST_CASE("rref and kernel over Q") {
  QMatrix A(2, 3);
  A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(0, 2) = 3;
  A.at(1, 0) = 2; A.at(1, 1) = 4; A.at(1, 2) = 6;
  CHECK(qmat_rank(A) == 1);
  QMatrix K = right_kernel(A);
  CHECK(K.cols == 2);
  for (int j = 0; j < K.cols; ++j) {
    mpq_class v0 = A.at(0, 0) * K.at(0, j) + A.at(0, 1) * K.at(1, j) +
                   A.at(0, 2) * K.at(2, j);
    CHECK(v0 == 0);
  }
}

TEST_CASE("solve over Q") {
  QMatrix A(2, 2);
  A.at(0, 0) = 1; A.at(0, 1) = 1;
  A.at(1, 0) = 1; A.at(1, 1) = -1;
  std::vector<mpq_class> b{mpq_class(3), mpq_class(1)};
  std::vector<mpq_class> x;
  REQUIRE(qmat_solve(A, b, &x));
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
}

TEST_CASE("charpoly and rational roots") {
  QMatrix A(2, 2);
  A.at(0, 0) = 2; A.at(0, 1) = 1;
  A.at(1, 0) = 0; A.at(1, 1) = -3;
  auto cp = charpoly(A);  // (x-2)(x+3) = x^2 + x - 6
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 1);
  CHECK(cp[1] == 1);
  CHECK(cp[2] == -6);
  auto roots = rational_roots(cp);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == -3);
  CHECK(roots[1].first == 2);
}

TEST_CASE("smith normal form") {
  // relation matrix of Z^2 / <(2,0),(0,3)> -> divisors 1? no: {2, 3} -> SNF {1, 6}
  std::vector<std::vector<mpz_class>> A = {{2, 0}, {0, 3}};
  auto d = smith_normal_form(A);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 6);
}

TEST_CASE("zmod basic arithmetic") {
  ZmodCtx R(3, 4);  // 81
  CHECK(R.q == 81);
  CHECK(R.val(27) == 3);
  CHECK(R.val(0) == 4);
  CHECK(R.mul(R.inv(2), 2) == 1);
  CHECK(R.pow(2, 4) == 16);
  int prec;
  CHECK(R.divexact(54, 27, &prec) == 2 % 3);
  CHECK(prec == 1);
}

TEST_CASE("howell solve and kernel") {
  ZmodCtx R(3, 3);  // 27
  // A = [[3, 1], [0, 9]] acting on columns: solve A x = b
  ZmodMatrix A(2, 2);
  A.at(0, 0) = 3; A.at(0, 1) = 1;
  A.at(1, 0) = 0; A.at(1, 1) = 9;
  std::vector<int64_t> b{4, 9};
  std::vector<int64_t> x;
  REQUIRE(zmod_solve(R, A, b, &x));
  CHECK(R.reduce(3 * x[0] + x[1] - 4) == 0);
  CHECK(R.reduce(9 * x[1] - 9) == 0);

  // left kernel of [[3],[9]] (rows scale a single column): x0*3 + x1*9 = 0
  ZmodMatrix B(2, 1);
  B.at(0, 0) = 3;
  B.at(1, 0) = 9;
  ZmodMatrix K = zmod_left_kernel(R, B);
  REQUIRE(K.rows >= 1);
  for (int i = 0; i < K.rows; ++i)
    CHECK(R.reduce(K.at(i, 0) * 3 + K.at(i, 1) * 9) == 0);
  // (9, 0) and (3, -1)-type elements must be in the kernel span
  HowellForm HF = howell(R, K);
  CHECK(in_row_span(R, HF, {9, 0}));
  CHECK(in_row_span(R, HF, {3, 26}));
  CHECK(!in_row_span(R, HF, {1, 0}));
}

TEST_CASE("unit root of quadratic (p-stabilization root)") {
  // X^2 + X + 3 over Z_3: unit root == 2 mod 3, == 2 mod 9
  ZmodCtx R(3, 6);
  int64_t alpha = unit_root_of_quadratic(R, mpz_class(-1), mpz_class(3));
  CHECK(R.reduce(alpha * alpha + alpha + 3) == 0);
  CHECK(alpha % 3 == 2);
  CHECK(alpha % 9 == 2);
  CHECK_THROWS_AS(unit_root_of_quadratic(R, mpz_class(3), mpz_class(9)),
                  OrdinarityError);
}

TEST_CASE("primitive scaling") {
  std::vector<mpq_class> v{mpq_class(-2, 3), mpq_class(4, 3), mpq_class(0)};
  auto w = primitive_scale(v);
  CHECK(w[0] == 1);
  CHECK(w[1] == -2);
  CHECK(w[2] == 0);
}
