#include <doctest.h>

#include <random>

#include "shintani/polyweight.hpp"

using namespace shintani;

namespace {
Mat2 rand_sl2(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  // random word in T and S keeps det 1
  Mat2 m = Mat2::identity();
  Mat2 S = Mat2::from_ints(0, -1, 1, 0);
  for (int i = 0; i < 6; ++i) {
    m = m * Mat2(1, d(rng), 0, 1);
    m = m * S;
  }
  return m;
}
}  // namespace

TEST_CASE("act_poly basics") {
  HomPolyQ P(3);
  P.coeff[3] = 1;  // x^3
  auto id = act_poly(Mat2::identity(), P);
  CHECK(id.coeff == P.coeff);
  // gamma = [[0,-1],[1,0]]: x -> -y so x^n -> (-1)^n y^n
  auto SP = act_poly(Mat2::from_ints(0, -1, 1, 0), P);
  CHECK(SP.coeff[0] == -1);
  CHECK(SP.coeff[3] == 0);
}

TEST_CASE("right action composition law") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Mat2 g1 = rand_sl2(rng), g2 = rand_sl2(rng);
    HomPolyQ P(4);
    std::uniform_int_distribution<int> d(-5, 5);
    for (auto& c : P.coeff) c = d(rng);
    auto lhs = act_poly(g2, act_poly(g1, P));
    auto rhs = act_poly(g1 * g2, P);
    CHECK(lhs.coeff == rhs.coeff);
  }
}

TEST_CASE("dual pairing identity and left action law") {
  std::mt19937 rng(8);
  PolyDualModuleQ M(4);
  for (int t = 0; t < 20; ++t) {
    Mat2 g1 = rand_sl2(rng), g2 = rand_sl2(rng);
    PolyDualQ phi(4);
    HomPolyQ P(4);
    std::uniform_int_distribution<int> d(-5, 5);
    for (auto& c : phi.values) c = d(rng);
    for (auto& c : P.coeff) c = d(rng);
    // (gamma phi)(P) = phi(P|gamma)
    CHECK(pair_dual(act_dual(g1, phi), P) == pair_dual(phi, act_poly(g1, P)));
    // left action law gamma1.(gamma2.phi) = (gamma1 gamma2).phi
    auto lhs = act_dual(g1, act_dual(g2, phi));
    auto rhs = act_dual(g1 * g2, phi);
    CHECK(lhs.values == rhs.values);
  }
}

TEST_CASE("degree 0 action is trivial; -1 acts trivially on even degree") {
  std::mt19937 rng(9);
  PolyDualQ phi(0);
  phi.values[0] = 5;
  auto r = act_dual(rand_sl2(rng), phi);
  CHECK(r.values[0] == 5);

  PolyDualQ psi(4);
  for (int i = 0; i <= 4; ++i) psi.values[i] = i + 1;
  auto s = act_dual(Mat2::from_ints(-1, 0, 0, -1), psi);
  CHECK(s.values == psi.values);
}

TEST_CASE("odd degree modules are out of scope") {
  CHECK_THROWS_AS(PolyDualModuleQ(3), WeightError);
}
