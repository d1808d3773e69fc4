#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shintani/errors.hpp"
#include "shintani/bqf.hpp"

using namespace shintani;

TEST_CASE("pell fundamental solutions") {
  auto [x, y] = pell_fundamental(mpz_class(5));
  CHECK(x == 9);
  CHECK(y == 4);
  auto [x2, y2] = pell_fundamental(mpz_class(2));
  CHECK(x2 == 3);
  CHECK(y2 == 2);
  auto [x3, y3] = pell_fundamental(mpz_class(61));
  CHECK(x3 == mpz_class("1766319049"));
  CHECK_THROWS_AS(pell_fundamental(mpz_class(16)), SplitFormError);
}

TEST_CASE("automorph of x^2 + 2xy - y^2 (disc 8, level 1)") {
  // disc 8 => t^2 - 8 u^2 = 4, minimal (t, u) = (6, 2)
  IndefiniteForm Q;
  Q.A = 1; Q.B = 2; Q.C = -1;
  Q.N = 1; Q.p = 1; Q.n = 0;
  auto [g, power] = automorph(Q);
  CHECK(power == 1);
  CHECK(g.det() == 1);
  CHECK(form_act(Q, g) == Q);
  // direct search oracle for minimal (t, u)
  mpz_class d = Q.disc();
  bool checked = false;
  for (long u = 1; u <= 100 && !checked; ++u) {
    mpz_class t2 = 4 + d * u * u;
    if (mpz_perfect_square_p(t2.get_mpz_t())) {
      mpz_class t;
      mpz_sqrt(t.get_mpz_t(), t2.get_mpz_t());
      CHECK(g.a == (t - Q.B * u) / 2);
      CHECK(g.c == Q.A * u);
      checked = true;
    }
  }
  CHECK(checked);
}

TEST_CASE("automorph fixes the form exactly; orientation is pinned") {
  // spec example: x^2 + xy - y^2 has disc 5 and (t,u) = (3,1),
  // gamma = [[1,1],[1,2]] -- middle coefficient odd, so use the
  // even-B sibling 2x^2 + 2xy - 2y^2 / scaled variant x^2+2xy-... instead:
  // the library scope keeps B even; check the documented disc-5 matrix by
  // direct matrix algebra.
  Mat2 g = Mat2::from_ints(1, 1, 1, 2);
  // Q = x^2 + xy - y^2 as coefficients (1, 1, -1): g fixes it
  mpz_class A = 1, B = 1, C = -1;
  mpz_class A2 = A * g.a * g.a + B * g.a * g.c + C * g.c * g.c;
  mpz_class B2 = 2 * A * g.a * g.b + B * (g.a * g.d + g.b * g.c) +
                 2 * C * g.c * g.d;
  mpz_class C2 = A * g.b * g.b + B * g.b * g.d + C * g.d * g.d;
  CHECK(A2 == A);
  CHECK(B2 == B);
  CHECK(C2 == C);
}

TEST_CASE("enumerate_classes: discriminant 20 at level 1") {
  // xi = 5, level 1: disc = 20
  auto classes = enumerate_classes(1, 1, 0, 5);
  CHECK((long)classes.size() == oracle::class_count_bruteforce(1, 1, 0, 5));
  CHECK(classes.size() == 2);
  for (const auto& c : classes) {
    CHECK(c.rep.disc() == 20);
    CHECK(form_act(c.rep, c.automorph) == c.rep);
    CHECK(c.torsion == 2);
  }
}

TEST_CASE("enumerate_classes: split discriminant rejected") {
  CHECK_THROWS_AS(enumerate_classes(1, 1, 0, 4), SplitFormError);
  CHECK_THROWS_AS(enumerate_classes(1, 1, 0, 9), SplitFormError);
}

TEST_CASE("enumerate_classes at level 33 matches brute force") {
  for (long xi : {2L, 5L}) {
    auto classes = enumerate_classes(11, 3, 1, xi);
    long bf = oracle::class_count_bruteforce(11, 3, 1, xi);
    CHECK((long)classes.size() == bf);
    for (const auto& c : classes) {
      CHECK(c.rep.disc() == 4 * 33 * 33 * xi);
      CHECK(c.rep.A % 33 == 0);
      CHECK(c.rep.B % 66 == 0);
      CHECK(form_act(c.rep, c.automorph) == c.rep);
      CHECK(c.automorph.c % 33 == 0);  // member of Gamma_0(33)
    }
  }
}

TEST_CASE("class representatives are stable under random conjugation") {
  std::mt19937 rng(5);
  auto G = build_presentation(33);
  auto classes = enumerate_classes(11, 3, 1, 2);
  for (const auto& c : classes) {
    // replace the representative by a random Gamma-conjugate; the class is
    // unchanged (gamma0_equivalent), and re-enumeration gives the same count
    Mat2 m = Mat2::identity();
    std::uniform_int_distribution<int> gd(0, (int)G.generators.size() - 1);
    for (int i = 0; i < 6; ++i) m = m * G.generators[gd(rng)];
    IndefiniteForm conj = form_act(c.rep, m);
    CHECK(gamma0_equivalent(c.rep, conj));
  }
  // forms in distinct classes are inequivalent
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      CHECK(!gamma0_equivalent(classes[i].rep, classes[j].rep));
}

TEST_CASE("eta of trivial and quadratic characters") {
  IndefiniteForm Q;
  Q.N = 11; Q.p = 3; Q.n = 1;
  Q.A = 33 * 33; Q.B = 0;
  Q.C = -2;  // b_alpha = 2, coprime to 33
  CHECK(eta(Q, CharacterData::trivial(11)) == 1);
  IndefiniteForm Qp = Q;
  Qp.C = -3;  // p | b_alpha
  CHECK(eta(Qp, CharacterData::trivial(11)) == 0);
  IndefiniteForm Qn = Q;
  Qn.C = -11;  // N | b_alpha
  CHECK(eta(Qn, CharacterData::trivial(11)) == 0);
  // quadratic character mod 5: psi(2) = -1 (2 is not a square mod 5)
  IndefiniteForm Q5;
  Q5.N = 5; Q5.p = 1; Q5.n = 0;
  Q5.A = 5; Q5.B = 0; Q5.C = -2;
  CHECK(eta(Q5, CharacterData::quadratic(5)) == -1);
  Q5.C = -4;  // 4 is a square mod 5
  CHECK(eta(Q5, CharacterData::quadratic(5)) == 1);
}

TEST_CASE("family map pi_{1,xi,t} is the identity") {
  // m = 1: source and target coincide
  auto fm = family_map_pi(11, 3, 1, 2, 1);
  CHECK(fm.source.size() == fm.target.size());
  CHECK(fm.injective);
  CHECK(fm.surjective);
  for (size_t i = 0; i < fm.source.size(); ++i) CHECK(fm.image[i] == (int)i);
}

TEST_CASE("family map pi_{2,xi,t}: bijective on a nonempty instance") {
  // small search for a nonempty stratum at m = 2
  bool tested = false;
  for (long xi = 1; xi <= 6 && !tested; ++xi) {
    mpz_class disc = mpz_class(4) * 9 * 9 * 9 * 9 * xi;  // (2*3^2)^2 xi, N=1? no
    for (long t : {1L, 2L, 4L, 5L, 7L, 8L}) {
      FamilyMap fm;
      try {
        fm = family_map_pi(2, 3, 2, xi, t);
      } catch (const SplitFormError&) {
        continue;
      } catch (const Error&) {
        continue;
      }
      if (fm.source.empty()) continue;
      tested = true;
      CHECK(fm.injective);
      CHECK(fm.surjective);
      CHECK(fm.source.size() == fm.target.size());
      break;
    }
  }
  CHECK(tested);
}
