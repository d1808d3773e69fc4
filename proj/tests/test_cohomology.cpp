#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shintani/cohomology.hpp"
#include "shintani/eigenform.hpp"
#include "shintani/polyweight.hpp"

using namespace shintani;

namespace {

struct Level11Fixture {
  GroupPresentation G = build_presentation(11);
  PolyDualModuleQ M0{0};
  H1SpaceQ S = compute_h1(M0, G);
  HeckeContext T2 = prepare_hecke(Mat2::from_ints(1, 0, 0, 2), G);
  HeckeContext T3 = prepare_hecke(Mat2::from_ints(1, 0, 0, 3), G);
  HeckeContext iota = prepare_hecke(Mat2::from_ints(1, 0, 0, -1), G);
};

Level11Fixture& fix() {
  static Level11Fixture f;
  return f;
}

bool qzero(const PolyDualModuleQ& M, const PolyDualQ& v) {
  for (const auto& x : v.values)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("dim H^1(Gamma_0(11), Q) = 3 against SNF and genus oracles") {
  auto& F = fix();
  CHECK(F.S.dim_h == 3);
  // Eichler-Shimura bookkeeping: 2 dim S_2 + (cusps - 1)
  CHECK(F.S.dim_h == 2 * oracle::dim_cusp_forms(11, 2) +
                         oracle::dim_eisenstein(11, 2));
}

TEST_CASE("trivial module: H^1 = Hom(G^ab, Q)") {
  auto G2 = build_presentation(2);
  PolyDualModuleQ M0(0);
  auto S = compute_h1(M0, G2);
  // Gamma_0(2): genus 0, 2 cusps, nu2 = 1 -> free rank 1
  CHECK(S.dim_h == 1);
}

TEST_CASE("V_2 dimension matches Eichler-Shimura oracle") {
  auto& F = fix();
  PolyDualModuleQ M2(2);
  auto S2 = compute_h1(M2, F.G);
  CHECK(S2.dim_h ==
        2 * oracle::dim_cusp_forms(11, 4) + oracle::dim_eisenstein(11, 4));
}

TEST_CASE("T_2 on level 11 weight 2: eigenvalues -2 (twice) and 3") {
  auto& F = fix();
  QMatrix T2 = hecke_matrix(F.M0, F.G, F.S, F.T2);
  auto cp = charpoly(T2);
  // (x+2)^2 (x-3) = x^3 + x^2 - 8x - 12
  REQUIRE(cp.size() == 4);
  CHECK(cp[1] == 1);
  CHECK(cp[2] == -8);
  CHECK(cp[3] == -12);
  CHECK(-2 == oracle::a_ell_11a(2));
  CHECK(-1 == oracle::a_ell_11a(3));
}

TEST_CASE("Hecke operators commute with each other and with iota") {
  auto& F = fix();
  QMatrix T2 = hecke_matrix(F.M0, F.G, F.S, F.T2);
  QMatrix T3 = hecke_matrix(F.M0, F.G, F.S, F.T3);
  QMatrix I = hecke_matrix(F.M0, F.G, F.S, F.iota);
  CHECK(qmat_mul(T2, T3).a == qmat_mul(T3, T2).a);
  CHECK(qmat_mul(T2, I).a == qmat_mul(I, T2).a);
  CHECK(qmat_mul(T3, I).a == qmat_mul(I, T3).a);
}

TEST_CASE("involution splits H^1 into complementary eigenspaces") {
  auto& F = fix();
  QMatrix I = hecke_matrix(F.M0, F.G, F.S, F.iota);
  auto split = involution_split(I);
  CHECK(split.plus_basis.cols + split.minus_basis.cols == 3);
  CHECK(split.plus_basis.cols >= 1);
  CHECK(split.minus_basis.cols >= 1);
}

TEST_CASE("eigen_locate finds the cusp form and rejects fake systems") {
  auto& F = fix();
  QMatrix T2 = hecke_matrix(F.M0, F.G, F.S, F.T2);
  QMatrix T3 = hecke_matrix(F.M0, F.G, F.S, F.T3);
  QMatrix I = hecke_matrix(F.M0, F.G, F.S, F.iota);
  auto split = involution_split(I);

  // plus-part cuspidal class for {a_2 = -2, a_3 = -1}
  auto v = eigen_locate({T2, T3}, {mpq_class(-2), mpq_class(-1)},
                        split.plus_basis);
  CHECK(v.size() == 3);
  // primitive integral normalization: first nonzero positive integer
  bool found_first = false;
  for (auto& x : v) {
    CHECK(x.get_den() == 1);
    if (!found_first && x != 0) {
      CHECK(x > 0);
      found_first = true;
    }
  }
  // eigenvector property
  std::vector<mpq_class> tv = qmat_apply(T2, v);
  for (size_t i = 0; i < v.size(); ++i) CHECK(tv[i] == -2 * v[i]);

  // minus part too (both signs are one-dimensional at level 11)
  CHECK_NOTHROW(eigen_locate({T2, T3}, {mpq_class(-2), mpq_class(-1)},
                             split.minus_basis));

  // a_2 = 99 violates any eigensystem: not found
  CHECK_THROWS_AS(eigen_locate({T2}, {mpq_class(99)}, split.plus_basis),
                  EigenspaceError);

  // Eisenstein system {a_ell = 1 + ell}
  QMatrix full = QMatrix::identity(3);
  auto e = eigen_locate({T2, T3}, {mpq_class(3), mpq_class(4)}, full);
  std::vector<mpq_class> te = qmat_apply(T3, e);
  for (size_t i = 0; i < e.size(); ++i) CHECK(te[i] == 4 * e[i]);

  // ambiguity: T_2 alone does not cut the -2 eigenspace to dimension 1
  CHECK_THROWS_AS(eigen_locate({T2}, {mpq_class(-2)}, full), EigenspaceError);
}

TEST_CASE("B^1 is Hecke stable: coboundary maps to coboundary") {
  auto G = build_presentation(11);
  PolyDualModuleQ M(2);
  auto S = compute_h1(M, G);
  HeckeContext T2 = prepare_hecke(Mat2::from_ints(1, 0, 0, 2), G);
  PolyDualQ m(2);
  m.values = {mpq_class(1), mpq_class(-2), mpq_class(3)};
  auto cb = coboundary(M, G, m);
  auto tcb = hecke_on_cocycle(M, G, T2, cb);
  // class of the image is zero
  auto coords = h1_coordinates(M, G, S, tcb);
  for (auto& c : coords) CHECK(c == 0);
}

TEST_CASE("cocycles satisfy relation constraints after Hecke") {
  auto G = build_presentation(2);  // has an elliptic relation
  PolyDualModuleQ M(2);
  auto S = compute_h1(M, G);
  REQUIRE(S.dim_h >= 0);
  HeckeContext T3 = prepare_hecke(Mat2::from_ints(1, 0, 0, 3), G);
  // push a random Z^1 vector through T_3 and check the relation constraint
  REQUIRE(S.zbasis.cols > 0);
  std::vector<mpq_class> v(S.zbasis.rows);
  for (int i = 0; i < S.zbasis.rows; ++i) v[i] = S.zbasis.at(i, 0);
  auto c = cochain_unflatten(M, G, v);
  auto tc = hecke_on_cocycle(M, G, T3, c);
  CHECK(relations_hold(M, G, tc, qzero));
}

TEST_CASE("iota applied twice is the identity on random classes") {
  auto& F = fix();
  QMatrix I = hecke_matrix(F.M0, F.G, F.S, F.iota);
  QMatrix I2 = qmat_mul(I, I);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(I2.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("split_eigensystems separates cusp, Eisenstein, irrational blocks") {
  // weight 6 (V_4) at level 11: rational a_2 = -4 newform, Eisenstein 33,
  // and a cubic block x^3 - 90x + 188
  auto G = build_presentation(11);
  PolyDualModuleQ M(4);
  auto S = compute_h1(M, G);
  HeckeContext H2 = prepare_hecke(Mat2::from_ints(1, 0, 0, 2), G);
  QMatrix T2 = hecke_matrix(M, G, S, H2);
  HeckeContext Hi = prepare_hecke(Mat2::from_ints(1, 0, 0, -1), G);
  QMatrix I = hecke_matrix(M, G, S, Hi);
  auto split = involution_split(I);
  CHECK(split.plus_basis.cols == 4);  // = dim S_6(Gamma_0(11))
  CHECK(split.minus_basis.cols == 6);
  auto sys = split_eigensystems({{2, T2}}, split.plus_basis, 6);
  bool saw_m4 = false;
  for (auto& rs : sys.rational)
    if (rs.apairs[0].second == -4) saw_m4 = true;
  CHECK(saw_m4);
  REQUIRE(sys.irrational.size() == 1);
  // the cubic block: x^3 - 90 x + 188
  auto q = sys.irrational[0].charpoly;
  REQUIRE(q.size() == 4);
  CHECK(q[0] == 1);
  CHECK(q[1] == 0);
  CHECK(q[2] == -90);
  CHECK(q[3] == 188);
  // the two Eisenstein classes (a_2 = 1 + 2^5 = 33) sit in the minus part as a
  // two-dimensional eigenspace
  auto msys = split_eigensystems({{2, T2}}, split.minus_basis, 6);
  bool saw_eis_block = false;
  for (auto& ib : msys.irrational) {
    QMatrix img = qmat_mul(T2, ib.basis);
    bool eigen33 = img.rows > 0 && qmat_rank(ib.basis) == 2;
    for (int i = 0; i < img.rows && eigen33; ++i)
      for (int j = 0; j < img.cols; ++j)
        if (img.at(i, j) != 33 * ib.basis.at(i, j)) eigen33 = false;
    if (eigen33) saw_eis_block = true;
  }
  CHECK(saw_eis_block);
}

TEST_CASE("padic_roots isolates the Q_3-rational root of the weight-6 cubic") {
  ZmodCtx R(3, 8);
  auto roots = padic_roots({mpz_class(1), mpz_class(0), mpz_class(-90),
                            mpz_class(188)},
                           R);
  REQUIRE(roots.size() >= 1);
  // exactly one cluster once the two ramified branches die out
  bool found = false;
  for (auto& [r, prec] : roots) {
    if (prec >= 4) {
      found = true;
      CHECK(r % 9 == 4);  // a_2 == 4 mod 9
      // f(r) == 0 mod 3^prec
      ZmodCtx Rp(3, prec);
      int64_t v = Rp.reduce(((mpz_class(r) * r * r - 90 * r + 188)));
      CHECK(v == 0);
    }
  }
  CHECK(found);
}
