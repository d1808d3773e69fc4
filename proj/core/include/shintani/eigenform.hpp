#pragma once

#include <map>

#include "shintani/character.hpp"
#include "shintani/cohomology.hpp"
#include "shintani/zmod.hpp"

namespace shintani {

/// Hecke eigenform data for the classical side; eigenvalues exact rationals
/// (scope: rational eigensystems, trivial or quadratic psi).
struct ClassicalEigenform {
  long N = 1, p = 1;
  int r = 0;       // level = N p^r
  int weight = 2;  // w = 2k, even
  CharacterData psi = CharacterData::trivial();
  std::map<long, mpq_class> a;  // ell -> a_ell
  bool ordinary_at_p = false;

  long level() const {
    long L = N;
    for (int i = 0; i < r; ++i) L *= p;
    return L;
  }
  int k() const { return weight / 2; }
  /// Weil-bound sanity check |a_ell| <= 2 ell^((w-1)/2) for ell coprime to
  /// the level.
  void check_weil_bounds() const;
};

/// alpha (unit root of X^2 - a_p X + eps(p) p^(w-1)) and the stabilized
/// eigenvalue map at level N p.
struct Stabilization {
  int64_t alpha;          // mod p^M
  ClassicalEigenform f;   // level N p, a(p) replaced (tracked separately)
};

Stabilization p_stabilize(const ClassicalEigenform& f, long p,
                          const ZmodCtx& R);

/// Splitting of a Hecke module into rational simultaneous eigensystems.
struct RationalEigensystem {
  std::vector<std::pair<long, mpq_class>> apairs;
  std::vector<mpq_class> coords;  // H^1 coordinates of a generator
  bool eisenstein = false;
};

struct IrrationalBlock {
  std::vector<mpq_class> charpoly;  // of the first operator on the block
  long ell = 0;
  QMatrix basis;  // columns: H^1 coordinates
};

struct EigensystemSplit {
  std::vector<RationalEigensystem> rational;
  std::vector<IrrationalBlock> irrational;
};

/// Iteratively split the span of `subspace` under the given commuting
/// operators into rational eigenlines; non-rational blocks are reported with
/// their characteristic polynomials (for p-adic location downstream).
EigensystemSplit split_eigensystems(
    const std::vector<std::pair<long, QMatrix>>& ops, const QMatrix& subspace,
    int weight);

/// All Z_p-roots of a monic integer polynomial to precision p^M, found by
/// digit search with branching; returns (root, certified precision) pairs.
std::vector<std::pair<int64_t, int>> padic_roots(
    const std::vector<mpz_class>& monic_poly, const ZmodCtx& R);

}  // namespace shintani
