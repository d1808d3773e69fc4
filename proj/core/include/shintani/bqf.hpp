#pragma once

#include <optional>
#include <vector>

#include "shintani/character.hpp"
#include "shintani/mat2.hpp"
#include "shintani/word.hpp"

namespace shintani {

/// Indefinite integral binary quadratic form A x^2 + B xy + C y^2 with level
/// tags: (Np^n) | A, (2Np^n) | B, and xi(Q) = disc/(2Np^n)^2 a positive
/// integer (the q-expansion index).
struct IndefiniteForm {
  mpz_class A, B, C;
  long N = 1, p = 1;
  int n = 0;

  mpz_class disc() const { return B * B - 4 * A * C; }
  mpz_class level() const;  // N p^n
  mpz_class xi() const;
  mpz_class b_alpha() const { return -C; }  // character datum, mod level
  /// Q(x, y) exactly.
  mpz_class eval(const mpz_class& x, const mpz_class& y) const;
  void validate() const;  // throws on invariant violations
  bool operator==(const IndefiniteForm& o) const {
    return A == o.A && B == o.B && C == o.C;
  }
  bool operator<(const IndefiniteForm& o) const;
};

/// Q | g: the right substitution action on forms.
IndefiniteForm form_act(const IndefiniteForm& Q, const Mat2& g);

struct FormClass {
  IndefiniteForm rep;
  Mat2 automorph;     // gamma_Q in Gamma_0(N p^n), fixes rep
  int torsion = 2;    // order of the +-1 stabilizer; 2 with -1 present
  mpz_class b_alpha;  // reduced mod N p^n, sign convention -C
  std::optional<Word> automorph_word;  // filled externally when needed
};

/// Fundamental solution of x^2 - D y^2 = 1 (D > 0 nonsquare), minimal x > 1.
std::pair<mpz_class, mpz_class> pell_fundamental(const mpz_class& D);

/// Minimal (t, u), t,u > 0, with t^2 - disc * u^2 = 4, and the automorph
/// [[(t-Bu)/2, -Cu], [Au, (t+Bu)/2]]; raises to a power landing in
/// Gamma_0(level) when necessary (never for level-shaped forms).
std::pair<Mat2, int> automorph(const IndefiniteForm& Q);

/// eta_psi(Q) = psi(b_alpha), zero when b_alpha shares a factor with the
/// form level or psi's modulus.
mpq_class eta(const IndefiniteForm& Q, const CharacterData& psi);

/// One representative per Gamma_0(Np^n)-class of forms with the level shape
/// and invariant xi; deterministic ordering. Throws SplitFormError when
/// xi (2Np^n)^2 is a perfect square.
std::vector<FormClass> enumerate_classes(long N, long p, int n, long xi);

/// Exact Gamma_0(L)-equivalence of two forms of the same discriminant.
bool gamma0_equivalent(const IndefiniteForm& Q1, const IndefiniteForm& Q2);

/// Data of pi_{m,xi,t}: the identity inclusion on forms from level-m classes
/// to level-1 classes (level-1 invariant xi p^{2(m-1)}), restricted to the
/// stratum b_alpha == t mod N p^m.
struct FamilyMap {
  std::vector<FormClass> source;  // level m classes with the t-condition
  std::vector<FormClass> target;  // level 1 classes with the t-condition
  std::vector<int> image;         // source index -> target index
  bool injective = false, surjective = false;
};

FamilyMap family_map_pi(long N, long p, int m, long xi, long t);

}  // namespace shintani
