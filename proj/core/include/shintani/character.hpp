#pragma once

#include <gmpxx.h>

namespace shintani {

/// Dirichlet character data, restricted in scope to the trivial character
/// and quadratic characters (Jacobi symbol) of odd modulus.
struct CharacterData {
  enum Kind { kTrivial, kQuadratic } kind = kTrivial;
  long modulus = 1;

  static CharacterData trivial(long modulus = 1) {
    return CharacterData{kTrivial, modulus};
  }
  static CharacterData quadratic(long modulus) {
    return CharacterData{kQuadratic, modulus};
  }

  /// chi(a); 0 on non-units of the modulus.
  int value(const mpz_class& a) const;
  int value_at_minus_one() const;
  bool is_trivial() const { return kind == kTrivial; }

  /// Restriction to the part of the modulus coprime to p (resp. the p-part).
  CharacterData prime_to_p_part(long p) const;
  CharacterData p_part(long p) const;
};

/// Kronecker/Jacobi symbol (a | n) for odd n > 0.
int jacobi_symbol(const mpz_class& a, const mpz_class& n);

}  // namespace shintani
