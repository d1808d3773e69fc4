#include "shintani/character.hpp"

#include "shintani/errors.hpp"

namespace shintani {

int jacobi_symbol(const mpz_class& a, const mpz_class& n) {
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int CharacterData::value(const mpz_class& a) const {
  mpz_class g = gcd(a, mpz_class(modulus));
  if (g != 1) return 0;
  if (kind == kTrivial) return 1;
  return jacobi_symbol(a, mpz_class(modulus));
}

int CharacterData::value_at_minus_one() const {
  return value(mpz_class(-1));
}

CharacterData CharacterData::prime_to_p_part(long p) const {
  long m = modulus;
  while (m % p == 0) m /= p;
  return CharacterData{kind, m};
}

CharacterData CharacterData::p_part(long p) const {
  long m = 1;
  long rest = modulus;
  while (rest % p == 0) {
    m *= p;
    rest /= p;
  }
  return CharacterData{kind, m};
}

}  // namespace shintani
