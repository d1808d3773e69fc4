#include "shintani/qexp.hpp"

namespace shintani {

namespace {

void check_good_prime(long q, long level4) {
  if (level4 % q == 0)
    throw ScopeError("halfint_Tq2: prime divides 4 * level");
}

}  // namespace

// b(xi) = a(q^2 xi) + psi(q) (xi | q) q^(k-1) a(xi) + psi(q)^2 q^(2k-1)
//         a(xi / q^2)
// (the adjusted-character factors collapse to psi against the (-1/.)^k part
// of chi; see the weight k+1/2 operator of the classical framework).
HalfIntQExpansionQ halfint_Tq2(const HalfIntQExpansionQ& h, long q) {
  check_good_prime(q, h.level4);
  HalfIntQExpansionQ out = h;
  out.coeff.clear();
  out.window = h.window / (q * q);
  mpz_class qk1 = 1, q2k1 = 1;
  for (int i = 0; i < h.k - 1; ++i) qk1 *= q;
  for (int i = 0; i < 2 * h.k - 1; ++i) q2k1 *= q;
  int psiq = h.psi.value(q);
  int psiq2 = psiq * psiq;
  for (long xi = 1; xi <= out.window; ++xi) {
    mpq_class b = h.at(q * q * xi);
    int chi = jacobi_symbol(mpz_class(xi), mpz_class(q));
    if (chi != 0 && psiq != 0) b += mpq_class(psiq * chi) * qk1 * h.at(xi);
    if (xi % (q * q) == 0 && psiq2 != 0)
      b += mpq_class(psiq2) * q2k1 * h.at(xi / (q * q));
    if (b != 0) out.coeff[xi] = b;
  }
  return out;
}

HalfIntQExpansionZ halfint_Tq2(const HalfIntQExpansionZ& h, long q,
                               const ZmodCtx& R) {
  check_good_prime(q, h.level4);
  HalfIntQExpansionZ out = h;
  out.coeff.clear();
  out.window = h.window / (q * q);
  int64_t qk1 = R.pow(R.reduce(q), (int64_t)(h.k - 1));
  int64_t q2k1 = R.pow(R.reduce(q), (int64_t)(2 * h.k - 1));
  int psiq = h.psi.value(q);
  for (long xi = 1; xi <= out.window; ++xi) {
    int64_t b = h.at(q * q * xi);
    int chi = jacobi_symbol(mpz_class(xi), mpz_class(q));
    if (chi != 0 && psiq != 0)
      b = R.add(b, R.mul(R.reduce(psiq * chi), R.mul(qk1, h.at(xi))));
    if (xi % (q * q) == 0)
      b = R.add(b, R.mul(R.reduce(psiq * psiq), R.mul(q2k1, h.at(xi / (q * q)))));
    if (b != 0) out.coeff[xi] = b;
  }
  return out;
}

}  // namespace shintani
