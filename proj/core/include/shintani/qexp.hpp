#pragma once

#include <map>
#include <string>

#include "shintani/character.hpp"
#include "shintani/errors.hpp"
#include "shintani/zmod.hpp"

namespace shintani {

/// q-expansion of a half-integral weight form, weight k + 1/2, level 4M.
/// Scalar is mpq_class (exact classical lifts) or int64_t (p-adic lifts,
/// carried mod p^prec inside a ZmodCtx owned by the caller).
template <typename Scalar>
struct HalfIntQExpansion {
  int k = 1;            // weight k + 1/2
  long level4 = 4;      // 4 N p^r
  CharacterData psi;    // square root of the nebentypus, scope-restricted
  std::string character_tag;  // bookkeeping for T_p character shifts
  long window = 0;      // coefficients reliable for 1 <= xi <= window
  std::map<long, Scalar> coeff;

  Scalar at(long xi) const {
    auto it = coeff.find(xi);
    return it == coeff.end() ? Scalar(0) : it->second;
  }
};

using HalfIntQExpansionQ = HalfIntQExpansion<mpq_class>;
using HalfIntQExpansionZ = HalfIntQExpansion<int64_t>;

/// Shimura T_{q^2} on half-integral weight expansions, q prime, q coprime to
/// 4 * level. Output window shrinks to floor(window / q^2).
HalfIntQExpansionQ halfint_Tq2(const HalfIntQExpansionQ& h, long q);
HalfIntQExpansionZ halfint_Tq2(const HalfIntQExpansionZ& h, long q,
                               const ZmodCtx& R);

/// T_p on q-expansions: coefficient reindexing a(xi) -> a(p xi); the
/// character tag picks up the quadratic symbol at p.
template <typename Scalar>
HalfIntQExpansion<Scalar> tp_on_qexp(const HalfIntQExpansion<Scalar>& h,
                                     long p) {
  HalfIntQExpansion<Scalar> out = h;
  out.coeff.clear();
  out.window = h.window / p;
  for (const auto& [xi, a] : h.coeff)
    if (xi % p == 0) out.coeff[xi / p] = a;
  out.character_tag = h.character_tag + "*(p|.)";
  return out;
}

}  // namespace shintani
