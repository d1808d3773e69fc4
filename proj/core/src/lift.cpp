#include "shintani/lift.hpp"

namespace shintani {

HomPolyQ form_power(const IndefiniteForm& Q, int e) {
  // multiply out (A x^2 + B xy + C y^2)^e
  std::vector<mpz_class> cur{1};  // coefficients of x^(2j) ... homogeneous
  // represent a homogeneous poly of degree d by coeffs of x^i y^(d-i)
  std::vector<mpz_class> base{Q.A, Q.B, Q.C};  // degree 2: x^2, xy, y^2
  std::vector<mpz_class> acc{1};               // degree 0
  for (int i = 0; i < e; ++i) {
    std::vector<mpz_class> next(acc.size() + 2, 0);
    for (size_t s = 0; s < acc.size(); ++s) {
      if (acc[s] == 0) continue;
      for (size_t t = 0; t < 3; ++t) next[s + t] += acc[s] * base[t];
    }
    acc = std::move(next);
  }
  // acc[j] is the coefficient of x^(2e - j) y^j; monomial basis index is the
  // x-exponent
  HomPolyQ P(2 * e);
  for (size_t j = 0; j < acc.size(); ++j)
    P.coeff[2 * e - j] = mpq_class(acc[j]);
  return P;
}

mpq_class period_value(const PolyDualModuleQ& M, const GroupPresentation& G,
                       const Cocycle<PolyDualModuleQ>& phi,
                       const FormClass& cls) {
  if (M.n % 2 != 0) throw WeightError("period_value: odd module degree");
  int e = M.n / 2;
  PolyDualQ val;
  if (cls.automorph_word) {
    val = evaluate_cocycle_word(M, G, phi, *cls.automorph_word);
  } else {
    val = evaluate_cocycle(M, G, phi, cls.automorph);
  }
  return pair_dual(val, form_power(cls.rep, e));
}

int64_t period_value(const PolyDualModuleZ& M, const GroupPresentation& G,
                     const Cocycle<PolyDualModuleZ>& phi, const FormClass& cls) {
  if (M.n % 2 != 0) throw WeightError("period_value: odd module degree");
  int e = M.n / 2;
  PolyDual<int64_t> val;
  if (cls.automorph_word) {
    val = evaluate_cocycle_word(M, G, phi, *cls.automorph_word);
  } else {
    val = evaluate_cocycle(M, G, phi, cls.automorph);
  }
  HomPolyQ P = form_power(cls.rep, e);
  __int128 acc = 0;
  for (int i = 0; i <= M.n; ++i) {
    mpz_class c = P.coeff[i].get_num();  // integral by construction
    acc += (__int128)M.R.reduce(c) * val.values[i] % M.R.q;
  }
  return M.R.reduce((int64_t)(acc % M.R.q));
}

namespace {

template <typename QExp, typename Module, typename AddInto>
QExp lift_impl(const ClassicalEigenform& f, const Module& M, long window,
               AddInto add_into) {
  if (M.n != f.weight - 2)
    throw WeightError("classical_lift: module degree does not match weight");
  QExp h;
  h.k = f.k();
  h.level4 = 4 * f.level();
  h.psi = f.psi;
  h.character_tag = "psi*(-1/.)^k";
  h.window = window;
  for (long xi = 1; xi <= window; ++xi) {
    mpz_class L(f.level());
    mpz_class d = 4 * L * L * xi;
    if (mpz_perfect_square_p(d.get_mpz_t())) continue;  // split, no classes
    auto classes = enumerate_classes(f.N, f.p, f.r, xi);
    for (const auto& cls : classes) {
      mpq_class e = eta(cls.rep, f.psi);
      if (e == 0) continue;
      add_into(h, xi, e, cls);
    }
  }
  return h;
}

}  // namespace

HalfIntQExpansionQ classical_lift(const ClassicalEigenform& f,
                                  const PolyDualModuleQ& M,
                                  const GroupPresentation& G,
                                  const Cocycle<PolyDualModuleQ>& phi,
                                  long window) {
  return lift_impl<HalfIntQExpansionQ>(
      f, M, window,
      [&](HalfIntQExpansionQ& h, long xi, const mpq_class& e,
          const FormClass& cls) {
        mpq_class term = e / cls.torsion * period_value(M, G, phi, cls);
        if (term != 0) {
          auto it = h.coeff.find(xi);
          if (it == h.coeff.end())
            h.coeff[xi] = term;
          else {
            it->second += term;
            if (it->second == 0) h.coeff.erase(it);
          }
        }
      });
}

HalfIntQExpansionZ classical_lift_zm(const ClassicalEigenform& f,
                                     const PolyDualModuleZ& M,
                                     const GroupPresentation& G,
                                     const Cocycle<PolyDualModuleZ>& phi,
                                     long window) {
  const ZmodCtx& R = M.R;
  // 1 / t_Q = 1/2, a unit for odd p
  int64_t half = R.inv(R.reduce(2));
  return lift_impl<HalfIntQExpansionZ>(
      f, M, window,
      [&](HalfIntQExpansionZ& h, long xi, const mpq_class& e,
          const FormClass& cls) {
        int64_t ev = R.reduce(mpz_class(e.get_num()));
        int64_t term =
            R.mul(R.mul(ev, half), period_value(M, G, phi, cls));
        if (term != 0) h.coeff[xi] = R.add(h.at(xi), term);
      });
}

}  // namespace shintani
