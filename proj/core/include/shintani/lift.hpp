#pragma once

#include "shintani/bqf.hpp"
#include "shintani/cohomology.hpp"
#include "shintani/eigenform.hpp"
#include "shintani/polyweight.hpp"
#include "shintani/qexp.hpp"

namespace shintani {

/// (A x^2 + B xy + C y^2)^e expanded into the degree-2e monomial basis.
HomPolyQ form_power(const IndefiniteForm& Q, int e);

/// Cocycle value at the automorph of a class, paired against Q^(k-1):
/// exact rational (weight w = 2k, module V_{w-2}(Q)). Independent of the
/// representative cocycle because the automorph fixes the form.
mpq_class period_value(const PolyDualModuleQ& M, const GroupPresentation& G,
                       const Cocycle<PolyDualModuleQ>& phi,
                       const FormClass& cls);

/// Same over Z/p^M.
int64_t period_value(const PolyDualModuleZ& M, const GroupPresentation& G,
                     const Cocycle<PolyDualModuleZ>& phi, const FormClass& cls);

/// Classical half-integral-weight lift: a_xi(h) = sum over classes with
/// invariant xi of eta_psi / t_Q * period. Class lists are computed per xi
/// at the level of the presentation (N p^r from the eigenform data).
HalfIntQExpansionQ classical_lift(const ClassicalEigenform& f,
                                  const PolyDualModuleQ& M,
                                  const GroupPresentation& G,
                                  const Cocycle<PolyDualModuleQ>& phi,
                                  long window);

HalfIntQExpansionZ classical_lift_zm(const ClassicalEigenform& f,
                                     const PolyDualModuleZ& M,
                                     const GroupPresentation& G,
                                     const Cocycle<PolyDualModuleZ>& phi,
                                     long window);

/// Degeneracy maps used for p-stabilization of cocycles: the pair
/// (res phi, phi | pi) on Gamma_0(N p) built from a level-N cocycle,
/// combined into the alpha-stabilized cocycle res(phi) - beta (phi | pi)
/// with beta = eps(p) p^(w-1) / alpha.
template <typename Module>
Cocycle<Module> stabilized_cocycle(const Module& M, const GroupPresentation& GN,
                                   const GroupPresentation& GNp,
                                   const Cocycle<Module>& phi, long p,
                                   const typename Module::Scalar& beta) {
  // res: evaluate phi at the level-Np generators through level-N words
  Cocycle<Module> res;
  for (const auto& g : GNp.generators)
    res.values.push_back(evaluate_cocycle(M, GN, phi, g));
  // (phi | pi)(gamma) = pi^* . phi(pi gamma pi^{-1}), pi = diag(p, 1)
  Mat2 pi = Mat2::from_ints(p, 0, 0, 1);
  Mat2 pistar = pi.star();  // diag(1, p)
  Cocycle<Module> twisted;
  for (const auto& g : GNp.generators) {
    Mat2 conj(g.a, g.b * p, g.c / p, g.d);  // pi g pi^{-1}
    auto val = evaluate_cocycle(M, GN, phi, conj);
    twisted.values.push_back(M.act(pistar, val));
  }
  Cocycle<Module> out;
  for (size_t i = 0; i < res.values.size(); ++i)
    out.values.push_back(
        M.add(res.values[i], M.neg(M.scale(beta, twisted.values[i]))));
  return out;
}

}  // namespace shintani
