#pragma once

#include <vector>

#include "shintani/linalg.hpp"
#include "shintani/mat2.hpp"
#include "shintani/zmod.hpp"

namespace shintani {

/// Homogeneous polynomial of degree n in (x, y); coefficients of
/// x^i y^(n-i) at index i.
template <typename Scalar>
struct HomPoly {
  int degree = 0;
  std::vector<Scalar> coeff;  // size degree+1

  HomPoly() : coeff(1, Scalar(0)) {}
  explicit HomPoly(int n) : degree(n), coeff((size_t)n + 1, Scalar(0)) {}
};

using HomPolyQ = HomPoly<mpq_class>;

/// P | gamma (x, y) := P(a x + b y, c x + d y), expanded exactly.
HomPolyQ act_poly(const Mat2& g, const HomPolyQ& P);

/// Dual vector of V_n: values on the monomial basis x^i y^(n-i).
/// Pairing with HomPoly is the dot product of coefficient vectors.
template <typename Scalar>
struct PolyDual {
  int degree = 0;
  std::vector<Scalar> values;

  PolyDual() : values(1, Scalar(0)) {}
  explicit PolyDual(int n) : degree(n), values((size_t)n + 1, Scalar(0)) {}
};

using PolyDualQ = PolyDual<mpq_class>;

/// Matrix of P -> P|gamma on the monomial basis: column j holds the
/// coefficients of (monomial j)|gamma. Exact integer entries.
std::vector<std::vector<mpz_class>> poly_action_matrix(const Mat2& g, int n);

/// Left action (gamma . phi)(P) = phi(P|gamma).
PolyDualQ act_dual(const Mat2& g, const PolyDualQ& phi);

mpq_class pair_dual(const PolyDualQ& phi, const HomPolyQ& P);

/// Coefficient module V_n(Q) for the cohomology machinery.
struct PolyDualModuleQ {
  using Elt = PolyDualQ;
  using Scalar = mpq_class;
  int n;

  explicit PolyDualModuleQ(int degree) : n(degree) {
    if (degree % 2 != 0)
      throw WeightError("PolyDualModuleQ: odd degree out of scope");
  }
  int dim() const { return n + 1; }
  Elt zero() const { return PolyDualQ(n); }
  Elt add(const Elt& x, const Elt& y) const;
  Elt neg(const Elt& x) const;
  Elt scale(const Scalar& s, const Elt& x) const;
  Elt act(const Mat2& g, const Elt& x) const { return act_dual(g, x); }
  std::vector<Scalar> flatten(const Elt& x) const { return x.values; }
  Elt unflatten(const std::vector<Scalar>& v) const;
};

/// Coefficient module V_n(Z/p^M).
struct PolyDualModuleZ {
  using Elt = PolyDual<int64_t>;
  using Scalar = int64_t;
  int n;
  ZmodCtx R;

  PolyDualModuleZ(int degree, const ZmodCtx& ring) : n(degree), R(ring) {
    if (degree % 2 != 0)
      throw WeightError("PolyDualModuleZ: odd degree out of scope");
  }
  int dim() const { return n + 1; }
  Elt zero() const { return Elt(n); }
  Elt add(const Elt& x, const Elt& y) const;
  Elt neg(const Elt& x) const;
  Elt scale(const Scalar& s, const Elt& x) const;
  Elt act(const Mat2& g, const Elt& x) const;
  std::vector<Scalar> flatten(const Elt& x) const { return x.values; }
  Elt unflatten(const std::vector<Scalar>& v) const;
};

}  // namespace shintani
