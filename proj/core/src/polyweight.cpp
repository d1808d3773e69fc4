#include "shintani/polyweight.hpp"

#include "shintani/errors.hpp"

namespace shintani {

std::vector<std::vector<mpz_class>> poly_action_matrix(const Mat2& g, int n) {
  // column j: expansion of (a x + b y)^j (c x + d y)^(n-j)
  std::vector<std::vector<mpz_class>> M((size_t)n + 1,
                                        std::vector<mpz_class>((size_t)n + 1, 0));
  // binomials
  std::vector<std::vector<mpz_class>> binom((size_t)n + 1);
  for (int i = 0; i <= n; ++i) {
    binom[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::vector<mpz_class> apow(n + 1, 1), bpow(n + 1, 1), cpow(n + 1, 1),
      dpow(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    apow[i] = apow[i - 1] * g.a;
    bpow[i] = bpow[i - 1] * g.b;
    cpow[i] = cpow[i - 1] * g.c;
    dpow[i] = dpow[i - 1] * g.d;
  }
  for (int j = 0; j <= n; ++j) {
    int k = n - j;
    // (ax+by)^j = sum_s C(j,s) a^s b^(j-s) x^s y^(j-s)
    // (cx+dy)^k = sum_t C(k,t) c^t d^(k-t) x^t y^(k-t)
    for (int s = 0; s <= j; ++s)
      for (int t = 0; t <= k; ++t) {
        mpz_class c = binom[j][s] * apow[s] * bpow[j - s] * binom[k][t] *
                      cpow[t] * dpow[k - t];
        M[(size_t)(s + t)][(size_t)j] += c;
      }
  }
  return M;
}

HomPolyQ act_poly(const Mat2& g, const HomPolyQ& P) {
  auto M = poly_action_matrix(g, P.degree);
  HomPolyQ out(P.degree);
  for (int i = 0; i <= P.degree; ++i)
    for (int j = 0; j <= P.degree; ++j)
      if (P.coeff[j] != 0 && M[i][j] != 0) out.coeff[i] += P.coeff[j] * M[i][j];
  return out;
}

PolyDualQ act_dual(const Mat2& g, const PolyDualQ& phi) {
  // (gamma phi)(m_j) = phi(m_j | gamma) = sum_i M[i][j] phi(m_i)
  auto M = poly_action_matrix(g, phi.degree);
  PolyDualQ out(phi.degree);
  for (int j = 0; j <= phi.degree; ++j) {
    mpq_class acc = 0;
    for (int i = 0; i <= phi.degree; ++i)
      if (M[i][j] != 0 && phi.values[i] != 0) acc += phi.values[i] * M[i][j];
    out.values[j] = acc;
  }
  return out;
}

mpq_class pair_dual(const PolyDualQ& phi, const HomPolyQ& P) {
  if (phi.degree != P.degree) throw WeightError("pair_dual: degree mismatch");
  mpq_class acc = 0;
  for (int i = 0; i <= phi.degree; ++i) acc += phi.values[i] * P.coeff[i];
  return acc;
}

PolyDualQ PolyDualModuleQ::add(const Elt& x, const Elt& y) const {
  Elt r(n);
  for (int i = 0; i <= n; ++i) r.values[i] = x.values[i] + y.values[i];
  return r;
}
PolyDualQ PolyDualModuleQ::neg(const Elt& x) const {
  Elt r(n);
  for (int i = 0; i <= n; ++i) r.values[i] = -x.values[i];
  return r;
}
PolyDualQ PolyDualModuleQ::scale(const Scalar& s, const Elt& x) const {
  Elt r(n);
  for (int i = 0; i <= n; ++i) r.values[i] = s * x.values[i];
  return r;
}
PolyDualQ PolyDualModuleQ::unflatten(const std::vector<Scalar>& v) const {
  Elt r(n);
  r.values = v;
  return r;
}

PolyDualModuleZ::Elt PolyDualModuleZ::add(const Elt& x, const Elt& y) const {
  Elt r(n);
  for (int i = 0; i <= n; ++i) r.values[i] = R.add(x.values[i], y.values[i]);
  return r;
}
PolyDualModuleZ::Elt PolyDualModuleZ::neg(const Elt& x) const {
  Elt r(n);
  for (int i = 0; i <= n; ++i) r.values[i] = R.reduce(-x.values[i]);
  return r;
}
PolyDualModuleZ::Elt PolyDualModuleZ::scale(const Scalar& s, const Elt& x) const {
  Elt r(n);
  for (int i = 0; i <= n; ++i) r.values[i] = R.mul(s, x.values[i]);
  return r;
}
PolyDualModuleZ::Elt PolyDualModuleZ::act(const Mat2& g, const Elt& x) const {
  auto M = poly_action_matrix(g, n);
  Elt out(n);
  for (int j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (int i = 0; i <= n; ++i)
      acc += (__int128)R.reduce(M[i][j]) * x.values[i] % R.q;
    out.values[j] = R.reduce((int64_t)(acc % R.q));
  }
  return out;
}
PolyDualModuleZ::Elt PolyDualModuleZ::unflatten(const std::vector<Scalar>& v) const {
  Elt r(n);
  r.values = v;
  return r;
}

}  // namespace shintani
