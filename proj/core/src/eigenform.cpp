#include "shintani/eigenform.hpp"

#include <algorithm>

namespace shintani {

void ClassicalEigenform::check_weil_bounds() const {
  long L = level();
  for (const auto& [ell, aell] : a) {
    if (L % ell == 0) continue;
    // |a_ell|^2 <= 4 ell^(w-1)
    mpq_class sq = aell * aell;
    mpz_class bound = 4;
    for (int i = 0; i < weight - 1; ++i) bound *= ell;
    if (sq > bound)
      throw EigenspaceError("eigenvalue at " + std::to_string(ell) +
                            " violates the Weil bound");
  }
}

Stabilization p_stabilize(const ClassicalEigenform& f, long p,
                          const ZmodCtx& R) {
  auto it = f.a.find(p);
  if (it == f.a.end())
    throw Error("p_stabilize: a_p missing from the eigenvalue map");
  if (it->second.get_den() != 1)
    throw Error("p_stabilize: a_p is not integral");
  mpz_class ap = it->second.get_num();
  if (ap % p == 0) throw OrdinarityError("p_stabilize: a_p == 0 mod p");
  // eps(p) p^(w-1); the nebentypus eps = psi^2 is trivial on units in scope
  if (f.psi.value(p) == 0)
    throw Error("p_stabilize: character modulus shares a factor with p");
  mpz_class n = 1;
  for (int i = 0; i < f.weight - 1; ++i) n *= p;
  Stabilization out;
  out.alpha = unit_root_of_quadratic(R, ap, n);
  out.f = f;
  out.f.p = p;
  out.f.r = 1;
  out.f.ordinary_at_p = true;
  return out;
}

EigensystemSplit split_eigensystems(
    const std::vector<std::pair<long, QMatrix>>& ops, const QMatrix& subspace,
    int weight) {
  EigensystemSplit out;
  struct Item {
    QMatrix basis;
    std::vector<std::pair<long, mpq_class>> apairs;
    size_t next_op;
  };
  std::vector<Item> stack{{subspace, {}, 0}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    int dim = qmat_rank(it.basis);
    if (dim == 0) continue;
    if (it.next_op == ops.size()) {
      if (dim == 1) {
        RationalEigensystem rs;
        rs.apairs = it.apairs;
        for (int j = 0; j < it.basis.cols; ++j) {
          std::vector<mpq_class> v(it.basis.rows);
          bool nz = false;
          for (int i = 0; i < it.basis.rows; ++i) {
            v[i] = it.basis.at(i, j);
            if (v[i] != 0) nz = true;
          }
          if (nz) {
            rs.coords = primitive_scale(v);
            break;
          }
        }
        // Eisenstein detection: a_ell = 1 + ell^(w-1) for all recorded ell
        rs.eisenstein = !rs.apairs.empty();
        for (auto& [ell, aell] : rs.apairs) {
          mpz_class e(1);
          for (int i = 0; i < weight - 1; ++i) e *= ell;
          if (aell != 1 + e) rs.eisenstein = false;
        }
        out.rational.push_back(std::move(rs));
      }
      // higher-dimensional fully-unsplit pieces with no operators left:
      // recorded as irrational without a witness polynomial
      else {
        IrrationalBlock ib;
        ib.basis = it.basis;
        out.irrational.push_back(std::move(ib));
      }
      continue;
    }
    const auto& [ell, T] = ops[it.next_op];
    // restrict T to the span: T * basis = basis * Tr  (solve column-wise)
    int n = it.basis.rows;
    QMatrix img = qmat_mul(T, it.basis);
    QMatrix Tr(it.basis.cols, it.basis.cols);
    for (int j = 0; j < it.basis.cols; ++j) {
      std::vector<mpq_class> b(n);
      for (int i = 0; i < n; ++i) b[i] = img.at(i, j);
      std::vector<mpq_class> x;
      if (!qmat_solve(it.basis, b, &x))
        throw InternalError("split_eigensystems: operator does not preserve span");
      for (int i = 0; i < it.basis.cols; ++i) Tr.at(i, j) = x[i];
    }
    auto cp = charpoly(Tr);
    auto roots = rational_roots(cp);
    // multiply out the rational-root factors to detect a fully-split poly
    int root_mult = 0;
    for (auto& [r, m] : roots) root_mult += m;
    for (auto& [r, m] : roots) {
      // kernel of (Tr - r)^m
      QMatrix P = Tr;
      for (int i = 0; i < Tr.rows; ++i) P.at(i, i) -= r;
      QMatrix Pk = P;
      for (int e = 1; e < m; ++e) Pk = qmat_mul(Pk, P);
      QMatrix K = right_kernel(Pk);
      Item child;
      child.basis = qmat_mul(it.basis, K);
      child.apairs = it.apairs;
      child.apairs.push_back({ell, r});
      child.next_op = it.next_op + 1;
      stack.push_back(std::move(child));
    }
    if (root_mult < Tr.rows) {
      // non-rational part: kernel of the product of irrational factors =
      // complement of the rational generalized eigenspaces
      // compute q(x) = charpoly / prod (x - r)^m and take kernel of q(Tr)
      std::vector<mpq_class> q = cp;
      for (auto& [r, m] : roots)
        for (int e = 0; e < m; ++e) {
          // synthetic division by (x - r)
          std::vector<mpq_class> quo(q.size() - 1);
          mpq_class carry = 0;
          for (size_t i = 0; i + 1 < q.size(); ++i) {
            carry = q[i] + carry * r;
            quo[i] = carry;
          }
          q = quo;
        }
      // q(Tr)
      QMatrix QT(Tr.rows, Tr.cols);
      for (int i = 0; i < Tr.rows; ++i) QT.at(i, i) = q[0];
      for (size_t ci = 1; ci < q.size(); ++ci) {
        QT = qmat_mul(QT, Tr);
        for (int i = 0; i < Tr.rows; ++i) QT.at(i, i) += q[ci];
      }
      QMatrix K = right_kernel(QT);
      IrrationalBlock ib;
      ib.ell = ell;
      ib.basis = qmat_mul(it.basis, K);
      // minimal-ish polynomial witness: q itself
      ib.charpoly = q;
      out.irrational.push_back(std::move(ib));
    }
  }
  return out;
}

std::vector<std::pair<int64_t, int>> padic_roots(
    const std::vector<mpz_class>& poly, const ZmodCtx& R) {
  // digit search with branching; candidates at level k are residues mod p^k
  // with f == 0 mod p^k
  auto eval_mod = [&](const mpz_class& x, const mpz_class& mod) {
    mpz_class v = 0;
    for (const auto& c : poly) v = (v * x + c) % mod;
    if (v < 0) v += mod;
    return v;
  };
  std::vector<mpz_class> cands{0};
  mpz_class pk(1);
  for (int k = 0; k < R.prec; ++k) {
    mpz_class pk1 = pk * R.p;
    std::vector<mpz_class> next;
    for (const auto& c : cands)
      for (long t = 0; t < R.p; ++t) {
        mpz_class x = c + t * pk;
        if (eval_mod(x, pk1) == 0) next.push_back(x);
      }
    cands = std::move(next);
    pk = pk1;
    if (cands.size() > 400)
      throw InternalError("padic_roots: candidate explosion");
  }
  // cluster candidates: each true root is approximated by a residue class;
  // certified precision of a representative = largest s with a unique
  // class mod p^s among the survivors extending it
  std::vector<std::pair<int64_t, int>> out;
  std::sort(cands.begin(), cands.end());
  std::vector<bool> taken(cands.size(), false);
  for (size_t i = 0; i < cands.size(); ++i) {
    if (taken[i]) continue;
    // find the deepest precision at which cands[i] is isolated
    int s = R.prec;
    std::vector<size_t> cluster{i};
    for (size_t j = 0; j < cands.size(); ++j) {
      if (j == i || taken[j]) continue;
      mpz_class diff = cands[j] - cands[i];
      int v = 0;
      while (diff % R.p == 0 && v < R.prec) {
        diff /= R.p;
        ++v;
      }
      if (v > 0) {
        cluster.push_back(j);
        s = std::min(s, v);
      }
    }
    for (size_t j : cluster) taken[j] = true;
    out.push_back({R.reduce(cands[i]), s});
  }
  return out;
}

}  // namespace shintani
