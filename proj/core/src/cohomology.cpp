#include "shintani/cohomology.hpp"

namespace shintani {

HeckeContext prepare_hecke(const Mat2& s, const GroupPresentation& G) {
  HeckeContext H;
  H.cd = coset_decomposition(s, G);
  size_t ng = G.generators.size();
  size_t n = H.cd.reps.size();
  H.words.assign(ng, std::vector<Word>(n));
  for (size_t gi = 0; gi < ng; ++gi)
    for (size_t i = 0; i < n; ++i)
      H.words[gi][i] = decompose_word(H.cd.trans[gi][i], G).word;
  return H;
}

InvolutionSplit involution_split(const QMatrix& iota) {
  int n = iota.rows;
  QMatrix sq = qmat_mul(iota, iota);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sq.at(i, j) != (i == j ? 1 : 0))
        throw InternalError("involution_split: iota^2 != identity");
  InvolutionSplit out;
  // kernels of (iota -+ 1)
  QMatrix P = iota, Mi = iota;
  for (int i = 0; i < n; ++i) {
    P.at(i, i) -= 1;   // iota - 1: kernel = plus space
    Mi.at(i, i) += 1;  // iota + 1: kernel = minus space
  }
  out.plus_basis = right_kernel(P);
  out.minus_basis = right_kernel(Mi);
  if (out.plus_basis.cols + out.minus_basis.cols != n)
    throw InternalError("involution_split: eigenspaces do not fill H^1");
  return out;
}

std::vector<mpq_class> eigen_locate(const std::vector<QMatrix>& ops,
                                    const std::vector<mpq_class>& eigenvalues,
                                    const QMatrix& subspace) {
  if (ops.size() != eigenvalues.size())
    throw EigenspaceError("eigen_locate: operator/eigenvalue count mismatch");
  QMatrix cur = subspace;  // columns span the current candidate space
  int n = subspace.rows;
  for (size_t k = 0; k < ops.size(); ++k) {
    if (cur.cols == 0) break;
    // restrict (T - a) to the span: solve (T - a) * cur * x = 0
    QMatrix TA = ops[k];
    for (int i = 0; i < n; ++i) TA.at(i, i) -= eigenvalues[k];
    QMatrix img = qmat_mul(TA, cur);
    QMatrix K = right_kernel(img);
    cur = qmat_mul(cur, K);
  }
  // prune to independent columns
  int rank = qmat_rank(cur);
  if (rank == 0)
    throw EigenspaceError("eigen_locate: eigenspace is empty");
  if (rank >= 2)
    throw EigenspaceError("eigen_locate: eigenspace has dimension " +
                          std::to_string(rank));
  // find one nonzero column
  for (int j = 0; j < cur.cols; ++j) {
    std::vector<mpq_class> v(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      v[i] = cur.at(i, j);
      if (v[i] != 0) nonzero = true;
    }
    if (nonzero) return primitive_scale(v);
  }
  throw EigenspaceError("eigen_locate: eigenspace is empty");
}

}  // namespace shintani
