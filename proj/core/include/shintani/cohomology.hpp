#pragma once

#include <optional>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/linalg.hpp"
#include "shintani/presentation.hpp"

namespace shintani {

/// Cocycle stored by generator values; evaluation at arbitrary members
/// routes through word decomposition (single code path for classical and
/// measure-valued coefficients). Coefficient modules must have even weight:
/// the presentations are projective and -1 must act trivially.
template <typename Module>
struct Cocycle {
  std::vector<typename Module::Elt> values;
};

/// (matrix, value) pairs compose like (m1, v1)(m2, v2) = (m1 m2, v1 + m1 v2);
/// powering a pair evaluates a cocycle on g^e in O(log e) module operations.
template <typename Module>
struct EvalPair {
  Mat2 m;
  typename Module::Elt v;
};

template <typename Module>
EvalPair<Module> pair_compose(const Module& M, const EvalPair<Module>& x,
                              const EvalPair<Module>& y) {
  return {x.m * y.m, M.add(x.v, M.act(x.m, y.v))};
}

template <typename Module>
EvalPair<Module> pair_inverse(const Module& M, const EvalPair<Module>& x) {
  Mat2 mi = x.m.inverse_unimodular();
  return {mi, M.neg(M.act(mi, x.v))};
}

template <typename Module>
EvalPair<Module> pair_power(const Module& M, EvalPair<Module> base,
                            mpz_class e) {
  if (e < 0) {
    base = pair_inverse(M, base);
    e = -e;
  }
  EvalPair<Module> acc{Mat2::identity(), M.zero()};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = pair_compose(M, acc, base);
    base = pair_compose(M, base, base);
    e >>= 1;
  }
  return acc;
}

template <typename Module>
EvalPair<Module> evaluate_pair(const Module& M, const GroupPresentation& G,
                               const Cocycle<Module>& c, const Word& w) {
  EvalPair<Module> acc{Mat2::identity(), M.zero()};
  for (const auto& atom : w.atoms) {
    EvalPair<Module> ap{Mat2::identity(), M.zero()};
    if (atom.block) {
      ap = evaluate_pair(M, G, c, *atom.block);
      ap = pair_power(M, ap, atom.exp);
    } else {
      size_t gi = (size_t)(atom.gen > 0 ? atom.gen : -atom.gen) - 1;
      EvalPair<Module> base{G.generators[gi], c.values[gi]};
      mpz_class e = atom.gen > 0 ? atom.exp : -atom.exp;
      ap = pair_power(M, base, e);
    }
    acc = pair_compose(M, acc, ap);
  }
  return acc;
}

template <typename Module>
typename Module::Elt evaluate_cocycle_word(const Module& M,
                                           const GroupPresentation& G,
                                           const Cocycle<Module>& c,
                                           const Word& w) {
  return evaluate_pair(M, G, c, w).v;
}

template <typename Module>
typename Module::Elt evaluate_cocycle(const Module& M,
                                      const GroupPresentation& G,
                                      const Cocycle<Module>& c,
                                      const Mat2& gamma) {
  WordDecomposition wd = decompose_word(gamma, G);
  return evaluate_cocycle_word(M, G, c, wd.word);
}

/// Coboundary gamma -> (gamma - 1) m.
template <typename Module>
Cocycle<Module> coboundary(const Module& M, const GroupPresentation& G,
                           const typename Module::Elt& m) {
  Cocycle<Module> c;
  c.values.reserve(G.generators.size());
  for (const auto& g : G.generators)
    c.values.push_back(M.add(M.act(g, m), M.neg(m)));
  return c;
}

template <typename Module>
bool relations_hold(const Module& M, const GroupPresentation& G,
                    const Cocycle<Module>& c,
                    bool (*is_zero)(const Module&, const typename Module::Elt&)) {
  for (const auto& r : G.relations) {
    auto val = evaluate_cocycle_word(M, G, c, Word::from_flat(r));
    if (!is_zero(M, val)) return false;
  }
  return true;
}

/// Hecke operator data: coset decomposition plus cached word decompositions
/// of the t_i(g) for every generator g.
struct HeckeContext {
  CosetDecomposition cd;
  std::vector<std::vector<Word>> words;  // [gen][coset]
};

HeckeContext prepare_hecke(const Mat2& s, const GroupPresentation& G);

/// (c | T(s))(g) = sum_i s_i^* c(t_i(g)).
template <typename Module>
Cocycle<Module> hecke_on_cocycle(const Module& M, const GroupPresentation& G,
                                 const HeckeContext& H,
                                 const Cocycle<Module>& c) {
  Cocycle<Module> out;
  out.values.reserve(G.generators.size());
  for (size_t gi = 0; gi < G.generators.size(); ++gi) {
    auto acc = M.zero();
    for (size_t i = 0; i < H.cd.reps.size(); ++i) {
      auto val = evaluate_cocycle_word(M, G, c, H.words[gi][i]);
      acc = M.add(acc, M.act(H.cd.star[i], val));
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// H^1 over Q
// ---------------------------------------------------------------------------

struct H1SpaceQ {
  const GroupPresentation* G = nullptr;
  int module_dim = 0;     // dim of the coefficient module
  QMatrix zbasis;         // columns: basis of Z^1 in cochain coordinates
  QMatrix bbasis;         // columns: basis of B^1
  QMatrix hreps;          // columns: cocycles representing an H^1 basis
  int dim_z = 0, dim_b = 0, dim_h = 0;
};

/// Cochain coordinates: module coordinates per generator, concatenated.
template <typename Module>
std::vector<mpq_class> cochain_flatten(const Module& M,
                                       const Cocycle<Module>& c) {
  std::vector<mpq_class> out;
  for (const auto& v : c.values) {
    auto f = M.flatten(v);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

template <typename Module>
Cocycle<Module> cochain_unflatten(const Module& M, const GroupPresentation& G,
                                  const std::vector<mpq_class>& v) {
  Cocycle<Module> c;
  int d = M.dim();
  for (size_t gi = 0; gi < G.generators.size(); ++gi) {
    std::vector<mpq_class> part(v.begin() + gi * d, v.begin() + (gi + 1) * d);
    c.values.push_back(M.unflatten(part));
  }
  return c;
}

/// Exact H^1(G, M) over Q for a module with mpq coordinates.
template <typename Module>
H1SpaceQ compute_h1(const Module& M, const GroupPresentation& G);

/// Matrix of a Hecke operator on the H^1 basis of S.
template <typename Module>
QMatrix hecke_matrix(const Module& M, const GroupPresentation& G,
                     const H1SpaceQ& S, const HeckeContext& H);

/// Express a cocycle's class in the H^1 basis of S; throws if it is not a
/// cocycle vector.
template <typename Module>
std::vector<mpq_class> h1_coordinates(const Module& M,
                                      const GroupPresentation& G,
                                      const H1SpaceQ& S,
                                      const Cocycle<Module>& c);

struct InvolutionSplit {
  QMatrix plus_basis;   // columns: H^1-coordinate vectors
  QMatrix minus_basis;
};

/// Eigenspace split of an involution matrix on H^1 (iota^2 = 1 checked).
InvolutionSplit involution_split(const QMatrix& iota);

/// One-dimensional simultaneous eigenspace for the given (operator, value)
/// pairs inside the column span of `subspace` (H^1 coordinates). Returns the
/// H^1-coordinate vector, scaled primitively.
std::vector<mpq_class> eigen_locate(const std::vector<QMatrix>& ops,
                                    const std::vector<mpq_class>& eigenvalues,
                                    const QMatrix& subspace);

// template definitions

template <typename Module>
H1SpaceQ compute_h1(const Module& M, const GroupPresentation& G) {
  H1SpaceQ S;
  S.G = &G;
  int d = M.dim();
  S.module_dim = d;
  int ng = (int)G.generators.size();
  int nc = ng * d;

  // relation constraint matrix: rows = relation coords, cols = cochain coords
  // c(r) for r = l_1 ... l_k expands through the cocycle rule.
  std::vector<QMatrix> rel_rows;
  QMatrix R((int)G.relations.size() * d, nc);
  for (size_t ri = 0; ri < G.relations.size(); ++ri) {
    // accumulate prefix action applied to the contribution of each letter
    // contribution of letter +g at prefix P: P * (unit vector basis of g)
    // letter -g: -P g^{-1} acting on basis of g
    Mat2 prefix = Mat2::identity();
    for (int32_t l : G.relations[ri]) {
      size_t gi = (size_t)(l > 0 ? l : -l) - 1;
      Mat2 act_mat;  // matrix applied to c(g) coordinates
      if (l > 0) {
        act_mat = prefix;
        // column block gi += action_matrix(prefix)
      } else {
        act_mat = prefix * G.generators[gi].inverse_unimodular();
      }
      // module action matrix of act_mat: columns = images of basis vectors
      for (int bj = 0; bj < d; ++bj) {
        std::vector<mpq_class> basis(d, 0);
        basis[bj] = 1;
        auto img = M.flatten(M.act(act_mat, M.unflatten(basis)));
        for (int bi = 0; bi < d; ++bi) {
          mpq_class contrib = img[bi];
          if (l < 0) contrib = -contrib;
          R.at((int)(ri * d) + bi, (int)(gi * d) + bj) += contrib;
        }
      }
      // advance prefix
      Mat2 step = l > 0 ? G.generators[gi] : G.generators[gi].inverse_unimodular();
      prefix = prefix * step;
    }
  }

  S.zbasis = right_kernel(R);  // (nc x dimZ)
  S.dim_z = S.zbasis.cols;

  // B^1: columns delta(m_j)
  QMatrix B(nc, d);
  for (int bj = 0; bj < d; ++bj) {
    std::vector<mpq_class> basis(d, 0);
    basis[bj] = 1;
    auto m = M.unflatten(basis);
    auto cb = coboundary(M, G, m);
    auto flat = cochain_flatten(M, cb);
    for (int i = 0; i < nc; ++i) B.at(i, bj) = flat[i];
  }
  // prune to a basis of the image
  {
    QMatrix Bt(B.cols, B.rows);
    for (int i = 0; i < B.rows; ++i)
      for (int j = 0; j < B.cols; ++j) Bt.at(j, i) = B.at(i, j);
    QMatrix Bt2 = Bt;
    std::vector<int> piv = rref(Bt2);
    // pivot ROWS of Bt (columns of B) hmm: use rref pivots of B^T to select
    // independent columns of B: instead select greedily
    QMatrix cur(nc, 0);
    for (int j = 0; j < B.cols; ++j) {
      QMatrix ext(nc, cur.cols + 1);
      for (int i = 0; i < nc; ++i) {
        for (int k = 0; k < cur.cols; ++k) ext.at(i, k) = cur.at(i, k);
        ext.at(i, cur.cols) = B.at(i, j);
      }
      if (qmat_rank(ext) > cur.cols) cur = ext;
    }
    S.bbasis = cur;
  }
  S.dim_b = S.bbasis.cols;

  // H-representatives: extend B-basis to a Z-basis
  QMatrix ext = S.bbasis;
  QMatrix hsel(nc, 0);
  for (int j = 0; j < S.zbasis.cols; ++j) {
    QMatrix trial(nc, ext.cols + 1);
    for (int i = 0; i < nc; ++i) {
      for (int k = 0; k < ext.cols; ++k) trial.at(i, k) = ext.at(i, k);
      trial.at(i, ext.cols) = S.zbasis.at(i, j);
    }
    if (qmat_rank(trial) > ext.cols) {
      ext = trial;
      QMatrix h2(nc, hsel.cols + 1);
      for (int i = 0; i < nc; ++i) {
        for (int k = 0; k < hsel.cols; ++k) h2.at(i, k) = hsel.at(i, k);
        h2.at(i, hsel.cols) = S.zbasis.at(i, j);
      }
      hsel = h2;
    }
  }
  S.hreps = hsel;
  S.dim_h = S.hreps.cols;
  if (S.dim_h != S.dim_z - S.dim_b)
    throw InternalError("compute_h1: dimension bookkeeping failed");
  return S;
}

template <typename Module>
std::vector<mpq_class> h1_coordinates(const Module& M,
                                      const GroupPresentation& G,
                                      const H1SpaceQ& S,
                                      const Cocycle<Module>& c) {
  auto v = cochain_flatten(M, c);
  int nc = (int)v.size();
  // solve [bbasis | hreps] x = v; H-coordinates are the tail of x
  QMatrix A(nc, S.dim_b + S.dim_h);
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < S.dim_b; ++j) A.at(i, j) = S.bbasis.at(i, j);
    for (int j = 0; j < S.dim_h; ++j) A.at(i, S.dim_b + j) = S.hreps.at(i, j);
  }
  std::vector<mpq_class> x;
  if (!qmat_solve(A, v, &x))
    throw InternalError("h1_coordinates: vector is not in Z^1");
  return std::vector<mpq_class>(x.begin() + S.dim_b, x.end());
}

template <typename Module>
QMatrix hecke_matrix(const Module& M, const GroupPresentation& G,
                     const H1SpaceQ& S, const HeckeContext& H) {
  QMatrix T(S.dim_h, S.dim_h);
  for (int j = 0; j < S.dim_h; ++j) {
    std::vector<mpq_class> col(S.hreps.rows);
    for (int i = 0; i < S.hreps.rows; ++i) col[i] = S.hreps.at(i, j);
    auto c = cochain_unflatten(M, G, col);
    auto tc = hecke_on_cocycle(M, G, H, c);
    auto coords = h1_coordinates(M, G, S, tc);
    for (int i = 0; i < S.dim_h; ++i) T.at(i, j) = coords[i];
  }
  return T;
}

}  // namespace shintani
