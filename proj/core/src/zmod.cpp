#include "shintani/zmod.hpp"

namespace shintani {

ZmodCtx::ZmodCtx(int64_t p_, int prec_) : p(p_), prec(prec_) {
  if (p < 2) throw ConfigError("ZmodCtx: p must be >= 2");
  if (prec < 1) throw ConfigError("ZmodCtx: precision must be >= 1");
  ppow.assign(prec + 1, 1);
  for (int i = 1; i <= prec; ++i) {
    if (ppow[i - 1] > (int64_t(1) << 31) / p)
      throw ConfigError("ZmodCtx: p^M exceeds 2^31");
    ppow[i] = ppow[i - 1] * p;
  }
  q = ppow[prec];
}

int64_t ZmodCtx::pow(int64_t a, int64_t e) const {
  a = reduce(a);
  int64_t r = 1 % q;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int64_t ZmodCtx::pow(int64_t a, const mpz_class& e) const {
  mpz_class r;
  mpz_class base(a), mod(q);
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r.get_si();
}

int ZmodCtx::val(int64_t x) const {
  x = reduce(x);
  if (x == 0) return prec;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int64_t ZmodCtx::inv(int64_t a) const {
  a = reduce(a);
  if (a % p == 0) throw UnitError("inv: not a unit mod p");
  mpz_class r, base(a), mod(q);
  if (!mpz_invert(r.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()))
    throw UnitError("inv: no inverse");
  return r.get_si();
}

int64_t ZmodCtx::divexact(int64_t a, int64_t b, int* result_prec) const {
  a = reduce(a);
  b = reduce(b);
  if (b == 0) throw UnitError("divexact: division by zero");
  int vb = val(b);
  if (val(a) < vb) throw UnitError("divexact: quotient not integral");
  int64_t bu = b / ppow[vb];
  int64_t r = mul(a / ppow[vb], inv(bu));
  if (result_prec) *result_prec = prec - vb;
  // reduce into the coarser ring
  r %= ppow[prec - vb];
  return r;
}

ZmodMatrix zmod_mul(const ZmodCtx& R, const ZmodMatrix& A, const ZmodMatrix& B) {
  ZmodMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      int64_t aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        __int128 t = (__int128)aik * B.at(k, j) + C.at(i, j);
        C.at(i, j) = (int64_t)(t % R.q);
      }
    }
  for (auto& x : C.a) x = R.reduce(x);
  return C;
}

std::vector<int64_t> zmod_apply(const ZmodCtx& R, const ZmodMatrix& A,
                                const std::vector<int64_t>& v) {
  std::vector<int64_t> out(A.rows, 0);
  for (int i = 0; i < A.rows; ++i) {
    __int128 acc = 0;
    const int64_t* row = &A.a[(size_t)i * A.cols];
    for (int j = 0; j < A.cols; ++j) {
      acc += (__int128)row[j] * v[j];
      if ((j & 63) == 63) acc %= R.q;
    }
    out[i] = R.reduce((int64_t)(acc % R.q));
  }
  return out;
}

HowellForm howell(const ZmodCtx& R, const ZmodMatrix& A) {
  int n = A.cols;
  std::vector<std::vector<int64_t>> work;
  work.reserve(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    std::vector<int64_t> row(n);
    for (int j = 0; j < n; ++j) row[j] = R.reduce(A.at(i, j));
    work.push_back(std::move(row));
  }

  std::vector<std::vector<int64_t>> basis;
  std::vector<int> pivcol, pivval;

  auto reduce_row = [&](std::vector<int64_t>& r) {
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      int c = pivcol[bi];
      if (r[c] == 0) continue;
      int v = pivval[bi];
      if (R.val(r[c]) < v) continue;  // cannot clear fully; handled by caller
      int64_t qo = R.reduce(r[c] / R.ppow[v]);
      if (qo == 0) continue;
      for (int j = c; j < n; ++j)
        r[j] = R.sub(r[j], R.mul(qo, basis[bi][j]));
    }
  };

  std::vector<std::vector<int64_t>> queue = std::move(work);
  while (!queue.empty()) {
    std::vector<int64_t> r = std::move(queue.back());
    queue.pop_back();
    // eliminate against existing pivots where possible
    bool progress = true;
    while (progress) {
      progress = false;
      int c = -1;
      for (int j = 0; j < n; ++j)
        if (r[j] != 0) {
          c = j;
          break;
        }
      if (c < 0) break;
      // find existing pivot in this column
      int found = -1;
      for (size_t bi = 0; bi < basis.size(); ++bi)
        if (pivcol[bi] == c) {
          found = (int)bi;
          break;
        }
      if (found < 0) break;
      int v = pivval[found];
      int rv = R.val(r[c]);
      if (rv >= v) {
        int64_t qo = R.reduce(r[c] / R.ppow[v]);
        for (int j = c; j < n; ++j)
          r[j] = R.sub(r[j], R.mul(qo, basis[found][j]));
        progress = true;
      } else {
        // new row has a better pivot: swap it in, re-queue the old basis row
        std::swap(r, basis[found]);
        std::swap(v, pivval[found]);
        // normalize new pivot below
        int64_t pv = basis[found][c];
        int nv = R.val(pv);
        int64_t u = pv / R.ppow[nv];
        int64_t uinv = R.inv(u);
        for (int j = c; j < n; ++j)
          basis[found][j] = R.mul(basis[found][j], uinv);
        pivval[found] = nv;
        if (nv > 0) {
          // saturation row p^(M-nv) * basis row
          std::vector<int64_t> sat(n);
          for (int j = 0; j < n; ++j)
            sat[j] = R.mul(basis[found][j], R.ppow[R.prec - nv]);
          queue.push_back(std::move(sat));
        }
        queue.push_back(std::move(r));
        r.clear();
        break;
      }
    }
    if (r.empty()) continue;
    int c = -1;
    for (int j = 0; j < n; ++j)
      if (r[j] != 0) {
        c = j;
        break;
      }
    if (c < 0) continue;
    int v = R.val(r[c]);
    int64_t u = r[c] / R.ppow[v];
    int64_t uinv = R.inv(u);
    for (int j = c; j < n; ++j) r[j] = R.mul(r[j], uinv);
    basis.push_back(r);
    pivcol.push_back(c);
    pivval.push_back(v);
    if (v > 0) {
      std::vector<int64_t> sat(n);
      for (int j = 0; j < n; ++j) sat[j] = R.mul(r[j], R.ppow[R.prec - v]);
      queue.push_back(std::move(sat));
    }
  }

  // sort rows by pivot column, then back-reduce
  std::vector<int> order(basis.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return pivcol[x] < pivcol[y]; });
  HowellForm HF;
  HF.H = ZmodMatrix((int)basis.size(), n);
  for (size_t i = 0; i < order.size(); ++i) {
    for (int j = 0; j < n; ++j) HF.H.at((int)i, j) = basis[order[i]][j];
    HF.pivot_col.push_back(pivcol[order[i]]);
    HF.pivot_val.push_back(pivval[order[i]]);
  }
  // back-reduction for canonicity (entries above pivots reduced mod p^(M-v))
  for (int i = (int)HF.pivot_col.size() - 1; i >= 0; --i) {
    int c = HF.pivot_col[i];
    int v = HF.pivot_val[i];
    for (int r2 = 0; r2 < i; ++r2) {
      int64_t e = HF.H.at(r2, c);
      if (e == 0) continue;
      if (R.val(e) < v) continue;
      int64_t qo = R.reduce(e / R.ppow[v]);
      for (int j = c; j < n; ++j)
        HF.H.at(r2, j) = R.sub(HF.H.at(r2, j), R.mul(qo, HF.H.at(i, j)));
    }
  }
  return HF;
}

bool in_row_span(const ZmodCtx& R, const HowellForm& HF,
                 const std::vector<int64_t>& b) {
  std::vector<int64_t> r(b.size());
  for (size_t j = 0; j < b.size(); ++j) r[j] = R.reduce(b[j]);
  int n = (int)b.size();
  for (size_t i = 0; i < HF.pivot_col.size(); ++i) {
    int c = HF.pivot_col[i];
    if (r[c] == 0) continue;
    int v = HF.pivot_val[i];
    if (R.val(r[c]) < v) return false;
    int64_t qo = R.reduce(r[c] / R.ppow[v]);
    for (int j = c; j < n; ++j)
      r[j] = R.sub(r[j], R.mul(qo, HF.H.at((int)i, j)));
  }
  for (int j = 0; j < n; ++j)
    if (r[j] != 0) return false;
  return true;
}

ZmodMatrix zmod_left_kernel(const ZmodCtx& R, const ZmodMatrix& A) {
  // Howell of [A | I]; kernel rows are those with zero A-part.
  int m = A.rows, n = A.cols;
  ZmodMatrix aug(m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = R.reduce(A.at(i, j));
    aug.at(i, n + i) = 1;
  }
  HowellForm HF = howell(R, aug);
  std::vector<std::vector<int64_t>> ker;
  for (int i = 0; i < HF.H.rows; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j)
      if (HF.H.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) {
      std::vector<int64_t> row(m);
      for (int j = 0; j < m; ++j) row[j] = HF.H.at(i, n + j);
      ker.push_back(std::move(row));
    }
  }
  ZmodMatrix K((int)ker.size(), m);
  for (size_t i = 0; i < ker.size(); ++i)
    for (int j = 0; j < m; ++j) K.at((int)i, j) = ker[i][j];
  return K;
}

bool zmod_solve(const ZmodCtx& R, const ZmodMatrix& A,
                const std::vector<int64_t>& b, std::vector<int64_t>* x) {
  // x with A x = b: work with transpose in row convention: x^T A^T = b^T.
  int m = A.rows, n = A.cols;
  ZmodMatrix At(n, m + n);  // [A^T | I]
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) At.at(i, j) = R.reduce(A.at(j, i));
    At.at(i, m + i) = 1;
  }
  HowellForm HF = howell(R, At);
  std::vector<int64_t> r(m + n, 0);
  for (int j = 0; j < m; ++j) r[j] = R.reduce(b[j]);
  for (size_t i = 0; i < HF.pivot_col.size(); ++i) {
    int c = HF.pivot_col[i];
    if (c >= m) break;  // remaining rows have zero A-part
    if (r[c] == 0) continue;
    int v = HF.pivot_val[i];
    if (R.val(r[c]) < v) return false;
    int64_t qo = R.reduce(r[c] / R.ppow[v]);
    for (int j = c; j < m + n; ++j)
      r[j] = R.sub(r[j], R.mul(qo, HF.H.at((int)i, j)));
  }
  for (int j = 0; j < m; ++j)
    if (r[j] != 0) return false;
  x->assign(n, 0);
  for (int j = 0; j < n; ++j) (*x)[j] = R.reduce(-r[m + j]);
  return true;
}

int64_t unit_root_of_quadratic(const ZmodCtx& R, const mpz_class& t,
                               const mpz_class& n) {
  int64_t tr = R.reduce(t);
  int64_t nr = R.reduce(n);
  if (tr % R.p == 0)
    throw OrdinarityError("unit_root_of_quadratic: a_p is not a p-adic unit");
  // Unit root == t mod p; Newton iteration, f'(x) = 2x - t is a unit there.
  int64_t x = tr % R.p;
  for (int it = 0; it < 2 * R.prec + 4; ++it) {
    int64_t fx = R.add(R.sub(R.mul(x, x), R.mul(tr, x)), nr);
    if (fx == 0) break;
    int64_t dfx = R.sub(R.mul(2, x), tr);
    x = R.sub(x, R.mul(fx, R.inv(dfx)));
  }
  int64_t fx = R.add(R.sub(R.mul(x, x), R.mul(tr, x)), nr);
  if (fx != 0) throw InternalError("unit_root_of_quadratic: Newton stalled");
  return x;
}

}  // namespace shintani
