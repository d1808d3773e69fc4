#include "shintani/linalg.hpp"

#include <algorithm>

#include "shintani/errors.hpp"

namespace shintani {

QMatrix QMatrix::identity(int n) {
  QMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

QMatrix qmat_mul(const QMatrix& A, const QMatrix& B) {
  if (A.cols != B.rows) throw InternalError("qmat_mul: shape mismatch");
  QMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const mpq_class& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        const mpq_class& bkj = B.at(k, j);
        if (bkj != 0) C.at(i, j) += aik * bkj;
      }
    }
  return C;
}

std::vector<mpq_class> qmat_apply(const QMatrix& A,
                                  const std::vector<mpq_class>& v) {
  if ((int)v.size() != A.cols) throw InternalError("qmat_apply: shape");
  std::vector<mpq_class> out(A.rows, mpq_class(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j) != 0 && v[j] != 0) out[i] += A.at(i, j) * v[j];
  return out;
}

QMatrix qmat_sub(const QMatrix& A, const QMatrix& B) {
  QMatrix C(A.rows, A.cols);
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
  return C;
}

std::vector<int> rref(QMatrix& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int pr = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
    mpq_class inv = 1 / A.at(r, c);
    for (int j = c; j < A.cols; ++j) A.at(r, j) *= inv;
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      const mpq_class f = A.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < A.cols; ++j) A.at(i, j) -= f * A.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int qmat_rank(QMatrix A) { return (int)rref(A).size(); }

QMatrix right_kernel(const QMatrix& A) {
  QMatrix R = A;
  std::vector<int> piv = rref(R);
  std::vector<bool> is_piv(A.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  QMatrix K(A.cols, (int)free_cols.size());
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    K.at(fc, (int)fi) = 1;
    for (size_t pi = 0; pi < piv.size(); ++pi)
      K.at(piv[pi], (int)fi) = -R.at((int)pi, fc);
  }
  return K;
}

bool qmat_solve(const QMatrix& A, const std::vector<mpq_class>& b,
                std::vector<mpq_class>* x) {
  QMatrix aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (int c : piv)
    if (c == A.cols) return false;
  if (x) {
    x->assign(A.cols, mpq_class(0));
    for (size_t pi = 0; pi < piv.size(); ++pi)
      (*x)[piv[pi]] = aug.at((int)pi, A.cols);
  }
  return true;
}

bool in_col_span(const QMatrix& A, const std::vector<mpq_class>& b,
                 std::vector<mpq_class>* coeffs) {
  return qmat_solve(A, b, coeffs);
}

std::vector<mpq_class> charpoly(const QMatrix& A) {
  // Faddeev-LeVerrier; fine for the small dimensions used here.
  int n = A.rows;
  if (n != A.cols) throw InternalError("charpoly: not square");
  std::vector<mpq_class> c(n + 1, mpq_class(0));
  c[0] = 1;
  QMatrix Mk(n, n);  // zero
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{k-1} I
    QMatrix T = qmat_mul(A, Mk);
    for (int i = 0; i < n; ++i) T.at(i, i) += c[k - 1];
    Mk = T;
    QMatrix AM = qmat_mul(A, Mk);
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += AM.at(i, i);
    c[k] = -tr / k;
  }
  return c;  // x^n + c[1] x^(n-1) + ... + c[n]
}

std::vector<std::pair<mpq_class, int>> rational_roots(
    const std::vector<mpq_class>& poly) {
  // clear denominators -> integer polynomial, test divisors of the ends
  std::vector<mpq_class> p = poly;
  auto eval = [](const std::vector<mpq_class>& q, const mpq_class& x) {
    mpq_class v = 0;
    for (const auto& c : q) v = v * x + c;
    return v;
  };
  auto deflate = [](std::vector<mpq_class>& q, const mpq_class& r) {
    // synthetic division by (x - r)
    std::vector<mpq_class> out(q.size() - 1);
    mpq_class carry = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      carry = q[i] + carry * r;
      out[i] = carry;
    }
    q = out;
  };
  std::vector<std::pair<mpq_class, int>> roots;
  while (p.size() > 1) {
    // integer content
    mpz_class den(1);
    for (auto& c : p) den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> ip;
    for (auto& c : p) ip.push_back(mpz_class(c.get_num() * den / c.get_den()));
    // candidate roots r = s/t, s | ip.back(), t | ip.front()
    mpz_class a0 = ip.back(), an = ip.front();
    if (a0 == 0) {
      if (!roots.empty() && roots.back().first == 0)
        roots.back().second++;
      else
        roots.push_back({mpq_class(0), 1});
      deflate(p, mpq_class(0));
      continue;
    }
    bool found = false;
    mpz_class a0a = abs(a0), ana = abs(an);
    for (mpz_class s(1); s * s <= a0a && !found; ++s) {
      if (a0a % s != 0) continue;
      const mpz_class snums[2] = {s, mpz_class(a0a / s)};
      for (const mpz_class& snum : snums) {
        for (mpz_class t(1); t * t <= ana && !found; ++t) {
          if (ana % t != 0) continue;
          const mpz_class tdens[2] = {t, mpz_class(ana / t)};
          for (const mpz_class& tden : tdens) {
            for (int sign : {1, -1}) {
              mpq_class r(snum * sign, tden);
              r.canonicalize();
              if (eval(p, r) == 0) {
                if (!roots.empty() && roots.back().first == r)
                  roots.back().second++;
                else
                  roots.push_back({r, 1});
                deflate(p, r);
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
    }
    if (!found) break;
  }
  // merge duplicates
  std::sort(roots.begin(), roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<mpq_class, int>> merged;
  for (auto& rm : roots) {
    if (!merged.empty() && merged.back().first == rm.first)
      merged.back().second += rm.second;
    else
      merged.push_back(rm);
  }
  return merged;
}

std::vector<mpz_class> smith_normal_form(
    std::vector<std::vector<mpz_class>> A) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  std::vector<mpz_class> divisors;
  size_t t = 0;
  while (t < m && t < n) {
    // find a nonzero pivot with minimal absolute value
    size_t pi = t, pj = t;
    bool nonzero = false;
    mpz_class best;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (A[i][j] != 0) {
          mpz_class v = abs(A[i][j]);
          if (!nonzero || v < best) {
            best = v;
            pi = i;
            pj = j;
            nonzero = true;
          }
        }
    if (!nonzero) break;
    std::swap(A[t], A[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q = A[i][t] / A[t][t];
        for (size_t j = t; j < n; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q = A[t][j] / A[t][t];
        for (size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][j]);
          clean = false;
        }
      }
    }
    divisors.push_back(abs(A[t][t]));
    ++t;
  }
  // enforce divisibility chain
  for (size_t i = 0; i + 1 < divisors.size(); ++i)
    for (size_t j = i + 1; j < divisors.size(); ++j) {
      if (divisors[i] == 0) std::swap(divisors[i], divisors[j]);
      if (divisors[j] % divisors[i] != 0) {
        mpz_class g = gcd(divisors[i], divisors[j]);
        mpz_class l = divisors[i] / g * divisors[j];
        divisors[i] = g;
        divisors[j] = l;
      }
    }
  return divisors;
}

std::vector<mpq_class> primitive_scale(const std::vector<mpq_class>& v) {
  mpz_class den(1), num(0);
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpq_class> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    mpz_class z = mpz_class(v[i].get_num()) * den / v[i].get_den();
    num = gcd(num, z);
    out[i] = mpq_class(z);
  }
  if (num == 0) return out;
  int sign = 0;
  for (auto& x : out) {
    x /= num;
    if (sign == 0 && x != 0) sign = x > 0 ? 1 : -1;
  }
  if (sign < 0)
    for (auto& x : out) x = -x;
  return out;
}

}  // namespace shintani
