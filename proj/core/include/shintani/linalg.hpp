#pragma once

#include <gmpxx.h>

#include <vector>

namespace shintani {

/// Dense matrix over Q, row-major.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<mpq_class> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, mpq_class(0)) {}
  static QMatrix identity(int n);
  mpq_class& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const mpq_class& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

QMatrix qmat_mul(const QMatrix& A, const QMatrix& B);
std::vector<mpq_class> qmat_apply(const QMatrix& A,
                                  const std::vector<mpq_class>& v);
QMatrix qmat_sub(const QMatrix& A, const QMatrix& B);

/// Reduced row echelon form, in place; returns pivot columns.
std::vector<int> rref(QMatrix& A);

int qmat_rank(QMatrix A);

/// Basis of the right kernel {v : A v = 0}, as columns stacked into a matrix
/// (each column one basis vector).
QMatrix right_kernel(const QMatrix& A);

/// Solve A x = b; returns false if inconsistent.
bool qmat_solve(const QMatrix& A, const std::vector<mpq_class>& b,
                std::vector<mpq_class>* x);

/// Is b in the column span of A? If so and coeffs != null, fill coefficients.
bool in_col_span(const QMatrix& A, const std::vector<mpq_class>& b,
                 std::vector<mpq_class>* coeffs = nullptr);

/// Characteristic polynomial of a square matrix, monic, coefficients
/// returned highest degree first.
std::vector<mpq_class> charpoly(const QMatrix& A);

/// Rational roots (with multiplicity) of a monic polynomial with rational
/// coefficients (highest first). Returns sorted unique roots with mults.
std::vector<std::pair<mpq_class, int>> rational_roots(
    const std::vector<mpq_class>& poly);

/// Smith normal form elementary divisors of an integer matrix.
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> A);

/// Scale a rational vector to a primitive integer vector with positive first
/// nonzero entry; zero vector stays zero.
std::vector<mpq_class> primitive_scale(const std::vector<mpq_class>& v);

}  // namespace shintani
