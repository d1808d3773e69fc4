#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "shintani/errors.hpp"

namespace shintani {

/// Arithmetic context for Z/p^M with p^M < 2^31 (products fit in int64,
/// dot products accumulate in __int128).
struct ZmodCtx {
  int64_t p = 0;
  int prec = 0;      // M
  int64_t q = 0;     // p^M
  std::vector<int64_t> ppow;  // p^0 .. p^M

  ZmodCtx() = default;
  ZmodCtx(int64_t p_, int prec_);

  int64_t reduce(int64_t x) const {
    int64_t r = x % q;
    return r < 0 ? r + q : r;
  }
  int64_t reduce(const mpz_class& x) const {
    mpz_class r = x % q;
    if (r < 0) r += q;
    return r.get_si();
  }
  int64_t add(int64_t a, int64_t b) const { return reduce(a + b); }
  int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
  int64_t mul(int64_t a, int64_t b) const {
    return (int64_t)(((__int128)a * b) % q);
  }
  int64_t pow(int64_t a, const mpz_class& e) const;
  int64_t pow(int64_t a, int64_t e) const;

  /// p-adic valuation of x mod p^M; returns prec for x == 0.
  int val(int64_t x) const;
  bool is_unit(int64_t x) const { return x % p != 0; }
  /// Inverse of a unit mod p^M.
  int64_t inv(int64_t a) const;
  /// Exact division a / b where val(b) <= val(a); result mod p^(M - val(b)).
  int64_t divexact(int64_t a, int64_t b, int* result_prec = nullptr) const;
};

/// Dense matrix over Z/p^M, row-major.
struct ZmodMatrix {
  int rows = 0, cols = 0;
  std::vector<int64_t> a;

  ZmodMatrix() = default;
  ZmodMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  int64_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
  int64_t at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

ZmodMatrix zmod_mul(const ZmodCtx& R, const ZmodMatrix& A, const ZmodMatrix& B);
std::vector<int64_t> zmod_apply(const ZmodCtx& R, const ZmodMatrix& A,
                                const std::vector<int64_t>& v);

/// Howell normal form of A (rows span the same row module, canonical).
/// Also used for kernels and solving; pivot structure is exposed.
struct HowellForm {
  ZmodMatrix H;                 // Howell basis rows (nonzero rows only)
  std::vector<int> pivot_col;   // per row
  std::vector<int> pivot_val;   // p-adic valuation of pivot entry
};

HowellForm howell(const ZmodCtx& R, const ZmodMatrix& A);

/// Solve x * A = b (row-vector convention) or report no solution.
bool howell_solve(const ZmodCtx& R, const HowellForm& HF,
                  const std::vector<int64_t>& b, std::vector<int64_t>* coeffs);

/// Membership of b in the row span of A at reduced precision p^(prec-loss):
/// checks p^loss * b in span (used for filtration-graded systems).
bool in_row_span(const ZmodCtx& R, const HowellForm& HF,
                 const std::vector<int64_t>& b);

/// Generators of { x : x * A = 0 } (left kernel), as rows.
ZmodMatrix zmod_left_kernel(const ZmodCtx& R, const ZmodMatrix& A);

/// Solve A * x = b for a single solution (column convention);
/// returns false if inconsistent.
bool zmod_solve(const ZmodCtx& R, const ZmodMatrix& A,
                const std::vector<int64_t>& b, std::vector<int64_t>* x);

/// Hensel lift of the unit root of X^2 - t*X + n (t a unit mod p, i.e.
/// the ordinary case); throws OrdinarityError when t == 0 mod p.
int64_t unit_root_of_quadratic(const ZmodCtx& R, const mpz_class& t,
                               const mpz_class& n);

}  // namespace shintani
