#include "shintani/bqf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "shintani/errors.hpp"

namespace shintani {

namespace {

mpz_class pow_long(long base, int e) {
  mpz_class r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool is_square(const mpz_class& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

mpz_class isqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

struct PlainForm {
  mpz_class A, B, C;
  bool operator==(const PlainForm& o) const {
    return A == o.A && B == o.B && C == o.C;
  }
  bool operator<(const PlainForm& o) const {
    if (A != o.A) return A < o.A;
    if (B != o.B) return B < o.B;
    return C < o.C;
  }
  mpz_class disc() const { return B * B - 4 * A * C; }
};

PlainForm plain_act(const PlainForm& Q, const Mat2& g) {
  PlainForm R;
  R.A = Q.A * g.a * g.a + Q.B * g.a * g.c + Q.C * g.c * g.c;
  R.B = 2 * Q.A * g.a * g.b + Q.B * (g.a * g.d + g.b * g.c) +
        2 * Q.C * g.c * g.d;
  R.C = Q.A * g.b * g.b + Q.B * g.b * g.d + Q.C * g.d * g.d;
  return R;
}

/// Minimal positive automorph of a form with even middle coefficient:
/// gamma = [[(t - Bu)/2, -Cu], [Au, (t + Bu)/2]] for the minimal t, u > 0
/// with t^2 - disc u^2 = 4.
Mat2 automorph_raw(const PlainForm& Q) {
  mpz_class d = Q.disc();
  if (d <= 0 || is_square(d))
    throw SplitFormError("automorph: discriminant must be a positive nonsquare");
  if (d % 4 != 0)
    throw InternalError("automorph: odd middle coefficient out of scope");
  auto [x, y] = pell_fundamental(d / 4);
  mpz_class t = 2 * x, u = y;
  Mat2 g((t - Q.B * u) / 2, -Q.C * u, Q.A * u, (t + Q.B * u) / 2);
  if (g.det() != 1) throw InternalError("automorph: determinant != 1");
  if (!(plain_act(Q, g) == Q))
    throw InternalError("automorph: does not fix the form");
  return g;
}

bool is_reduced(const PlainForm& Q, const mpz_class& sq) {
  if (Q.B <= 0 || Q.B > sq) return false;
  mpz_class d = Q.disc();
  mpz_class twoA = 2 * abs(Q.A);
  mpz_class diff = twoA - Q.B;
  if (diff * diff >= d) return false;
  mpz_class sum = twoA + Q.B;
  if (sum * sum <= d) return false;
  return true;
}

/// rho-step (Gauss reduction / cycle step) with transform tracking.
PlainForm rho(const PlainForm& Q, const mpz_class& sq, Mat2* gout) {
  mpz_class twoC = 2 * abs(Q.C);
  mpz_class r;
  if (abs(Q.C) > sq) {
    r = (-Q.B) % twoC;
    if (r < 0) r += twoC;
    if (r > abs(Q.C)) r -= twoC;
  } else {
    r = (-Q.B) % twoC;
    if (r < 0) r += twoC;
    r = r + ((sq - r) / twoC) * twoC;
  }
  mpz_class s = (r + Q.B) / (2 * Q.C);
  Mat2 g(0, -1, 1, s);
  PlainForm R = plain_act(Q, g);
  if (gout) *gout = g;
  return R;
}

struct ReducedCycle {
  PlainForm first;
  Mat2 to_first;  // (original) | to_first = first
};

ReducedCycle reduce_form(const PlainForm& Q0) {
  mpz_class sq = isqrt(Q0.disc());
  PlainForm Q = Q0;
  Mat2 acc = Mat2::identity();
  int guard = 0;
  while (!is_reduced(Q, sq)) {
    Mat2 g;
    Q = rho(Q, sq, &g);
    acc = acc * g;
    if (++guard > 200000) throw InternalError("reduce_form: stuck");
  }
  return {Q, acc};
}

/// g with Q1|g = Q2, when SL2-equivalent.
std::optional<Mat2> sl2_transform(const PlainForm& Q1, const PlainForm& Q2) {
  if (Q1.disc() != Q2.disc()) return std::nullopt;
  mpz_class sq = isqrt(Q1.disc());
  ReducedCycle c1 = reduce_form(Q1);
  ReducedCycle c2 = reduce_form(Q2);
  // walk c2's cycle looking for c1.first
  PlainForm Q = c2.first;
  Mat2 acc = c2.to_first;
  int guard = 0;
  do {
    if (Q == c1.first)
      return c1.to_first * acc.inverse_unimodular();
    Mat2 g;
    Q = rho(Q, sq, &g);
    acc = acc * g;
    if (++guard > 500000) throw InternalError("sl2_transform: cycle runaway");
  } while (!(Q == c2.first));
  return std::nullopt;
}

/// P^1(Z/L) as column points (a : c), with left matrix action.
struct P1Left {
  long L;
  std::vector<std::pair<long, long>> pts;
  std::map<std::pair<long, long>, int> index;

  explicit P1Left(long L_) : L(L_) {
    if (L == 1) {
      pts.push_back({0, 0});
      index[{0, 0}] = 0;
      return;
    }
    for (long a = 0; a < L; ++a)
      for (long c = 0; c < L; ++c) {
        if (std::gcd(std::gcd(a, c), L) != 1) continue;
        auto key = normalize(a, c);
        if (!index.count(key)) {
          index[key] = (int)pts.size();
          pts.push_back(key);
        }
      }
  }
  std::pair<long, long> normalize(long a, long c) const {
    if (L == 1) return {0, 0};
    a = ((a % L) + L) % L;
    c = ((c % L) + L) % L;
    std::pair<long, long> best{-1, -1};
    for (long u = 1; u < L; ++u) {
      if (std::gcd(u, L) != 1) continue;
      std::pair<long, long> cand{(u * a) % L, (u * c) % L};
      if (best.first < 0 || cand < best) best = cand;
    }
    return best;
  }
  int left_act(int i, const Mat2& g) const {
    long a = pts[i].first, c = pts[i].second;
    long ga = mpz_class(g.a % L).get_si(), gb = mpz_class(g.b % L).get_si();
    long gc = mpz_class(g.c % L).get_si(), gd = mpz_class(g.d % L).get_si();
    return index.at(normalize(ga * a + gb * c, gc * a + gd * c));
  }
  int column_index(const Mat2& g) const {
    long a = mpz_class(g.a % L).get_si(), c = mpz_class(g.c % L).get_si();
    return index.at(normalize(a, c));
  }
};

/// One SL2(Z) matrix per left coset g Gamma_0(L), indexed by column points.
std::vector<Mat2> left_coset_transversal(const P1Left& P) {
  std::vector<Mat2> out;
  out.reserve(P.pts.size());
  for (auto [a0, c0] : P.pts) {
    if (P.L == 1) {
      out.push_back(Mat2::identity());
      continue;
    }
    long aa = a0, cc = c0;
    bool done = std::gcd(aa, cc) == 1;
    for (long s = 0; s <= P.L && !done; ++s)
      for (long t = 0; t <= P.L && !done; ++t)
        if (std::gcd(aa + s * P.L, cc + t * P.L) == 1) {
          aa += s * P.L;
          cc += t * P.L;
          done = true;
        }
    if (!done) throw InternalError("left_coset_transversal: lift failed");
    mpz_class g, x, y, A(aa), C(cc);
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), A.get_mpz_t(),
               C.get_mpz_t());
    out.push_back(Mat2(A, -y, C, x));  // det = a x + c y = 1
  }
  return out;
}

/// Does some power of gamma move coset `from` to coset `to` on P^1?
bool in_cyclic_orbit(const P1Left& P, const Mat2& gamma, int from, int to) {
  int cur = from;
  for (size_t it = 0; it <= P.pts.size() + 1; ++it) {
    if (cur == to) return true;
    cur = P.left_act(cur, gamma);
    if (cur == from) return false;
  }
  return false;
}

}  // namespace

mpz_class IndefiniteForm::level() const { return mpz_class(N) * pow_long(p, n); }

mpz_class IndefiniteForm::xi() const {
  mpz_class L = level();
  return disc() / (4 * L * L);
}

mpz_class IndefiniteForm::eval(const mpz_class& x, const mpz_class& y) const {
  return A * x * x + B * x * y + C * y * y;
}

void IndefiniteForm::validate() const {
  mpz_class L = level();
  mpz_class d = disc();
  if (d <= 0) throw SplitFormError("form is not indefinite");
  if (is_square(d)) throw SplitFormError("split form: square discriminant");
  if (A % L != 0) throw Error("form violates level divisibility at A");
  if (B % (2 * L) != 0) throw Error("form violates level divisibility at B");
  if (d % (4 * L * L) != 0 || (d / (4 * L * L)) <= 0)
    throw Error("form invariant xi is not a positive integer");
}

bool IndefiniteForm::operator<(const IndefiniteForm& o) const {
  if (A != o.A) return A < o.A;
  if (B != o.B) return B < o.B;
  return C < o.C;
}

IndefiniteForm form_act(const IndefiniteForm& Q, const Mat2& g) {
  PlainForm R = plain_act({Q.A, Q.B, Q.C}, g);
  IndefiniteForm out = Q;
  out.A = R.A;
  out.B = R.B;
  out.C = R.C;
  return out;
}

std::pair<mpz_class, mpz_class> pell_fundamental(const mpz_class& D) {
  if (D <= 0 || is_square(D))
    throw SplitFormError("pell_fundamental: D must be a positive nonsquare");
  mpz_class a0 = isqrt(D);
  mpz_class m = 0, d = 1, a = a0;
  mpz_class p_prev = 1, p_cur = a0, q_prev = 0, q_cur = 1;
  for (int it = 0; it < 10000000; ++it) {
    mpz_class v = p_cur * p_cur - D * q_cur * q_cur;
    if (v == 1) return {p_cur, q_cur};
    if (v == -1)
      return {p_cur * p_cur + D * q_cur * q_cur, 2 * p_cur * q_cur};
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
  }
  throw InternalError("pell_fundamental: period not found");
}

std::pair<Mat2, int> automorph(const IndefiniteForm& Q) {
  Mat2 g = automorph_raw({Q.A, Q.B, Q.C});
  mpz_class L = Q.level();
  Mat2 gl = g;
  int power = 1;
  while (gl.c % L != 0) {
    gl = gl * g;
    if (++power > 5000000)
      throw InternalError("automorph: no power meets the level congruence");
  }
  return {gl, power};
}

mpq_class eta(const IndefiniteForm& Q, const CharacterData& psi) {
  mpz_class b = Q.b_alpha();
  if (gcd(b, Q.level()) != 1) return 0;
  return psi.value(b);
}

bool gamma0_equivalent(const IndefiniteForm& Q1, const IndefiniteForm& Q2) {
  if (Q1.disc() != Q2.disc()) return false;
  mpz_class L1 = Q1.level(), L2 = Q2.level();
  if (L1 != L2) throw Error("gamma0_equivalent: mismatched levels");
  long L = L1.get_si();
  auto g = sl2_transform({Q1.A, Q1.B, Q1.C}, {Q2.A, Q2.B, Q2.C});
  if (!g) return false;
  Mat2 gam = automorph_raw({Q1.A, Q1.B, Q1.C});
  P1Left P(L);
  // exists k with gamma^k g in Gamma_0(L) <=> column(g) in the gamma-orbit
  // of the identity column
  return in_cyclic_orbit(P, gam.inverse_unimodular(),
                         P.column_index(Mat2::identity()), P.column_index(*g));
}

std::vector<FormClass> enumerate_classes(long N, long p, int n, long xi) {
  if (xi <= 0) throw Error("enumerate_classes: xi must be positive");
  mpz_class L = mpz_class(N) * pow_long(p, n);
  mpz_class disc = 4 * L * L * xi;
  if (is_square(disc)) throw SplitFormError("enumerate_classes: split form");

  // all reduced forms of this discriminant, one representative per SL2-cycle
  mpz_class sq = isqrt(disc);
  std::set<PlainForm> reduced;
  for (mpz_class B = 0; B <= sq; B += 2) {
    if ((disc - B * B) % 4 != 0) continue;
    mpz_class mag = (disc - B * B) / 4;  // = -A C > 0
    if (mag == 0) continue;
    for (mpz_class A = 1; A * A <= mag; ++A) {
      if (mag % A != 0) continue;
      mpz_class A2 = mag / A;
      PlainForm cands[4] = {{A, B, -A2}, {A2, B, -A}, {-A, B, A2}, {-A2, B, A}};
      for (const auto& F : cands)
        if (is_reduced(F, sq)) reduced.insert(F);
    }
  }
  std::vector<PlainForm> sl2_reps;
  std::set<PlainForm> used;
  for (const auto& F : reduced) {
    if (used.count(F)) continue;
    sl2_reps.push_back(F);
    PlainForm Q = F;
    do {
      used.insert(Q);
      Q = rho(Q, sq, nullptr);
    } while (!(Q == F));
  }

  long Ll = L.get_si();
  P1Left P(Ll);
  auto transversal = left_coset_transversal(P);

  std::vector<FormClass> out;
  for (const auto& Q0 : sl2_reps) {
    Mat2 gam = automorph_raw(Q0);
    // orbit partition of P^1 under left multiplication by gamma
    std::vector<int> orbit_id((int)P.pts.size(), -1);
    int next_orbit = 0;
    for (int i = 0; i < (int)P.pts.size(); ++i) {
      if (orbit_id[i] >= 0) continue;
      int cur = i;
      while (orbit_id[cur] < 0) {
        orbit_id[cur] = next_orbit;
        cur = P.left_act(cur, gam);
      }
      ++next_orbit;
    }
    // Gamma_0(L)-classes inside this SL2-class: shaped coset translates,
    // one per gamma-orbit on P^1
    std::map<int, PlainForm> chosen;
    for (size_t ci = 0; ci < transversal.size(); ++ci) {
      PlainForm cand = plain_act(Q0, transversal[ci]);
      if (cand.A % L != 0) continue;
      if (cand.B % (2 * L) != 0) continue;
      int oid = orbit_id[P.column_index(transversal[ci])];
      auto it = chosen.find(oid);
      if (it == chosen.end() || cand < it->second) chosen[oid] = cand;
    }
    for (auto& [oid, repv] : chosen) {
      IndefiniteForm rep;
      rep.A = repv.A;
      rep.B = repv.B;
      rep.C = repv.C;
      rep.N = N;
      rep.p = p;
      rep.n = n;
      rep.validate();
      FormClass fc;
      fc.rep = rep;
      auto [g, pw] = automorph(rep);
      (void)pw;
      fc.automorph = g;
      fc.torsion = 2;
      mpz_class ba = rep.b_alpha() % L;
      if (ba < 0) ba += L;
      fc.b_alpha = ba;
      out.push_back(std::move(fc));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FormClass& x, const FormClass& y) { return x.rep < y.rep; });
  return out;
}

FamilyMap family_map_pi(long N, long p, int m, long xi, long t) {
  if (m < 1) throw Error("family_map_pi: m must be >= 1");
  mpz_class modulus = mpz_class(N) * pow_long(p, m);
  mpz_class tt = mpz_class(t) % modulus;
  if (tt < 0) tt += modulus;
  if (gcd(tt, modulus) != 1)
    throw Error("family_map_pi: t must be a unit class mod N p^m");

  long xi_target = xi;
  for (int i = 0; i < 2 * (m - 1); ++i) xi_target *= p;

  auto stratum = [&](std::vector<FormClass> classes) {
    std::vector<FormClass> kept;
    for (auto& c : classes) {
      mpz_class ba = c.rep.b_alpha() % modulus;
      if (ba < 0) ba += modulus;
      if (ba == tt) kept.push_back(std::move(c));
    }
    return kept;
  };

  FamilyMap fm;
  fm.source = stratum(enumerate_classes(N, p, m, xi));
  fm.target = stratum(enumerate_classes(N, p, 1, xi_target));

  fm.image.assign(fm.source.size(), -1);
  for (size_t i = 0; i < fm.source.size(); ++i) {
    IndefiniteForm Q = fm.source[i].rep;
    Q.n = 1;  // the same form, read with the coarser level-1 equivalence
    for (size_t j = 0; j < fm.target.size(); ++j)
      if (gamma0_equivalent(Q, fm.target[j].rep)) {
        fm.image[i] = (int)j;
        break;
      }
  }
  std::vector<int> hits(fm.target.size(), 0);
  fm.injective = true;
  for (size_t i = 0; i < fm.source.size(); ++i) {
    if (fm.image[i] < 0) {
      fm.injective = false;
      continue;
    }
    if (++hits[fm.image[i]] > 1) fm.injective = false;
  }
  fm.surjective = true;
  for (int h : hits)
    if (h == 0) fm.surjective = false;
  return fm;
}

}  // namespace shintani
