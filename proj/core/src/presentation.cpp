#include "shintani/presentation.hpp"

#include <algorithm>

#include "shintani/errors.hpp"

namespace shintani {

namespace {

Mat2 mat_pow(Mat2 base, mpz_class e) {
  // e may be negative for det +-1 matrices
  if (e < 0) {
    base = base.inverse_unimodular();
    e = -e;
  }
  Mat2 acc = Mat2::identity();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

void Word::append_letter(int32_t g, const mpz_class& count) {
  if (g == 0 || count == 0) return;
  if (!atoms.empty() && atoms.back().gen == g && !atoms.back().block) {
    atoms.back().exp += count;
    return;
  }
  if (!atoms.empty() && atoms.back().gen == -g && !atoms.back().block) {
    // cancel
    if (atoms.back().exp > count) {
      atoms.back().exp -= count;
      return;
    }
    mpz_class rest = count - atoms.back().exp;
    atoms.pop_back();
    if (rest > 0) append_letter(g, rest);
    return;
  }
  atoms.emplace_back(g, count);
}

void Word::append_flat(const std::vector<int32_t>& letters) {
  for (int32_t l : letters) append_letter(l, 1);
}

void Word::append_block(std::shared_ptr<const Word> sub, const mpz_class& e) {
  if (e == 0 || !sub || sub->empty()) return;
  if (sub->atoms.size() == 1 && !sub->atoms[0].block) {
    // single-letter block folds into a leaf power
    const auto& a = sub->atoms[0];
    mpz_class total = a.exp * e;
    if (total < 0)
      append_letter(-a.gen, -total);
    else
      append_letter(a.gen, total);
    return;
  }
  Atom atom(std::move(sub), e);
  atoms.push_back(std::move(atom));
}

void Word::append(const Word& other) {
  for (const auto& a : other.atoms) {
    if (a.block)
      append_block(a.block, a.exp);
    else
      append_letter(a.gen, a.exp);
  }
}

Word Word::inverse() const {
  Word r;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    if (it->block)
      r.append_block(it->block, -it->exp);
    else
      r.append_letter(-it->gen, it->exp);
  }
  return r;
}

Word Word::from_flat(const std::vector<int32_t>& letters) {
  Word w;
  w.append_flat(letters);
  return w;
}

std::vector<int32_t> Word::flatten(size_t max_len) const {
  std::vector<int32_t> out;
  for (const auto& a : atoms) {
    if (!a.block) {
      if (a.exp > (long)max_len)
        throw Error("Word::flatten: expansion too large");
      long e = a.exp.get_si();
      for (long i = 0; i < e; ++i) out.push_back(a.gen);
    } else {
      std::vector<int32_t> sub = a.block->flatten(max_len);
      mpz_class e = a.exp;
      bool inv = e < 0;
      if (inv) e = -e;
      if (e * (long)sub.size() > (long)max_len)
        throw Error("Word::flatten: expansion too large");
      long ee = e.get_si();
      for (long i = 0; i < ee; ++i) {
        if (inv)
          for (auto it = sub.rbegin(); it != sub.rend(); ++it)
            out.push_back(-*it);
        else
          for (int32_t l : sub) out.push_back(l);
      }
    }
    if (out.size() > max_len) throw Error("Word::flatten: expansion too large");
  }
  return out;
}

size_t Word::atom_count() const {
  size_t n = 0;
  for (const auto& a : atoms) n += a.block ? a.block->atom_count() : 1;
  return n;
}

bool GroupPresentation::is_member(const Mat2& gamma) const {
  if (gamma.det() != 1) return false;
  return gamma.c % level == 0;
}

void GroupPresentation::require_member(const Mat2& gamma) const {
  if (gamma.det() != 1)
    throw MembershipError("matrix has determinant " + gamma.det().get_str() +
                          ", expected 1");
  if (gamma.c % level != 0)
    throw MembershipError("lower-left entry " + gamma.c.get_str() +
                          " is not 0 mod " + std::to_string(level));
}

Mat2 GroupPresentation::evaluate_flat(const std::vector<int32_t>& letters) const {
  Mat2 m = Mat2::identity();
  for (int32_t l : letters) {
    if (l == 0) throw InternalError("evaluate_flat: zero letter");
    size_t gi = (size_t)(l > 0 ? l : -l) - 1;
    if (gi >= generators.size())
      throw InternalError("evaluate_flat: generator index out of range");
    m = m * (l > 0 ? generators[gi] : generators[gi].inverse_unimodular());
  }
  return m;
}

Mat2 GroupPresentation::evaluate(const Word& w) const {
  Mat2 m = Mat2::identity();
  for (const auto& a : w.atoms) {
    if (!a.block) {
      size_t gi = (size_t)(a.gen > 0 ? a.gen : -a.gen) - 1;
      if (gi >= generators.size())
        throw InternalError("evaluate: generator index out of range");
      Mat2 base = a.gen > 0 ? generators[gi] : generators[gi].inverse_unimodular();
      m = m * mat_pow(base, a.exp);
    } else {
      m = m * mat_pow(evaluate(*a.block), a.exp);
    }
  }
  return m;
}

namespace {

/// Left-to-right peeling of an SL2(Z) matrix into T^{q_1} S T^{q_2} S ... S
/// T^{q_end}, with a global sign.
struct Peeled {
  std::vector<mpz_class> tpows;  // q_1 .. q_k (segments before each S)
  mpz_class tail;                // final T power
  int sign = 1;
};

Peeled peel_sl2(Mat2 g) {
  Peeled out;
  while (g.c != 0) {
    // choose q with |a - q c| minimal-ish (floor division is fine)
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), g.a.get_mpz_t(), g.c.get_mpz_t());
    // prefer the rounding that strictly shrinks |c'|
    Mat2 g1(g.c, g.d, q * g.c - g.a, q * g.d - g.b);  // S^{-1} T^{-q} g
    Mat2 g2(g.c, g.d, (q + 1) * g.c - g.a, (q + 1) * g.d - g.b);
    if (abs(g2.c) < abs(g1.c)) {
      q += 1;
      g = g2;
    } else {
      g = g1;
    }
    out.tpows.push_back(q);
    if (out.tpows.size() > 100000)
      throw InternalError("peel_sl2: runaway reduction");
  }
  // now g = [[a, b], [0, d]] with a d = 1
  if (g.a == 1) {
    out.tail = g.b;
  } else if (g.a == -1) {
    out.tail = -g.b;
    out.sign = -out.sign;
  } else {
    throw InternalError("peel_sl2: non-unimodular tail");
  }
  return out;
}

}  // namespace

WordDecomposition decompose_word(const Mat2& gamma,
                                 const GroupPresentation& G) {
  if (G.external)
    throw Error("decompose_word: external presentation carries no word data");
  G.require_member(gamma);

  Peeled pe = peel_sl2(gamma);
  const auto& rw = G.rw;
  Word w;
  int coset = rw.base;

  auto emit_T = [&](const mpz_class& q) {
    if (q == 0) return;
    int period = rw.t_period[coset];
    mpz_class Q, r;
    mpz_fdiv_qr(Q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(),
                mpz_class(period).get_mpz_t());
    // T^q = (T^period)^Q * T^r with 0 <= r < period
    w.append_block(rw.t_loop[coset], Q);
    long rr = r.get_si();
    for (long i = 0; i < rr; ++i) {
      w.append_flat(rw.fragT[coset]);
      coset = rw.actT[coset];
    }
  };

  for (const auto& q : pe.tpows) {
    emit_T(q);
    w.append_flat(rw.fragS[coset]);
    coset = rw.actS[coset];
  }
  emit_T(pe.tail);

  if (coset != rw.base)
    throw InternalError("decompose_word: walk did not close up");

  // fix the sign by one exact evaluation when cheap, else report projective
  WordDecomposition out;
  out.word = std::move(w);
  Mat2 val = G.evaluate(out.word);
  if (val == gamma)
    out.sign = 1;
  else if (val == -gamma)
    out.sign = -1;
  else
    throw InternalError("decompose_word: word does not evaluate to +-gamma");
  return out;
}

CosetDecomposition coset_decomposition(const Mat2& s,
                                       const GroupPresentation& G,
                                       size_t rep_cap) {
  mpz_class det = s.det();
  if (det == 0) throw DecompositionError("coset_decomposition: singular s");
  if (rep_cap == 0) {
    // sigma_1(det) is an upper bound for [G : G cap s G s^-1] style counts
    mpz_class bound(1);
    mpz_class d = abs(det);
    for (mpz_class i = 1; i <= d; ++i)
      if (d % i == 0) bound += i;
    bound *= G.index();
    rep_cap = bound.get_ui() + 8;
  }

  // G s_i = G s_j ?  <=>  s_i s_j^{-1} in G
  auto same_coset = [&](const Mat2& x, const Mat2& y) {
    // x y^{-1} = x adj(y) / det(y)
    mpz_class dy = y.det();
    Mat2 t(x.a * y.d - x.b * y.c, -x.a * y.b + x.b * y.a,
           x.c * y.d - x.d * y.c, -x.c * y.b + x.d * y.a);
    for (const mpz_class* e : {&t.a, &t.b, &t.c, &t.d})
      if (*e % dy != 0) return false;
    Mat2 u(t.a / dy, t.b / dy, t.c / dy, t.d / dy);
    return G.is_member(u) || G.is_member(-u);
  };

  CosetDecomposition cd;
  cd.s = s;
  cd.reps.push_back(s);
  // right-multiply by generators and inverses until closed
  for (size_t i = 0; i < cd.reps.size(); ++i) {
    for (size_t gi = 0; gi < G.generators.size(); ++gi) {
      for (int dir = 0; dir < 2; ++dir) {
        Mat2 cand = cd.reps[i] * (dir ? G.generators[gi].inverse_unimodular()
                                      : G.generators[gi]);
        bool found = false;
        for (const auto& r : cd.reps)
          if (same_coset(cand, r)) {
            found = true;
            break;
          }
        if (!found) {
          cd.reps.push_back(cand);
          if (cd.reps.size() > rep_cap)
            throw DecompositionError(
                "coset_decomposition: representative bound exceeded");
        }
      }
    }
  }

  // permutations and t_i(g) per generator
  size_t n = cd.reps.size();
  cd.perm.assign(G.generators.size(), std::vector<int>(n, -1));
  cd.trans.assign(G.generators.size(), std::vector<Mat2>(n));
  for (size_t gi = 0; gi < G.generators.size(); ++gi) {
    for (size_t i = 0; i < n; ++i) {
      Mat2 sg = cd.reps[i] * G.generators[gi];
      int j = -1;
      for (size_t k = 0; k < n; ++k)
        if (same_coset(sg, cd.reps[k])) {
          j = (int)k;
          break;
        }
      if (j < 0)
        throw DecompositionError("coset_decomposition: orbit not closed");
      // t = s_i g s_j^{-1}
      const Mat2& y = cd.reps[j];
      mpz_class dy = y.det();
      Mat2 t(sg.a * y.d - sg.b * y.c, -sg.a * y.b + sg.b * y.a,
             sg.c * y.d - sg.d * y.c, -sg.c * y.b + sg.d * y.a);
      Mat2 u(t.a / dy, t.b / dy, t.c / dy, t.d / dy);
      if (!(G.is_member(u) || G.is_member(-u)))
        throw DecompositionError("coset_decomposition: t_i(g) not a member");
      cd.perm[gi][i] = j;
      cd.trans[gi][i] = u;
    }
    // bijectivity
    std::vector<int> seen(n, 0);
    for (size_t i = 0; i < n; ++i) seen[cd.perm[gi][i]]++;
    for (size_t i = 0; i < n; ++i)
      if (seen[i] != 1)
        throw DecompositionError("coset_decomposition: permutation not bijective");
  }
  cd.star.reserve(n);
  for (const auto& r : cd.reps) cd.star.push_back(r.star());
  return cd;
}

}  // namespace shintani
