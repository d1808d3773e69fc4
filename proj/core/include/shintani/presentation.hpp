#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shintani/mat2.hpp"
#include "shintani/word.hpp"

namespace shintani {

/// Finitely presented Fuchsian group with 2x2 matrix realization.
/// Presentations built here are for Gamma_0(N)/{+-1} (sign-tracking flag);
/// relation words evaluate to -1 in SL_2 (elliptic squares/cubes).
/// External bundles (cocompact quaternionic groups with precomputed data)
/// carry no word-problem tables and may supply automorph words directly.
struct GroupPresentation {
  long level = 1;
  std::vector<Mat2> generators;
  std::vector<std::vector<int32_t>> relations;  // short flat words
  bool contains_minus_one = true;
  Mat2 omega_inf = Mat2::from_ints(1, 0, 0, -1);
  bool external = false;
  std::map<std::string, Word> automorph_words;

  // Word-problem tables for the split model (empty when external).
  struct Rewriter {
    std::vector<std::pair<long, long>> p1;  // normalized (c:d)
    std::map<std::pair<long, long>, int> p1_index;
    std::vector<int> actS, actU, actT;
    std::vector<std::vector<int32_t>> fragS, fragU, fragT;
    std::vector<int> t_period;
    std::vector<std::shared_ptr<const Word>> t_loop;  // per coset
    int base = 0;
  } rw;

  long index() const { return (long)rw.p1.size(); }

  /// Throws MembershipError unless gamma (or -gamma) lies in Gamma_0(level).
  void require_member(const Mat2& gamma) const;
  bool is_member(const Mat2& gamma) const;

  Mat2 evaluate_flat(const std::vector<int32_t>& letters) const;
  Mat2 evaluate(const Word& w) const;
};

struct WordDecomposition {
  Word word;
  int sign = 1;  // evaluation of word equals sign * gamma
};

/// Farey-symbol (special polygon) presentation of Gamma_0(N).
GroupPresentation build_presentation(long N);

/// Exact word decomposition of a member; sign reported (projective
/// presentation). Throws MembershipError on non-members.
WordDecomposition decompose_word(const Mat2& gamma, const GroupPresentation& G);

/// Coset data for the double coset T(s) = G s G = union of G s_i.
struct CosetDecomposition {
  Mat2 s;
  std::vector<Mat2> reps;  // s_i
  // For generator g (index into G.generators): perm[g][i] = j and
  // trans[g][i] = t_i(g) with s_i * g = t_i(g) * s_j.
  std::vector<std::vector<int>> perm;
  std::vector<std::vector<Mat2>> trans;
  std::vector<Mat2> star;  // s_i^* = norm(s_i) s_i^{-1}
};

CosetDecomposition coset_decomposition(const Mat2& s,
                                       const GroupPresentation& G,
                                       size_t rep_cap = 0);

/// Genus, cusp and elliptic-point counts of X_0(N); the independent oracle
/// for presentation ranks.
struct Gamma0Invariants {
  long index, nu2, nu3, cusps, genus;
};
Gamma0Invariants gamma0_invariants(long N);

}  // namespace shintani
