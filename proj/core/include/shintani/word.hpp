#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace shintani {

/// Word in the generators of a presentation. Leaves are signed 1-based
/// generator indices with a repeat count; blocks are sub-words raised to a
/// (possibly huge, signed) power. Automorphs of forms with large fundamental
/// Pell units need the compressed representation: their translation
/// exponents do not fit in any flat letter sequence.
struct Word {
  struct Atom {
    int32_t gen = 0;                     // nonzero = leaf
    mpz_class exp = 1;                   // leaf: >0 repeat; block: signed
    std::shared_ptr<const Word> block;   // set = power block

    Atom() = default;
    Atom(int32_t g, mpz_class e) : gen(g), exp(std::move(e)) {}
    explicit Atom(std::shared_ptr<const Word> b, mpz_class e)
        : gen(0), exp(std::move(e)), block(std::move(b)) {}
  };
  std::vector<Atom> atoms;

  bool empty() const { return atoms.empty(); }
  void append_letter(int32_t signed_gen, const mpz_class& count = 1);
  void append_flat(const std::vector<int32_t>& letters);
  void append_block(std::shared_ptr<const Word> sub, const mpz_class& e);
  void append(const Word& other);
  Word inverse() const;

  static Word from_flat(const std::vector<int32_t>& letters);
  /// Flat letter expansion; throws if the expansion exceeds max_len.
  std::vector<int32_t> flatten(size_t max_len = 1 << 20) const;
  /// Number of atoms, recursively.
  size_t atom_count() const;
};

}  // namespace shintani
