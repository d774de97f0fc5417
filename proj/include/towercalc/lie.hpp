#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "towercalc/integer.hpp"

namespace towercalc::lie {

/// A word over the alphabet {0, ..., alphabet-1} that is strictly smaller
/// than each of its proper rotations. Lyndon words of length ℓ index a basis
/// of the length-ℓ part of the free Lie algebra on `alphabet` generators.
class LyndonWord {
 public:
  /// Throws InvariantViolation unless `letters` is a Lyndon word over the
  /// alphabet.
  LyndonWord(std::vector<int> letters, int alphabet);

  const std::vector<int>& letters() const noexcept { return letters_; }
  int alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Letters rendered as a, b, c, ... (numeric for alphabets above 26).
  std::string str() const;

  /// Standard factorization w = uv with v the longest proper Lyndon suffix.
  /// Only defined for length ≥ 2.
  std::pair<LyndonWord, LyndonWord> standard_factorization() const;

  /// Iterated bracket from the standard factorization, e.g. [a,[a,b]].
  std::string bracketing() const;

  friend bool operator==(const LyndonWord&, const LyndonWord&) = default;
  friend auto operator<=>(const LyndonWord& a, const LyndonWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
  int alphabet_;
};

bool is_lyndon(std::span<const int> word);

/// Lyndon words of each length 1..max_len, grouped by length
/// (result[ℓ-1]), lexicographic within each group. Duval's algorithm.
/// alphabet == 0 yields empty groups.
std::vector<std::vector<LyndonWord>> lyndon_words(int alphabet, int max_len);

/// Only the words of length exactly `len`.
std::vector<LyndonWord> lyndon_words_of_length(int alphabet, int len);

int mobius(std::int64_t n);

/// (1/ℓ) Σ_{d|ℓ} μ(d) g^{ℓ/d}, the dimension of the length-ℓ part of the free
/// Lie algebra on g generators.
BigInt witt_rank(int alphabet, int len);

/// Number of Lyndon words of each total weight e = 0..max_weight when letter
/// i has weight weights[i] ≥ 1 (result[0] = 0). Derived from the unique
/// factorization of words into non-increasing Lyndon words:
///   1/(1 - Σ x^{a_i}) = Π_e (1 - x^e)^{-L_e},
/// so with W(m) the number of words of weight m and
/// p_n = Σ_i a_i W(n - a_i), we get L_e = (1/e) Σ_{d|e} μ(e/d) p_d.
std::vector<BigInt> lyndon_counts_by_weight(std::span<const int> weights, int max_weight);

}  // namespace towercalc::lie
