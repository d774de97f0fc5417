#pragma once

#include <map>
#include <vector>

#include "towercalc/integer.hpp"

namespace towercalc::hilton {

/// Wedge of spheres S^{d_1} ∨ ... ∨ S^{d_g}, every d_i ≥ 2.
class SphereWedge {
 public:
  explicit SphereWedge(std::vector<int> dims);
  /// t copies of S^m.
  static SphereWedge copies(int t, int m);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int min_dim() const;

 private:
  std::vector<int> dims_;
};

/// Degree → rank over [q_min, q_max]. Only nonzero entries are stored.
class GradedRankTable {
 public:
  GradedRankTable(int q_min, int q_max) : q_min_(q_min), q_max_(q_max) {}

  int q_min() const noexcept { return q_min_; }
  int q_max() const noexcept { return q_max_; }
  bool contains(int q) const noexcept { return q >= q_min_ && q <= q_max_; }

  /// Rank in degree q; throws OutOfRange outside [q_min, q_max].
  BigInt at(int q) const;
  /// Adds to the rank in degree q; ignored outside the range.
  void add(int q, const BigInt& r);

  const std::map<int, BigInt>& entries() const noexcept { return entries_; }

  friend bool operator==(const GradedRankTable&, const GradedRankTable&) = default;

 private:
  int q_min_;
  int q_max_;
  std::map<int, BigInt> entries_;
};

/// Rank of π_q(S^m) ⊗ Q: 1 for q = m, 1 for q = 2m-1 when m is even, else 0.
int serre_rank(int q, int m);

/// Ranks of π_q(W) ⊗ Q for 1 ≤ q ≤ q_max via Hilton–Milnor.
///
/// Basic products are Lyndon words over the summands; a word with letter
/// multiplicities m_i corresponds to a sphere of dimension
/// D = 1 + Σ m_i (d_i - 1). That sphere contributes serre_rank(q, D), which
/// vanishes for q < D, so only words with D ≤ q_max matter; since each
/// letter adds at least 1 to D, the word weight is bounded by q_max - 1.
/// Words are counted per weight rather than listed.
GradedRankTable wedge_pi_ranks(const SphereWedge& w, int q_max);

/// Ranks of π_q(Ω Π_t W) ⊗ Q = t · rank π_{q+1}(W) ⊗ Q, for 0 ≤ q ≤ q_max.
GradedRankTable looped_product_ranks(const SphereWedge& w, int t, int q_max);

}  // namespace towercalc::hilton
