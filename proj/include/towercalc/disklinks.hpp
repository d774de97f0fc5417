#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "towercalc/integer.hpp"

namespace towercalc::disklinks {

// Embeddings of D^n × T in D^n, |T| = t.

/// |π_0| = 2^t.
BigInt pi0_cardinality(std::int64_t t);

/// (Z/cyclic_order)^copies.
struct GroupDescriptor {
  int cyclic_order;
  std::int64_t copies;

  BigInt order() const;
  bool trivial() const { return copies == 0; }
  std::string str() const;
};

/// π_1 ≅ (Z/2)^t.
GroupDescriptor pi1_description(std::int64_t t);

/// Rank data of the four-term exact sequence
///   0 → π_{2m+1}(E)_Q → ⊕_T π_{2m+1}(W)_Q → π_{2m+n-1}(W)_Q → π_{2m}(E)_Q → 0
/// with W the wedge of t copies of S^{n-1} and r_q = rank π_q(W)_Q.
/// The connecting map is unknown, so only bounds are available in general;
/// when one middle term vanishes the ranks are forced and reported exactly.
struct SESRankReport {
  std::int64_t m;
  BigInt rank_b;          // t · r_{2m+1}
  BigInt rank_c;          // r_{2m+n-1}
  BigInt upper_odd;       // bound for rank π_{2m+1}(E)_Q
  BigInt upper_even;      // bound for rank π_{2m}(E)_Q
  BigInt euler_relation;  // rank_c - rank_b = rank π_{2m} - rank π_{2m+1}
  std::optional<BigInt> exact_odd;
  std::optional<BigInt> exact_even;

  bool exact() const { return exact_odd.has_value(); }
};

/// Requires n ≥ 3 (OutOfRange), n even (ParityUnsupported), t ≥ 1 and
/// m ≥ 1 (OutOfRange).
SESRankReport ses_rank_report(std::int64_t n, std::int64_t t, std::int64_t m);

}  // namespace towercalc::disklinks
