#include "towercalc/disklinks.hpp"

#include <limits>

#include "towercalc/hilton.hpp"

namespace towercalc::disklinks {

namespace {

void require_nonnegative(std::int64_t t) {
  if (t < 0) throw Error(ErrorCode::OutOfRange, "t: must be >= 0");
}

}  // namespace

BigInt pi0_cardinality(std::int64_t t) {
  require_nonnegative(t);
  return ipow(2, t);
}

BigInt GroupDescriptor::order() const { return ipow(cyclic_order, copies); }

std::string GroupDescriptor::str() const {
  if (trivial()) return "0";
  std::string s = "Z/" + std::to_string(cyclic_order);
  if (copies == 1) return s;
  return "(" + s + ")^" + std::to_string(copies);
}

GroupDescriptor pi1_description(std::int64_t t) {
  require_nonnegative(t);
  return {2, t};
}

SESRankReport ses_rank_report(std::int64_t n, std::int64_t t, std::int64_t m) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "n: must be >= 3");
  if (n % 2 != 0) throw Error(ErrorCode::ParityUnsupported, "n: only even n splits the sequence");
  if (t < 1) throw Error(ErrorCode::OutOfRange, "t: must be >= 1");
  if (m < 1) throw Error(ErrorCode::OutOfRange, "m: must be >= 1");

  const std::int64_t odd_degree = checked::add(checked::mul(2, m), 1);
  const std::int64_t top_degree = checked::add(checked::mul(2, m), n - 1);
  if (top_degree > std::numeric_limits<int>::max() || t > std::numeric_limits<int>::max() ||
      n > std::numeric_limits<int>::max())
    throw Error(ErrorCode::OutOfRange, "parameters too large");

  const auto wedge = hilton::SphereWedge::copies(static_cast<int>(t), static_cast<int>(n - 1));
  const auto r = hilton::wedge_pi_ranks(wedge, static_cast<int>(top_degree));

  SESRankReport rep;
  rep.m = m;
  rep.rank_b = t * r.at(static_cast<int>(odd_degree));
  rep.rank_c = r.at(static_cast<int>(top_degree));
  rep.upper_odd = rep.rank_b;
  rep.upper_even = rep.rank_c;
  rep.euler_relation = rep.rank_c - rep.rank_b;
  if (rep.rank_c == 0) {
    rep.exact_odd = rep.rank_b;
    rep.exact_even = 0;
  } else if (rep.rank_b == 0) {
    rep.exact_odd = 0;
    rep.exact_even = rep.rank_c;
  }
  return rep;
}

}  // namespace towercalc::disklinks
