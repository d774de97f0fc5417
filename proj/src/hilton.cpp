#include "towercalc/hilton.hpp"

#include <algorithm>

#include "towercalc/lie.hpp"

namespace towercalc::hilton {

SphereWedge::SphereWedge(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_)
    if (d < 2)
      throw Error(ErrorCode::InvariantViolation,
                  "dims: sphere dimension " + std::to_string(d) + " is below 2");
}

SphereWedge SphereWedge::copies(int t, int m) {
  if (t < 0) throw Error(ErrorCode::OutOfRange, "t: must be >= 0");
  return SphereWedge(std::vector<int>(static_cast<std::size_t>(t), m));
}

int SphereWedge::min_dim() const {
  if (dims_.empty()) throw Error(ErrorCode::OutOfRange, "empty wedge has no minimum dimension");
  return *std::min_element(dims_.begin(), dims_.end());
}

BigInt GradedRankTable::at(int q) const {
  if (!contains(q))
    throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(q) + " outside table range");
  auto it = entries_.find(q);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void GradedRankTable::add(int q, const BigInt& r) {
  if (!contains(q) || r == 0) return;
  entries_[q] += r;
}

int serre_rank(int q, int m) {
  if (m < 2) throw Error(ErrorCode::OutOfRange, "m: sphere dimension must be >= 2");
  if (q == m) return 1;
  if (m % 2 == 0 && q == 2 * m - 1) return 1;
  return 0;
}

GradedRankTable wedge_pi_ranks(const SphereWedge& w, int q_max) {
  GradedRankTable table(1, std::max(q_max, 0));
  if (w.dims().empty() || q_max < w.min_dim()) return table;

  std::vector<int> weights;
  for (int d : w.dims()) weights.push_back(d - 1);
  const auto counts = lie::lyndon_counts_by_weight(weights, q_max - 1);
  for (int e = 1; e <= q_max - 1; ++e) {
    const BigInt& n = counts[static_cast<std::size_t>(e)];
    if (n == 0) continue;
    const int dim = e + 1;
    table.add(dim, n);
    if (dim % 2 == 0) table.add(2 * dim - 1, n);
  }
  return table;
}

GradedRankTable looped_product_ranks(const SphereWedge& w, int t, int q_max) {
  if (t < 1) throw Error(ErrorCode::OutOfRange, "t: must be >= 1");
  GradedRankTable table(0, std::max(q_max, 0));
  const GradedRankTable base = wedge_pi_ranks(w, q_max + 1);
  for (const auto& [q, r] : base.entries()) table.add(q - 1, t * r);
  return table;
}

}  // namespace towercalc::hilton
