#include "towercalc/tower.hpp"

#include <limits>
#include <string>

namespace towercalc::tower {

using checked::add;
using checked::mul;
using checked::sub;

void TowerParams::validate() const {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvariantViolation, msg); };
  if (n < 3) bad("n: ambient dimension must be >= 3");
  if (k < 0) bad("k: dimension bound must be >= 0");
  if (j < 1) bad("j: tower stage must be >= 1");
  if (sub(n, k) < 3) bad("k: codimension n - k must be >= 3");
  if (t && *t < 1) bad("t: must be >= 1");
}

namespace {

void require_stage2(std::int64_t j) {
  if (j < 2) throw Error(ErrorCode::OutOfRange, "j: must be >= 2");
}

// n - k - 2
std::int64_t excess(std::int64_t n, std::int64_t k) { return sub(sub(n, k), 2); }

BigInt coefficient(const std::vector<BigInt>& poly, std::int64_t degree) {
  if (degree < 0 || degree >= static_cast<std::int64_t>(poly.size())) return 0;
  return poly[static_cast<std::size_t>(degree)];
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

int to_degree(std::int64_t v) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw Error(ErrorCode::ArithmeticOverflow, "degree does not fit in int");
  return static_cast<int>(v);
}

}  // namespace

BettiVector::BettiVector(std::map<int, BigInt> betti, int dim_bound)
    : betti_(std::move(betti)), dim_bound_(dim_bound) {
  if (dim_bound_ < 0) throw Error(ErrorCode::InvariantViolation, "k: dimension bound must be >= 0");
  for (auto it = betti_.begin(); it != betti_.end();) {
    const auto& [d, v] = *it;
    if (v < 0)
      throw Error(ErrorCode::InvariantViolation, "b[" + std::to_string(d) + "]: negative");
    if (v != 0 && (d < 0 || d > dim_bound_))
      throw Error(ErrorCode::InvariantViolation,
                  "b[" + std::to_string(d) + "]: nonzero outside [0, k]");
    it = (v == 0) ? betti_.erase(it) : std::next(it);
  }
  auto zero = betti_.find(0);
  if (zero == betti_.end() || zero->second < 1)
    throw Error(ErrorCode::InvariantViolation, "b[0]: must be >= 1");
}

BettiVector BettiVector::points(std::int64_t t) {
  if (t < 1) throw Error(ErrorCode::OutOfRange, "t: must be >= 1");
  return BettiVector({{0, BigInt(t)}}, 0);
}

std::vector<BigInt> BettiVector::poincare_polynomial() const {
  std::vector<BigInt> p(static_cast<std::size_t>(dim_bound_) + 1, BigInt(0));
  for (const auto& [d, v] : betti_) p[static_cast<std::size_t>(d)] = v;
  return p;
}

std::int64_t phi_connectivity(std::int64_t n, std::int64_t k, std::int64_t j) {
  TowerParams{n, k, j, std::nullopt}.validate();
  return add(sub(2, n), mul(add(j, 1), excess(n, k)));
}

std::int64_t stage_map_connectivity(std::int64_t n, std::int64_t k, std::int64_t j) {
  require_stage2(j);
  TowerParams{n, k, j, std::nullopt}.validate();
  return add(sub(2, n), mul(j, excess(n, k)));
}

bool convergence_check(std::int64_t n, std::int64_t k, std::int64_t j) {
  return add(mul(add(j, 1), k), mul(2, j)) <= mul(j, n);
}

CodimVerdict codim_check(std::int64_t boundary_map_connectivity, std::int64_t cw_dim,
                         std::int64_t n) {
  if (sub(n, cw_dim) < 3) return CodimVerdict::NotApplicable;
  return boundary_map_connectivity >= 2 ? CodimVerdict::Certified : CodimVerdict::NotCertified;
}

std::int64_t obstruction_degree(std::int64_t n, std::int64_t j) {
  require_stage2(j);
  return add(mul(sub(n, 2), sub(j, 1)), 1);
}

std::vector<BigInt> kunneth_power(const BettiVector& b, std::int64_t j) {
  if (j < 0) throw Error(ErrorCode::OutOfRange, "j: must be >= 0");
  std::vector<BigInt> result{BigInt(1)};
  std::vector<BigInt> base = b.poincare_polynomial();
  while (j > 0) {
    if (j & 1) result = convolve(result, base);
    j >>= 1;
    if (j) base = convolve(base, base);
  }
  return result;
}

BigInt obstruction_group_rank(const BettiVector& b, std::int64_t n, std::int64_t j) {
  const std::int64_t s = obstruction_degree(n, j);
  return factorial(j - 1) * coefficient(kunneth_power(b, j), s);
}

LayerProfile layer_profile(const BettiVector& b, std::int64_t n, std::int64_t j,
                           std::optional<std::pair<int, int>> q_range) {
  require_stage2(j);
  const std::int64_t top = mul(sub(j, 1), sub(n, 2));
  const std::int64_t span = mul(j, b.dim_bound());
  const auto [lo, hi] = q_range.value_or(std::pair{to_degree(sub(top, span)), to_degree(top)});
  if (lo > hi) throw Error(ErrorCode::OutOfRange, "q_range: lower end above upper end");

  LayerProfile out{top, hilton::GradedRankTable(lo, hi), true};
  const auto poly = kunneth_power(b, j);
  const BigInt copies = factorial(j - 1);
  for (int q = lo; q <= hi; ++q) out.table.add(q, copies * coefficient(poly, sub(top, q)));
  return out;
}

LayerProfile layer_profile(std::int64_t points, std::int64_t n, std::int64_t j,
                           std::optional<std::pair<int, int>> q_range) {
  return layer_profile(BettiVector::points(points), n, j, q_range);
}

ComparisonConnectivities comparison_connectivities(std::int64_t n, std::int64_t k,
                                                   std::int64_t j) {
  TowerParams{n, k, j, std::nullopt}.validate();
  const std::int64_t base = sub(mul(2, n), mul(3, k));
  ComparisonConnectivities c{sub(base, 6), sub(base, 4), sub(base, 5), {}, {}, {}};
  if (j >= 2) {
    c.b_raw = sub(add(mul(add(j, 1), sub(n, 2)), 2), n);
    c.b = mul(j, excess(n, k));
    c.e = sub(sub(mul(sub(j, 1), sub(n, 2)), k), 1);
  }
  return c;
}

}  // namespace towercalc::tower
