#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "towercalc/hilton.hpp"
#include "towercalc/integer.hpp"

namespace towercalc::tower {

/// n: ambient dimension, k: CW/handle dimension bound, j: tower stage,
/// t: optional number of components.
struct TowerParams {
  std::int64_t n;
  std::int64_t k;
  std::int64_t j;
  std::optional<std::int64_t> t;

  /// Throws InvariantViolation unless n ≥ 3, k ≥ 0, j ≥ 1, n - k ≥ 3, t ≥ 1.
  void validate() const;
};

/// Finitely supported rational Betti numbers of P, vanishing above `dim_bound`.
class BettiVector {
 public:
  BettiVector(std::map<int, BigInt> betti, int dim_bound);
  /// Betti vector of `t` points: {0: t}, dimension bound 0.
  static BettiVector points(std::int64_t t);

  const std::map<int, BigInt>& betti() const noexcept { return betti_; }
  int dim_bound() const noexcept { return dim_bound_; }
  /// Coefficients of the Poincaré polynomial, degrees 0..dim_bound.
  std::vector<BigInt> poincare_polynomial() const;

 private:
  std::map<int, BigInt> betti_;
  int dim_bound_;
};

/// True when a connectivity is at or below the (-2) convention for the empty
/// space; such values are reported verbatim with a note.
constexpr bool below_empty_convention(std::int64_t connectivity) { return connectivity <= -2; }

/// 2 - n + (j+1)(n-k-2)
std::int64_t phi_connectivity(std::int64_t n, std::int64_t k, std::int64_t j);

/// 2 - n + j(n-k-2); requires j ≥ 2.
std::int64_t stage_map_connectivity(std::int64_t n, std::int64_t k, std::int64_t j);

/// (j+1)k + 2j ≤ jn
bool convergence_check(std::int64_t n, std::int64_t k, std::int64_t j);

enum class CodimVerdict { Certified, NotCertified, NotApplicable };

/// Homotopy codimension ≥ n - cw_dim is certified when ∂P → P is
/// 2-connected and P is a CW complex of dimension ≤ cw_dim. Only applicable
/// when n - cw_dim ≥ 3.
CodimVerdict codim_check(std::int64_t boundary_map_connectivity, std::int64_t cw_dim,
                         std::int64_t n);

/// (n-2)(j-1) + 1; requires j ≥ 2.
std::int64_t obstruction_degree(std::int64_t n, std::int64_t j);

/// Coefficients of P(x)^j where P is the Poincaré polynomial of b.
std::vector<BigInt> kunneth_power(const BettiVector& b, std::int64_t j);

/// (j-1)! · dim H^s(P^{×j}; Q) with s = obstruction_degree(n, j).
BigInt obstruction_group_rank(const BettiVector& b, std::int64_t n, std::int64_t j);

/// Unequivariant rational ranks of the layer mapping spectrum before taking
/// homotopy orbits. The coefficient spectrum is a wedge of (j-1)! spheres of
/// dimension (j-1)(n-2), so the rank in degree q is
/// (j-1)! · dim H^{(j-1)(n-2)-q}(P^{×j}; Q).
/// The homotopy-orbit layer has rank at most this, hence `upper_bound`.
struct LayerProfile {
  std::int64_t top_degree;
  hilton::GradedRankTable table;
  bool upper_bound = true;
};

/// Default range is [top_degree - j·dim_bound, top_degree].
LayerProfile layer_profile(const BettiVector& b, std::int64_t n, std::int64_t j,
                           std::optional<std::pair<int, int>> q_range = std::nullopt);
LayerProfile layer_profile(std::int64_t points, std::int64_t n, std::int64_t j,
                           std::optional<std::pair<int, int>> q_range = std::nullopt);

struct ComparisonConnectivities {
  std::int64_t pt;             // 2n - 3k - 6
  std::int64_t decompression;  // 2n - 3k - 4
  std::int64_t a;              // 2n - 3k - 5
  // Stage-dependent maps; present when j ≥ 2.
  std::optional<std::int64_t> b_raw;  // (j+1)(n-2) + 2 - n
  std::optional<std::int64_t> b;      // j(n-k-2) = b_raw - jk
  std::optional<std::int64_t> e;      // (j-1)(n-2) - k - 1
};

ComparisonConnectivities comparison_connectivities(std::int64_t n, std::int64_t k,
                                                   std::int64_t j);

}  // namespace towercalc::tower
