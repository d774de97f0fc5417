#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "towercalc/matrix.hpp"

namespace towercalc {

using Degree = int;

/// Bounded, finitely generated free chain complex over Z.
///
/// Generators live in degrees [min_degree, max_degree]; every other degree
/// is zero. `boundary(d)` is the matrix of ∂_d : C_d → C_{d-1}, shaped
/// rank(d-1) × rank(d). Construction validates shapes and ∂∘∂ = 0, so every
/// ChainComplex value satisfies its invariants.
class ChainComplex {
 public:
  /// The zero complex.
  ChainComplex() = default;

  /// `boundaries` maps a degree d to ∂_d. Missing entries are zero maps.
  ChainComplex(Degree min_degree, std::vector<std::size_t> ranks,
               std::map<Degree, Matrix> boundaries = {});

  /// Free complex with the given ranks and zero differential.
  static ChainComplex free_on(const std::map<Degree, std::size_t>& ranks);

  Degree min_degree() const noexcept { return min_; }
  Degree max_degree() const noexcept { return min_ + static_cast<Degree>(ranks_.size()) - 1; }
  bool empty() const noexcept { return ranks_.empty(); }

  std::size_t rank(Degree d) const noexcept;
  /// ∂_d, shape rank(d-1) × rank(d); a correctly shaped zero outside the support.
  Matrix boundary(Degree d) const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  Degree min_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> boundaries_;  // boundaries_[i] = ∂_{min_+i}
};

/// Degreewise integer matrices f_d : source_d → target_d commuting with ∂.
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target,
           std::map<Degree, Matrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  /// f_d, shape target.rank(d) × source.rank(d).
  Matrix component(Degree d) const;

  friend bool operator==(const ChainMap&, const ChainMap&) = default;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<Degree, Matrix> components_;
};

/// g ∘ f. Requires f.target() == g.source().
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// H_d ≅ Z^betti ⊕ ⊕ Z/t_i with t_1 | t_2 | ... and every t_i > 1.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  bool is_infinite_cyclic() const { return betti == 1 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string to_string(const HomologyGroup& g);

struct HomologySummary {
  std::map<Degree, HomologyGroup> groups;  // only nonzero groups are stored

  const HomologyGroup& at(Degree d) const;
  bool is_zero() const { return groups.empty(); }
  std::size_t betti(Degree d) const { return at(d).betti; }
  /// Σ (-1)^d betti_d
  long long euler_characteristic() const;

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

HomologySummary homology(const ChainComplex& c);
HomologyGroup homology_at(const ChainComplex& c, Degree d);

/// Explicit presentation of H_d: cycle representatives for each generator and
/// a map from cycles to their class coordinates.
class HomologyBasis {
 public:
  HomologyBasis(const ChainComplex& c, Degree d);

  const HomologyGroup& group() const noexcept { return group_; }
  /// Columns are cycles representing the free generators.
  const Matrix& free_generators() const noexcept { return free_gens_; }
  /// Columns are cycles representing the torsion generators, in the order of
  /// group().torsion.
  const Matrix& torsion_generators() const noexcept { return torsion_gens_; }

  /// Coordinates of the class of `cycle`: betti free coordinates followed by
  /// one coordinate per torsion factor, reduced into [0, t_i).
  /// Throws InvariantViolation if `cycle` is not a cycle.
  Vector coordinates(const Vector& cycle) const;

 private:
  HomologyGroup group_;
  Matrix outgoing_;          // ∂_d
  Matrix left_;              // U with U·∂_{d+1}·V = D
  std::vector<std::size_t> torsion_rows_;
  std::size_t image_rank_ = 0;
  Matrix complement_right_inverse_;  // V'^{-1} for the complement kernel
  std::size_t complement_rank_ = 0;
  Matrix free_gens_;
  Matrix torsion_gens_;
};

/// Matrix of f_* : H_d(source) → H_d(target) on free parts.
Matrix induced_map_free(const ChainMap& f, Degree d);

/// Algebraic mapping cone. cone_d = target_d ⊕ source_{d-1} with
///   ∂ = [[∂_target, f_{d-1}], [0, -∂_source]].
/// This sign convention is used everywhere in the library. Its homology is
/// the reduced homology of the topological mapping cone.
ChainComplex mapping_cone(const ChainMap& f);

/// True iff every component is injective with torsion-free cokernel.
bool is_split_injective(const ChainMap& f);

/// Quotient complex target/image(sub). Throws NotInjective unless sub is a
/// degreewise split injection.
ChainComplex quotient_complex(const ChainMap& sub);

/// H_*(C, sub) computed as the homology of C/sub.
HomologySummary relative_homology(const ChainComplex& c, const ChainMap& sub);

/// Plain algebraic shift: (C[k])_{d} = C_{d-k}, ∂ multiplied by (-1)^k.
ChainComplex shift(const ChainComplex& c, int k);

/// Reduced suspension of a pointed cellular complex. The basepoint is the
/// first degree-0 generator (if any); it is collapsed, a fresh degree-0
/// basepoint is added, and every other cell moves up one degree. Hence
/// H_0(ΣC) = Z and H_{d+1}(ΣC) = H̃_d(C).
/// Throws InvariantViolation for complexes with negative degrees.
ChainComplex suspension(const ChainComplex& c);

// Verification of the desuspension and normal-invariant conditions.

enum class DesuspensionVerdict { Match, Mismatch, InvalidSectioning };

std::string to_string(DesuspensionVerdict v);

struct DesuspensionRow {
  Degree degree;            // k: compares H_{k-1}(cone) with H_k(P, ∂P)
  HomologyGroup cone;       // H_{k-1}(mapping_cone(section))
  HomologyGroup relative;   // H_k(P, ∂P)
  bool match;
};

struct DesuspensionReport {
  DesuspensionVerdict verdict = DesuspensionVerdict::InvalidSectioning;
  std::vector<DesuspensionRow> rows;
  /// Whether K → ∂P → P induces an isomorphism on homology.
  bool composite_quasi_iso = false;
  std::string reason;  // set for InvalidSectioning
};

/// Compares the homology of the Thom-space model mapping_cone(section)
/// against H_*(P, ∂P) one degree up.
DesuspensionReport verify_desuspension(const ChainComplex& p,
                                       const ChainMap& boundary_inclusion,
                                       const ChainMap& section);

enum class NormalInvariantVerdict { IsNormalInvariant, NotNormalInvariant };

std::string to_string(NormalInvariantVerdict v);

struct NormalInvariantReport {
  NormalInvariantVerdict verdict;
  /// α_*[S^{n-1}] as a multiple of the generator of H_{n-1}(P^ξ) ≅ Z.
  BigInt image;
};

/// `alpha` maps a chain model of S^{n-1} into mapping_cone(section).
/// Throws NotOrientableOrDisconnected unless H_n(P, ∂P) ≅ Z,
/// InvalidSectioning if alpha's target is not the cone or H_{n-1}(cone) ≇ Z,
/// ShapeMismatch if alpha's source does not have H_{n-1} ≅ Z.
NormalInvariantReport check_normal_invariant(const ChainMap& alpha,
                                             const ChainComplex& p,
                                             const ChainMap& boundary_inclusion,
                                             const ChainMap& section, int n);

}  // namespace towercalc
