#include "towercalc/chains.hpp"

#include <algorithm>
#include <sstream>

#include "towercalc/smith.hpp"

namespace towercalc {

namespace {

std::string degree_msg(const char* what, Degree d) {
  std::ostringstream os;
  os << what << " (degree " << d << ")";
  return os.str();
}

std::size_t to_index(Degree d, Degree lo) { return static_cast<std::size_t>(d - lo); }

Vector column(const Matrix& m, std::size_t c) {
  Vector v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

// ChainComplex

ChainComplex::ChainComplex(Degree min_degree, std::vector<std::size_t> ranks,
                           std::map<Degree, Matrix> boundaries) {
  // Canonical form: no zero ranks at either end of the support.
  std::size_t first = 0;
  while (first < ranks.size() && ranks[first] == 0) ++first;
  std::size_t last = ranks.size();
  while (last > first && ranks[last - 1] == 0) --last;
  ranks_.assign(ranks.begin() + first, ranks.begin() + last);
  min_ = ranks_.empty() ? 0 : min_degree + static_cast<Degree>(first);

  for (const auto& [d, m] : boundaries) {
    if (m.rows() != rank(d - 1) || m.cols() != rank(d))
      throw Error(ErrorCode::ShapeMismatch,
                  degree_msg("boundaries: matrix shape does not match ranks", d));
  }
  boundaries_.reserve(ranks_.size());
  for (Degree d = min_; d <= max_degree(); ++d) {
    auto it = boundaries.find(d);
    boundaries_.push_back(it != boundaries.end() ? it->second
                                                 : Matrix(rank(d - 1), rank(d)));
  }
  for (Degree d = min_ + 1; d <= max_degree(); ++d) {
    if (!(boundary(d - 1) * boundary(d)).is_zero())
      throw Error(ErrorCode::InvariantViolation,
                  degree_msg("boundaries: composite of consecutive boundaries is nonzero", d));
  }
}

ChainComplex ChainComplex::free_on(const std::map<Degree, std::size_t>& ranks) {
  if (ranks.empty()) return {};
  const Degree lo = ranks.begin()->first;
  const Degree hi = ranks.rbegin()->first;
  std::vector<std::size_t> r(to_index(hi, lo) + 1, 0);
  for (const auto& [d, n] : ranks) r[to_index(d, lo)] = n;
  return ChainComplex(lo, std::move(r));
}

std::size_t ChainComplex::rank(Degree d) const noexcept {
  if (ranks_.empty() || d < min_ || d > max_degree()) return 0;
  return ranks_[to_index(d, min_)];
}

Matrix ChainComplex::boundary(Degree d) const {
  if (!ranks_.empty() && d >= min_ && d <= max_degree()) return boundaries_[to_index(d, min_)];
  return Matrix(rank(d - 1), rank(d));
}

// ChainMap

ChainMap::ChainMap(ChainComplex source, ChainComplex target,
                   std::map<Degree, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [d, m] : components) {
    if (m.rows() != target_.rank(d) || m.cols() != source_.rank(d))
      throw Error(ErrorCode::ShapeMismatch,
                  degree_msg("components: matrix shape does not match ranks", d));
  }
  for (Degree d = source_.min_degree(); d <= source_.max_degree(); ++d) {
    if (source_.rank(d) == 0 || target_.rank(d) == 0) continue;
    auto it = components.find(d);
    components_[d] = it != components.end() ? it->second
                                            : Matrix(target_.rank(d), source_.rank(d));
  }
  if (source_.empty()) return;
  for (Degree d = source_.min_degree(); d <= source_.max_degree() + 1; ++d) {
    if (!(target_.boundary(d) * component(d) == component(d - 1) * source_.boundary(d)))
      throw Error(ErrorCode::InvariantViolation,
                  degree_msg("components: map does not commute with boundaries", d));
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<Degree, Matrix> comps;
  for (Degree d = c.min_degree(); d <= c.max_degree(); ++d)
    comps[d] = Matrix::identity(c.rank(d));
  return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return ChainMap(source, target, {});
}

Matrix ChainMap::component(Degree d) const {
  auto it = components_.find(d);
  if (it != components_.end()) return it->second;
  return Matrix(target_.rank(d), source_.rank(d));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorCode::ShapeMismatch, "compose: target of f is not the source of g");
  std::map<Degree, Matrix> comps;
  const auto& s = f.source();
  for (Degree d = s.min_degree(); d <= s.max_degree(); ++d)
    comps[d] = g.component(d) * f.component(d);
  return ChainMap(f.source(), g.target(), std::move(comps));
}

// Homology

std::string to_string(const HomologyGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.betti > 0) {
    os << "Z";
    if (g.betti > 1) os << "^" << g.betti;
    first = false;
  }
  for (const auto& t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

const HomologyGroup& HomologySummary::at(Degree d) const {
  static const HomologyGroup zero{};
  auto it = groups.find(d);
  return it == groups.end() ? zero : it->second;
}

long long HomologySummary::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [d, g] : groups) {
    const auto b = static_cast<long long>(g.betti);
    chi += (d % 2 == 0) ? b : -b;
  }
  return chi;
}

namespace {

HomologyGroup group_from(std::size_t generators, std::size_t outgoing_rank,
                         const std::vector<BigInt>& incoming_factors) {
  HomologyGroup g;
  g.betti = generators - outgoing_rank - incoming_factors.size();
  for (const auto& f : incoming_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace

HomologyGroup homology_at(const ChainComplex& c, Degree d) {
  return group_from(c.rank(d), matrix_rank(c.boundary(d)),
                    invariant_factors(c.boundary(d + 1)));
}

HomologySummary homology(const ChainComplex& c) {
  HomologySummary out;
  if (c.empty()) return out;
  // factors[i] are the invariant factors of ∂_{min+i}, i = 0 .. size.
  std::vector<std::vector<BigInt>> factors;
  for (Degree d = c.min_degree(); d <= c.max_degree() + 1; ++d)
    factors.push_back(invariant_factors(c.boundary(d)));
  for (Degree d = c.min_degree(); d <= c.max_degree(); ++d) {
    const std::size_t i = to_index(d, c.min_degree());
    HomologyGroup g = group_from(c.rank(d), factors[i].size(), factors[i + 1]);
    if (!g.is_zero()) out.groups.emplace(d, std::move(g));
  }
  return out;
}

HomologyBasis::HomologyBasis(const ChainComplex& c, Degree d)
    : outgoing_(c.boundary(d)) {
  const std::size_t n = c.rank(d);
  const SmithForm incoming = smith_normal_form(c.boundary(d + 1));
  left_ = incoming.left;
  image_rank_ = incoming.rank();

  for (std::size_t i = 0; i < image_rank_; ++i)
    if (incoming.factors[i] > 1) {
      torsion_rows_.push_back(i);
      group_.torsion.push_back(incoming.factors[i]);
    }
  torsion_gens_ = Matrix(n, torsion_rows_.size());
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k)
    for (std::size_t r = 0; r < n; ++r)
      torsion_gens_(r, k) = incoming.left_inverse(r, torsion_rows_[k]);

  // In U-coordinates the first image_rank_ basis vectors are cycles, so the
  // free part is the kernel of ∂_d restricted to the remaining coordinates.
  const Matrix complement = column_range(incoming.left_inverse, image_rank_, n - image_rank_);
  const SmithForm restricted = smith_normal_form(outgoing_ * complement);
  complement_rank_ = restricted.rank();
  complement_right_inverse_ = restricted.right_inverse;
  group_.betti = n - image_rank_ - complement_rank_;
  free_gens_ = complement * column_range(restricted.right, complement_rank_, group_.betti);
}

Vector HomologyBasis::coordinates(const Vector& cycle) const {
  if (cycle.size() != left_.cols())
    throw Error(ErrorCode::ShapeMismatch, "coordinates: vector length differs from rank");
  if (!all_zero(outgoing_ * cycle))
    throw Error(ErrorCode::InvariantViolation, "coordinates: vector is not a cycle");
  const Vector y = left_ * cycle;
  Vector tail(y.begin() + static_cast<std::ptrdiff_t>(image_rank_), y.end());
  const Vector c = complement_right_inverse_ * tail;

  Vector out;
  out.reserve(group_.betti + torsion_rows_.size());
  for (std::size_t i = 0; i < group_.betti; ++i) out.push_back(c[complement_rank_ + i]);
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) {
    BigInt r = y[torsion_rows_[k]] % group_.torsion[k];
    if (r < 0) r += group_.torsion[k];
    out.push_back(r);
  }
  return out;
}

Matrix induced_map_free(const ChainMap& f, Degree d) {
  const HomologyBasis src(f.source(), d);
  const HomologyBasis tgt(f.target(), d);
  const Matrix fd = f.component(d);
  Matrix out(tgt.group().betti, src.group().betti);
  for (std::size_t j = 0; j < src.group().betti; ++j) {
    const Vector coords = tgt.coordinates(fd * column(src.free_generators(), j));
    for (std::size_t i = 0; i < tgt.group().betti; ++i) out(i, j) = coords[i];
  }
  return out;
}

// Constructions

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  if (s.empty() && t.empty()) return {};
  Degree lo = 0, hi = 0;
  bool have = false;
  auto extend = [&](Degree a, Degree b) {
    lo = have ? std::min(lo, a) : a;
    hi = have ? std::max(hi, b) : b;
    have = true;
  };
  if (!t.empty()) extend(t.min_degree(), t.max_degree());
  if (!s.empty()) extend(s.min_degree() + 1, s.max_degree() + 1);

  std::vector<std::size_t> ranks;
  std::map<Degree, Matrix> bd;
  for (Degree d = lo; d <= hi; ++d) {
    ranks.push_back(t.rank(d) + s.rank(d - 1));
    bd[d] = block(t.boundary(d), f.component(d - 1),
                  Matrix(s.rank(d - 2), t.rank(d)), -s.boundary(d - 1));
  }
  return ChainComplex(lo, std::move(ranks), std::move(bd));
}

bool is_split_injective(const ChainMap& f) {
  const ChainComplex& s = f.source();
  for (Degree d = s.min_degree(); d <= s.max_degree(); ++d) {
    const auto factors = invariant_factors(f.component(d));
    if (factors.size() != s.rank(d)) return false;
    for (const auto& x : factors)
      if (x != 1) return false;
  }
  return true;
}

ChainComplex quotient_complex(const ChainMap& sub) {
  if (!is_split_injective(sub))
    throw Error(ErrorCode::NotInjective, "sub: not a degreewise split injection");
  const ChainComplex& c = sub.target();
  if (c.empty()) return {};

  // Projection onto and section of the complement of image(sub) in each degree.
  std::map<Degree, Matrix> project, lift;
  std::vector<std::size_t> ranks;
  for (Degree d = c.min_degree() - 1; d <= c.max_degree(); ++d) {
    const std::size_t total = c.rank(d);
    const std::size_t inner = sub.source().rank(d);
    const SmithForm snf = smith_normal_form(sub.component(d));
    project[d] = row_range(snf.left, inner, total - inner);
    lift[d] = column_range(snf.left_inverse, inner, total - inner);
    if (d >= c.min_degree()) ranks.push_back(total - inner);
  }
  std::map<Degree, Matrix> bd;
  for (Degree d = c.min_degree(); d <= c.max_degree(); ++d)
    bd[d] = project[d - 1] * c.boundary(d) * lift[d];
  return ChainComplex(c.min_degree(), std::move(ranks), std::move(bd));
}

HomologySummary relative_homology(const ChainComplex& c, const ChainMap& sub) {
  if (!(sub.target() == c))
    throw Error(ErrorCode::ShapeMismatch, "sub: target is not the ambient complex");
  return homology(quotient_complex(sub));
}

ChainComplex shift(const ChainComplex& c, int k) {
  if (c.empty()) return {};
  std::vector<std::size_t> ranks;
  std::map<Degree, Matrix> bd;
  for (Degree d = c.min_degree(); d <= c.max_degree(); ++d) {
    ranks.push_back(c.rank(d));
    bd[d + k] = (k % 2 == 0) ? c.boundary(d) : -c.boundary(d);
  }
  return ChainComplex(c.min_degree() + k, std::move(ranks), std::move(bd));
}

ChainComplex suspension(const ChainComplex& c) {
  if (!c.empty() && c.min_degree() < 0)
    throw Error(ErrorCode::InvariantViolation,
                "suspension: complex has generators in negative degrees");
  const std::size_t base = c.rank(0) > 0 ? 1 : 0;
  std::vector<std::size_t> ranks{1, c.rank(0) - base};
  std::map<Degree, Matrix> bd;
  bd[1] = Matrix(1, c.rank(0) - base);
  if (!c.empty()) {
    for (Degree d = 1; d <= c.max_degree(); ++d) ranks.push_back(c.rank(d));
    const Matrix d1 = c.boundary(1);
    bd[2] = -row_range(d1, base, d1.rows() - base);
    for (Degree d = 2; d <= c.max_degree(); ++d) bd[d + 1] = -c.boundary(d);
  }
  return ChainComplex(0, std::move(ranks), std::move(bd));
}

// Verification

std::string to_string(DesuspensionVerdict v) {
  switch (v) {
    case DesuspensionVerdict::Match: return "MATCH";
    case DesuspensionVerdict::Mismatch: return "MISMATCH";
    case DesuspensionVerdict::InvalidSectioning: return "INVALID_SECTIONING";
  }
  return "UNKNOWN";
}

std::string to_string(NormalInvariantVerdict v) {
  return v == NormalInvariantVerdict::IsNormalInvariant ? "IS_NORMAL_INVARIANT" : "NOT";
}

DesuspensionReport verify_desuspension(const ChainComplex& p,
                                       const ChainMap& boundary_inclusion,
                                       const ChainMap& section) {
  DesuspensionReport report;
  if (!(boundary_inclusion.target() == p)) {
    report.reason = "boundary inclusion does not land in P";
    return report;
  }
  if (!(section.target() == boundary_inclusion.source())) {
    report.reason = "section does not land in the boundary complex";
    return report;
  }
  if (!is_split_injective(boundary_inclusion)) {
    report.reason = "boundary inclusion is not a degreewise split injection";
    return report;
  }

  const ChainComplex cone = mapping_cone(section);
  const HomologySummary cone_h = homology(cone);
  const HomologySummary rel_h = relative_homology(p, boundary_inclusion);
  report.composite_quasi_iso =
      homology(mapping_cone(compose(boundary_inclusion, section))).is_zero();

  Degree lo = p.min_degree(), hi = p.max_degree();
  if (!cone.empty()) {
    lo = std::min(lo, cone.min_degree() + 1);
    hi = std::max(hi, cone.max_degree() + 1);
  }
  bool all = true;
  for (Degree k = lo; k <= hi; ++k) {
    DesuspensionRow row{k, cone_h.at(k - 1), rel_h.at(k), false};
    row.match = row.cone == row.relative;
    all = all && row.match;
    report.rows.push_back(std::move(row));
  }
  report.verdict = all ? DesuspensionVerdict::Match : DesuspensionVerdict::Mismatch;
  return report;
}

NormalInvariantReport check_normal_invariant(const ChainMap& alpha,
                                             const ChainComplex& p,
                                             const ChainMap& boundary_inclusion,
                                             const ChainMap& section, int n) {
  const HomologySummary rel = relative_homology(p, boundary_inclusion);
  if (!rel.at(n).is_infinite_cyclic())
    throw Error(ErrorCode::NotOrientableOrDisconnected,
                "P: H_n(P, boundary) is " + to_string(rel.at(n)) + ", not Z");
  if (!(section.target() == boundary_inclusion.source()))
    throw Error(ErrorCode::InvalidSectioning, "section does not land in the boundary complex");
  const ChainComplex cone = mapping_cone(section);
  if (!(alpha.target() == cone))
    throw Error(ErrorCode::InvalidSectioning, "alpha: target is not the Thom-space model");

  const HomologyBasis sphere(alpha.source(), n - 1);
  if (!sphere.group().is_infinite_cyclic())
    throw Error(ErrorCode::ShapeMismatch, "alpha: source does not have H_{n-1} = Z");
  const HomologyBasis thom(cone, n - 1);
  if (!thom.group().is_infinite_cyclic())
    throw Error(ErrorCode::InvalidSectioning,
                "section: H_{n-1} of the Thom-space model is " + to_string(thom.group()));

  const Vector image = alpha.component(n - 1) * column(sphere.free_generators(), 0);
  const BigInt coeff = thom.coordinates(image).at(0);
  const bool unit = coeff == 1 || coeff == -1;
  return {unit ? NormalInvariantVerdict::IsNormalInvariant
               : NormalInvariantVerdict::NotNormalInvariant,
          coeff};
}

}  // namespace towercalc
