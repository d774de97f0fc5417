#include "fixtures.hpp"

#include <map>

namespace fixtures {

using towercalc::BigInt;
using towercalc::Degree;

ChainComplex point() { return ChainComplex::free_on({{0, 1}}); }

ChainComplex sphere(int m) { return ChainComplex::free_on({{0, 1}, {m, 1}}); }

ChainComplex rp2() { return ChainComplex(0, {1, 1, 1}, {{2, Matrix{{2}}}}); }

ChainComplex two_circles() { return ChainComplex::free_on({{0, 2}, {1, 2}}); }

DiskPair disk_pair(int n) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  ranks[0] = 1;
  ranks[static_cast<std::size_t>(n - 1)] += 1;
  ranks[static_cast<std::size_t>(n)] = 1;
  std::map<Degree, Matrix> bd;
  bd[n] = Matrix(ranks[static_cast<std::size_t>(n - 1)], 1);
  bd[n](ranks[static_cast<std::size_t>(n - 1)] - 1, 0) = 1;
  ChainComplex disk(0, ranks, bd);
  ChainComplex boundary = sphere(n - 1);

  std::map<Degree, Matrix> inc;
  if (n - 1 == 0) {
    inc[0] = Matrix{{1}, {1}};
  } else {
    inc[0] = Matrix{{1}};
    inc[n - 1] = Matrix{{1}};
  }
  ChainMap inclusion(boundary, disk, inc);
  ChainMap section(point(), boundary, {{0, Matrix{{1}}}});
  ChainComplex thom = towercalc::mapping_cone(section);
  return {n, disk, boundary, inclusion, section, thom};
}

ChainMap sphere_to_thom(const DiskPair& p, long deg) {
  const int m = p.n - 1;
  Matrix top(p.thom.rank(m), 1);
  top(0, 0) = deg;
  return ChainMap(sphere(m), p.thom, {{0, Matrix{{1}}}, {m, top}});
}

CylinderPair cylinder_pair() {
  // Cells: v0 v1 | a0 a1 e | F, with ∂e = v1 - v0 and ∂F = a0 - a1.
  ChainComplex cyl(0, {2, 3, 1},
                   {{1, Matrix{{0, 0, -1}, {0, 0, 1}}}, {2, Matrix{{1}, {-1}, {0}}}});
  ChainComplex bd = two_circles();
  ChainComplex core = sphere(1);
  ChainMap inclusion(bd, cyl, {{0, Matrix::identity(2)}, {1, Matrix{{1, 0}, {0, 1}, {0, 0}}}});
  ChainMap section(core, bd, {{0, Matrix{{1}, {0}}}, {1, Matrix{{1}, {0}}}});
  ChainMap bad(core, bd, {{0, Matrix{{1}, {0}}}, {1, Matrix{{2}, {0}}}});
  return {cyl, bd, core, inclusion, section, bad};
}

namespace {

struct Unimodular {
  Matrix g;
  Matrix inverse;
};

Unimodular random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Unimodular u{Matrix::identity(n), Matrix::identity(n)};
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-1, 1);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    const int c = coeff(rng);
    if (i == j || c == 0) continue;
    // g: row_i += c·row_j; inverse: col_j -= c·col_i
    for (std::size_t k = 0; k < n; ++k) u.g(i, k) += c * u.g(j, k);
    for (std::size_t k = 0; k < n; ++k) u.inverse(k, j) -= c * u.inverse(k, i);
  }
  return u;
}

}  // namespace

ChainComplex random_complex(std::mt19937_64& rng, int max_degree, int max_rank) {
  std::uniform_int_distribution<int> rank_dist(0, max_rank);
  std::uniform_int_distribution<int> factor_dist(1, 3);
  const auto top = static_cast<std::size_t>(max_degree);
  std::vector<std::size_t> ranks(top + 1);
  for (auto& r : ranks) r = static_cast<std::size_t>(rank_dist(rng));

  // Standard form: generator i of degree d may hit generator i' of degree
  // d-1 that is not itself a boundary source.
  std::vector<std::vector<bool>> used(top + 1);
  for (std::size_t d = 0; d <= top; ++d) used[d].assign(ranks[d], false);
  std::map<Degree, Matrix> bd;
  for (std::size_t d = 1; d <= top; ++d) {
    Matrix m(ranks[d - 1], ranks[d]);
    std::size_t target = 0;
    for (std::size_t src = 0; src < ranks[d]; ++src) {
      if (rng() % 2) continue;
      while (target < ranks[d - 1] && used[d - 1][target]) ++target;
      if (target == ranks[d - 1]) break;
      m(target, src) = factor_dist(rng);
      used[d - 1][target] = true;  // now a boundary, cannot be a source
      used[d][src] = true;         // a source, cannot be a boundary
      ++target;
    }
    bd[static_cast<Degree>(d)] = m;
  }
  std::vector<Unimodular> change;
  for (std::size_t d = 0; d <= top; ++d) change.push_back(random_unimodular(rng, ranks[d]));
  std::map<Degree, Matrix> twisted;
  for (std::size_t d = 1; d <= top; ++d)
    twisted[static_cast<Degree>(d)] =
        change[d - 1].g * bd[static_cast<Degree>(d)] * change[d].inverse;
  return ChainComplex(0, ranks, twisted);
}

ChainMap random_pair(std::mt19937_64& rng) {
  if (rng() % 2) {
    ChainComplex a = random_complex(rng);
    ChainMap id = ChainMap::identity(a);
    ChainComplex cone = towercalc::mapping_cone(id);
    std::map<Degree, Matrix> comps;
    for (Degree d = a.min_degree(); d <= a.max_degree(); ++d) {
      Matrix m(cone.rank(d), a.rank(d));
      for (std::size_t i = 0; i < a.rank(d); ++i) m(i, i) = 1;
      comps[d] = m;
    }
    return ChainMap(a, cone, comps);
  }
  ChainComplex a = random_complex(rng);
  ChainComplex b = random_complex(rng);
  const Degree lo = 0;
  const Degree hi = std::max(a.max_degree(), b.max_degree());
  std::vector<std::size_t> ranks;
  std::vector<Unimodular> change;
  for (Degree d = lo; d <= hi; ++d) {
    ranks.push_back(a.rank(d) + b.rank(d));
    change.push_back(random_unimodular(rng, ranks.back()));
  }
  std::map<Degree, Matrix> bd, comps;
  for (Degree d = lo; d <= hi; ++d) {
    const Matrix sum = towercalc::block(a.boundary(d), Matrix(a.rank(d - 1), b.rank(d)),
                                        Matrix(b.rank(d - 1), a.rank(d)), b.boundary(d));
    if (d > lo)
      bd[d] = change[static_cast<std::size_t>(d - lo - 1)].g * sum *
              change[static_cast<std::size_t>(d - lo)].inverse;
    Matrix emb(ranks[static_cast<std::size_t>(d - lo)], a.rank(d));
    for (std::size_t i = 0; i < a.rank(d); ++i) emb(i, i) = 1;
    comps[d] = change[static_cast<std::size_t>(d - lo)].g * emb;
  }
  ChainComplex c(lo, ranks, bd);
  return ChainMap(a, c, comps);
}

}  // namespace fixtures
