#pragma once

#include <random>

#include "towercalc/chains.hpp"

namespace fixtures {

using towercalc::ChainComplex;
using towercalc::ChainMap;
using towercalc::Matrix;

ChainComplex point();
/// One 0-cell and one m-cell (m ≥ 1).
ChainComplex sphere(int m);
/// Cells in degrees 0, 1, 2 with ∂_2 = (2).
ChainComplex rp2();
/// Two disjoint circles.
ChainComplex two_circles();

/// D^n = S^{n-1} ∪ e^n with its boundary sphere.
struct DiskPair {
  int n;
  ChainComplex disk;
  ChainComplex boundary;
  ChainMap inclusion;       // S^{n-1} → D^n
  ChainMap section;         // point → S^{n-1}
  ChainComplex thom;        // mapping_cone(section)
};
DiskPair disk_pair(int n);

/// Degree-`deg` map S^{n-1} → thom space model of D^n.
ChainMap sphere_to_thom(const DiskPair& p, long deg);

/// S^1 × D^1 with both boundary circles, sectioned by K = S^1 onto one of them.
struct CylinderPair {
  ChainComplex cylinder;
  ChainComplex boundary;    // two circles
  ChainComplex core;        // K = S^1
  ChainMap inclusion;       // ∂P → P
  ChainMap section;         // K → ∂P onto the first circle
  ChainMap bad_section;     // same, precomposed with a degree-2 self-map of K
};
CylinderPair cylinder_pair();

/// Random bounded complex built by conjugating a Smith-form complex with
/// random unimodular matrices; entries stay small.
ChainComplex random_complex(std::mt19937_64& rng, int max_degree = 3, int max_rank = 3);

/// Random split-injective subcomplex inclusion: C = sub ⊕ rest twisted by a
/// random automorphism.
ChainMap random_pair(std::mt19937_64& rng);

}  // namespace fixtures
