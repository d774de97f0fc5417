#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's algorithms; they work from definitions.

#include <map>
#include <vector>

#include "towercalc/matrix.hpp"

namespace oracles {

using towercalc::BigInt;
using towercalc::Matrix;

/// Invariant factors from determinantal divisors: D_k = gcd of all k×k
/// minors, d_k = D_k / D_{k-1}. Exponential; meant for ≤ 5×5.
std::vector<BigInt> determinantal_invariant_factors(const Matrix& a);

/// All words of length `len` over `alphabet` letters that are strictly
/// smaller than every nontrivial rotation, in lexicographic order.
std::vector<std::vector<int>> brute_lyndon(int alphabet, int len);

/// Rational homotopy ranks of a wedge of spheres by listing every Lyndon
/// word over the summands (brute_lyndon) and applying Serre's theorem to the
/// sphere of each basic product. Degrees 1..q_max.
std::map<int, BigInt> brute_wedge_ranks(const std::vector<int>& dims, int q_max);

/// Coefficients of (Σ b_d x^d)^j by enumerating all j-tuples of degrees.
std::vector<BigInt> tuple_kunneth(const std::vector<BigInt>& poincare, int j);

/// Möbius function by trial factorization into a multiset of primes.
int brute_mobius(int n);

}  // namespace oracles
