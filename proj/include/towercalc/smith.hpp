#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "towercalc/matrix.hpp"

namespace towercalc {

/// Smith normal form U·A·V = D together with the inverses of the unimodular
/// transforms. The invariant factors d_1 | d_2 | ... are the nonzero
/// diagonal entries of D, all positive.
template <class Int>
struct BasicSmithForm {
  BasicMatrix<Int> diagonal;
  BasicMatrix<Int> left;
  BasicMatrix<Int> left_inverse;
  BasicMatrix<Int> right;
  BasicMatrix<Int> right_inverse;
  std::vector<Int> factors;

  std::size_t rank() const noexcept { return factors.size(); }
};

using SmithForm = BasicSmithForm<BigInt>;

/// Exact SNF over arbitrary-precision integers. Tries an int64 fast path first
/// and reruns in BigInt if any intermediate overflows.
SmithForm smith_normal_form(const Matrix& a);

/// Always BigInt.
SmithForm smith_normal_form_exact(const Matrix& a);

/// int64-only variant; throws Error{ArithmeticOverflow} rather than wrapping.
BasicSmithForm<std::int64_t> smith_normal_form_int64(
    const BasicMatrix<std::int64_t>& a);

/// Invariant factors only (skips tracking the transforms).
std::vector<BigInt> invariant_factors(const Matrix& a);

std::size_t matrix_rank(const Matrix& a);

}  // namespace towercalc
