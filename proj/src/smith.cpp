#include "towercalc/smith.hpp"

#include <limits>
#include <optional>

namespace towercalc {

namespace {

// Arithmetic policy: BigInt is exact, int64 goes through the checked helpers.
template <class Int>
struct Arith;

template <>
struct Arith<BigInt> {
  static BigInt fma(const BigInt& a, const BigInt& q, const BigInt& b) {
    return a + q * b;
  }
  static BigInt neg(const BigInt& a) { return -a; }
  static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
  static BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }
  static BigInt rem(const BigInt& a, const BigInt& b) { return a % b; }
};

template <>
struct Arith<std::int64_t> {
  static std::int64_t fma(std::int64_t a, std::int64_t q, std::int64_t b) {
    return checked::add(a, checked::mul(q, b));
  }
  static std::int64_t neg(std::int64_t a) { return checked::neg(a); }
  static std::int64_t abs(std::int64_t a) { return a < 0 ? checked::neg(a) : a; }
  static std::int64_t quot(std::int64_t a, std::int64_t b) {
    if (b == -1) return checked::neg(a);
    return a / b;
  }
  static std::int64_t rem(std::int64_t a, std::int64_t b) {
    if (b == -1) return 0;
    return a % b;
  }
};

template <class Int>
class Reducer {
  using A = Arith<Int>;

 public:
  Reducer(const BasicMatrix<Int>& a, bool track) : m_(a), track_(track) {
    if (track_) {
      u_ = BasicMatrix<Int>::identity(a.rows());
      ui_ = u_;
      v_ = BasicMatrix<Int>::identity(a.cols());
      vi_ = v_;
    }
  }

  BasicSmithForm<Int> run() {
    const std::size_t limit = std::min(m_.rows(), m_.cols());
    std::vector<Int> factors;
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = smallest_in(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      reduce_at(t);
      if (m_(t, t) < 0) negate_row(t);
      factors.push_back(m_(t, t));
    }
    BasicSmithForm<Int> out;
    out.diagonal = std::move(m_);
    out.factors = std::move(factors);
    if (track_) {
      out.left = std::move(u_);
      out.left_inverse = std::move(ui_);
      out.right = std::move(v_);
      out.right_inverse = std::move(vi_);
    }
    return out;
  }

 private:
  // Nonzero entry of least absolute value in the trailing block starting at t.
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < m_.rows(); ++i)
      for (std::size_t j = t; j < m_.cols(); ++j) {
        if (m_(i, j) == 0) continue;
        Int a = A::abs(m_(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  // Clears row t and column t outside the pivot, then enforces that the
  // pivot divides the whole trailing block. The pivot's absolute value
  // strictly decreases on every restart, so the loop terminates.
  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m_.rows(); ++i) {
        if (m_(i, t) == 0) continue;
        Int q = A::quot(m_(i, t), m_(t, t));
        add_row(i, t, A::neg(q));
        if (m_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m_.cols(); ++j) {
        if (m_(t, j) == 0) continue;
        Int q = A::quot(m_(t, j), m_(t, t));
        add_col(j, t, A::neg(q));
        if (m_(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_smaller_remainder_to_pivot(t);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m_.cols(); ++j)
          if (A::rem(m_(i, j), m_(t, t)) != 0) {
            add_row(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) return;
    }
  }

  void move_smaller_remainder_to_pivot(std::size_t t) {
    std::size_t bi = t, bj = t;
    Int best = A::abs(m_(t, t));
    for (std::size_t i = t + 1; i < m_.rows(); ++i)
      if (m_(i, t) != 0 && A::abs(m_(i, t)) < best) {
        best = A::abs(m_(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < m_.cols(); ++j)
      if (m_(t, j) != 0 && A::abs(m_(t, j)) < best) {
        best = A::abs(m_(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  // Row ops act on A and U from the left; U^{-1} receives the inverse column op.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    m_.swap_rows(a, b);
    if (track_) {
      u_.swap_rows(a, b);
      ui_.swap_cols(a, b);
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_(r, c) = A::neg(m_(r, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = A::neg(u_(r, c));
      for (std::size_t i = 0; i < ui_.rows(); ++i) ui_(i, r) = A::neg(ui_(i, r));
    }
  }

  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < m_.cols(); ++c) m_(dst, c) = A::fma(m_(dst, c), q, m_(src, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) = A::fma(u_(dst, c), q, u_(src, c));
      const Int nq = A::neg(q);
      for (std::size_t i = 0; i < ui_.rows(); ++i) ui_(i, src) = A::fma(ui_(i, src), nq, ui_(i, dst));
    }
  }

  // Column ops act on A and V from the right; V^{-1} receives the inverse row op.
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    m_.swap_cols(a, b);
    if (track_) {
      v_.swap_cols(a, b);
      vi_.swap_rows(a, b);
    }
  }

  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < m_.rows(); ++r) m_(r, dst) = A::fma(m_(r, dst), q, m_(r, src));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) = A::fma(v_(r, dst), q, v_(r, src));
      const Int nq = A::neg(q);
      for (std::size_t c = 0; c < vi_.cols(); ++c) vi_(src, c) = A::fma(vi_(src, c), nq, vi_(dst, c));
    }
  }

  BasicMatrix<Int> m_;
  bool track_;
  BasicMatrix<Int> u_, ui_, v_, vi_;
};

std::optional<BasicMatrix<std::int64_t>> narrow(const Matrix& a) {
  // Leave headroom so the first few products are unlikely to overflow.
  constexpr std::int64_t bound = std::int64_t{1} << 31;
  BasicMatrix<std::int64_t> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) >= bound || a(i, j) <= -bound) return std::nullopt;
      out(i, j) = static_cast<std::int64_t>(a(i, j));
    }
  return out;
}

Matrix widen(const BasicMatrix<std::int64_t>& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

SmithForm widen(const BasicSmithForm<std::int64_t>& s) {
  SmithForm out;
  out.diagonal = widen(s.diagonal);
  out.left = widen(s.left);
  out.left_inverse = widen(s.left_inverse);
  out.right = widen(s.right);
  out.right_inverse = widen(s.right_inverse);
  for (auto f : s.factors) out.factors.emplace_back(f);
  return out;
}

}  // namespace

BasicSmithForm<std::int64_t> smith_normal_form_int64(const BasicMatrix<std::int64_t>& a) {
  return Reducer<std::int64_t>(a, true).run();
}

SmithForm smith_normal_form_exact(const Matrix& a) {
  return Reducer<BigInt>(a, true).run();
}

SmithForm smith_normal_form(const Matrix& a) {
  if (auto small = narrow(a)) {
    try {
      return widen(smith_normal_form_int64(*small));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ArithmeticOverflow) throw;
    }
  }
  return smith_normal_form_exact(a);
}

std::vector<BigInt> invariant_factors(const Matrix& a) {
  if (auto small = narrow(a)) {
    try {
      auto s = Reducer<std::int64_t>(*small, false).run();
      return std::vector<BigInt>(s.factors.begin(), s.factors.end());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ArithmeticOverflow) throw;
    }
  }
  return Reducer<BigInt>(a, false).run().factors;
}

std::size_t matrix_rank(const Matrix& a) { return invariant_factors(a).size(); }

}  // namespace towercalc
