#include "towercalc/lie.hpp"

#include <sstream>

namespace towercalc::lie {

bool is_lyndon(std::span<const int> word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // Compare word with its rotation starting at r.
    for (std::size_t i = 0; i < n; ++i) {
      const int a = word[i];
      const int b = word[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

LyndonWord::LyndonWord(std::vector<int> letters, int alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  for (int x : letters_)
    if (x < 0 || x >= alphabet_)
      throw Error(ErrorCode::InvariantViolation, "letters: letter outside the alphabet");
  if (!is_lyndon(letters_))
    throw Error(ErrorCode::InvariantViolation, "letters: not a Lyndon word");
}

std::string LyndonWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (alphabet_ <= 26) {
      os << static_cast<char>('a' + letters_[i]);
    } else {
      if (i) os << '.';
      os << letters_[i];
    }
  }
  return os.str();
}

std::pair<LyndonWord, LyndonWord> LyndonWord::standard_factorization() const {
  if (letters_.size() < 2)
    throw Error(ErrorCode::OutOfRange, "standard factorization needs length >= 2");
  for (std::size_t split = 1; split < letters_.size(); ++split) {
    std::span<const int> tail(letters_.data() + split, letters_.size() - split);
    if (is_lyndon(tail))
      return {LyndonWord({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(split)},
                         alphabet_),
              LyndonWord({tail.begin(), tail.end()}, alphabet_)};
  }
  // Unreachable: the last letter is always a Lyndon suffix.
  throw Error(ErrorCode::InvariantViolation, "no Lyndon suffix");
}

std::string LyndonWord::bracketing() const {
  if (letters_.size() == 1) return str();
  auto [u, v] = standard_factorization();
  return "[" + u.bracketing() + "," + v.bracketing() + "]";
}

std::vector<std::vector<LyndonWord>> lyndon_words(int alphabet, int max_len) {
  if (max_len < 1) throw Error(ErrorCode::OutOfRange, "max_len must be >= 1");
  if (alphabet < 0) throw Error(ErrorCode::OutOfRange, "alphabet size must be >= 0");
  std::vector<std::vector<LyndonWord>> out(static_cast<std::size_t>(max_len));
  if (alphabet == 0) return out;

  // Duval: emits every Lyndon word of length <= max_len in lexicographic order.
  std::vector<int> w{0};
  while (!w.empty()) {
    out[w.size() - 1].emplace_back(w, alphabet);
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(max_len)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::vector<LyndonWord> lyndon_words_of_length(int alphabet, int len) {
  auto all = lyndon_words(alphabet, len);
  return std::move(all.back());
}

int mobius(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "mobius of non-positive integer");
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

BigInt witt_rank(int alphabet, int len) {
  if (alphabet < 1 || len < 1)
    throw Error(ErrorCode::OutOfRange, "witt_rank needs alphabet >= 1 and len >= 1");
  BigInt sum = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d) continue;
    const int mu = mobius(d);
    if (mu) sum += mu * ipow(alphabet, len / d);
  }
  return sum / len;
}

std::vector<BigInt> lyndon_counts_by_weight(std::span<const int> weights, int max_weight) {
  for (int a : weights)
    if (a < 1) throw Error(ErrorCode::OutOfRange, "letter weights must be >= 1");
  const auto size = static_cast<std::size_t>(std::max(max_weight, 0)) + 1;

  std::vector<BigInt> words(size, BigInt(0));
  words[0] = 1;
  for (std::size_t m = 1; m < size; ++m)
    for (int a : weights)
      if (static_cast<std::size_t>(a) <= m) words[m] += words[m - static_cast<std::size_t>(a)];

  std::vector<BigInt> p(size, BigInt(0));
  for (std::size_t n = 1; n < size; ++n)
    for (int a : weights)
      if (static_cast<std::size_t>(a) <= n) p[n] += a * words[n - static_cast<std::size_t>(a)];

  std::vector<BigInt> out(size, BigInt(0));
  for (std::size_t e = 1; e < size; ++e) {
    BigInt s = 0;
    for (std::size_t d = 1; d <= e; ++d)
      if (e % d == 0) {
        const int mu = mobius(static_cast<std::int64_t>(e / d));
        if (mu) s += mu * p[d];
      }
    out[e] = s / static_cast<long long>(e);
  }
  return out;
}

}  // namespace towercalc::lie
