#include "lpbus/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpbus/errors.hpp"
#include "lpbus/limits.hpp"

namespace lpbus {

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return Count{0};
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    unsigned __int128 next = 0;
    if (__builtin_mul_overflow(r, static_cast<unsigned __int128>(n - k + i), &next)) {
      throw std::overflow_error("binomial: value exceeds 128-bit capacity");
    }
    r = next / static_cast<unsigned __int128>(i);  // exact: prefix products are binomials
  }
  const std::uint64_t hi = static_cast<std::uint64_t>(r >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(r);
  if (hi == 0) return Count{lo};
  return Count{hi} * Count::pow2(64) + Count{lo};
}

Count colex_rank(int w, const BitWord& word) {
  if (word.weight() != w) {
    throw std::invalid_argument("colex_rank: word weight does not match w");
  }
  Count r{0};
  const std::vector<int> supp = word.support();
  for (std::size_t j = 0; j < supp.size(); ++j) {
    r += binomial(supp[j] - 1, static_cast<std::int64_t>(j) + 1);
  }
  return r;
}

BitWord colex_unrank(int n, int w, const Count& r) {
  if (n < 0 || w < 0 || w > n) {
    throw std::invalid_argument("colex_unrank: need 0 <= w <= n");
  }
  if (r >= binomial(n, w)) {
    throw std::invalid_argument("colex_unrank: rank out of range");
  }
  BitWord word(n);
  Count rest = r;
  int x = n - 1;  // candidate 0-based element, scanned downward
  for (int j = w; j >= 1; --j) {
    while (binomial(x, j) > rest) --x;
    word.set(x + 1);
    rest -= binomial(x, j);
    --x;
  }
  return word;
}

SubsetOrdinal ordinal_of(const BitWord& word) {
  const int w = word.weight();
  return SubsetOrdinal{word.width(), w, colex_rank(w, word)};
}

BitWord word_of(const SubsetOrdinal& ordinal) {
  return colex_unrank(ordinal.n, ordinal.w, ordinal.r);
}

std::vector<BitWord> lex_subsets_prefix(int n, int k, const Count& count) {
  if (n < 0 || k < 0) throw std::invalid_argument("lex_subsets_prefix: negative argument");
  if (count > binomial(n, k)) {
    throw std::invalid_argument("lex_subsets_prefix: count exceeds C(n, k)");
  }
  if (count > Count{kMaxMaterializedWords}) {
    throw resource_limit_error("lex_subsets_prefix: too many subsets to materialize");
  }
  const std::uint64_t total = count.as_u64();
  std::vector<BitWord> out;
  out.reserve(total);
  if (total == 0) return out;

  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (std::uint64_t emitted = 0;;) {
    out.push_back(BitWord::from_support(n, cur));
    if (++emitted == total) break;
    // lex successor: bump the rightmost element that still has room
    int i = k - 1;
    while (cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace lpbus
