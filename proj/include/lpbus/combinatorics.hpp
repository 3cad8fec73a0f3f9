#pragma once

#include <cstdint>
#include <vector>

#include "lpbus/bitword.hpp"
#include "lpbus/count.hpp"

namespace lpbus {

// Exact C(n, k); zero outside 0 <= k <= n. n must be non-negative.
Count binomial(std::int64_t n, std::int64_t k);

// Position of a weight-w word among all weight-w words of its width, in
// co-lexicographic order: r = sum_j C(t_j - 1, j) over the ascending support
// t_1 < ... < t_w. Bijective onto [0, C(n, w) - 1].
Count colex_rank(int w, const BitWord& word);

// Inverse of colex_rank: the unique weight-w word of width n at rank r.
BitWord colex_unrank(int n, int w, const Count& r);

// A weight-w word of width n identified by its colex rank.
struct SubsetOrdinal {
  int n = 0;
  int w = 0;
  Count r;
};

SubsetOrdinal ordinal_of(const BitWord& word);
BitWord word_of(const SubsetOrdinal& ordinal);

// First `count` k-subsets of [n] in lexicographic order on ascending tuples,
// as incidence words of width n. count must be <= C(n, k).
std::vector<BitWord> lex_subsets_prefix(int n, int k, const Count& count);

}  // namespace lpbus
