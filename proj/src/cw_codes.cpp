#include "lpbus/cw_codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpbus/combinatorics.hpp"
#include "lpbus/errors.hpp"
#include "lpbus/limits.hpp"

namespace lpbus {

namespace {

void validate(const IntersectParams& p) {
  if (!(1 <= p.t && p.t <= p.w && p.w <= p.n)) {
    throw std::invalid_argument("IntersectParams: need 1 <= t <= w <= n");
  }
}

void check_materializable(const Count& size, const char* what) {
  if (size > Count{kMaxMaterializedWords}) {
    throw resource_limit_error(std::string(what) + ": result too large to materialize");
  }
}

// All w-sets whose support splits as (subset of `head` positions) ∪ (subset of
// `tail` positions) with the head part of size j.
void emit_split(int n, const std::vector<int>& head, const std::vector<int>& tail, int j,
                int w, std::vector<BitWord>& out) {
  const auto heads = lex_subsets_prefix(static_cast<int>(head.size()), j,
                                        binomial(static_cast<int>(head.size()), j));
  const auto tails = lex_subsets_prefix(static_cast<int>(tail.size()), w - j,
                                        binomial(static_cast<int>(tail.size()), w - j));
  for (const BitWord& h : heads) {
    std::vector<int> base;
    for (int q : h.support()) base.push_back(head[static_cast<std::size_t>(q) - 1]);
    for (const BitWord& t : tails) {
      std::vector<int> supp = base;
      for (int q : t.support()) supp.push_back(tail[static_cast<std::size_t>(q) - 1]);
      out.push_back(BitWord::from_support(n, supp));
    }
  }
}

}  // namespace

Count frankl_size(const IntersectParams& p, int i) {
  validate(p);
  if (i < 0 || 2 * i > p.n - p.t) {
    throw std::invalid_argument("frankl_size: index out of [0, (n-t)/2]");
  }
  const int head = p.t + 2 * i;
  Count total{0};
  for (int j = p.t + i; j <= std::min(p.w, head); ++j) {
    total += binomial(head, j) * binomial(p.n - head, p.w - j);
  }
  return total;
}

FrequencyFamily frankl_family(const IntersectParams& p, int i) {
  validate(p);
  if (i < 0 || 2 * i > p.n - p.t) {
    throw std::invalid_argument("frankl_family: index out of [0, (n-t)/2]");
  }
  check_materializable(frankl_size(p, i), "frankl_family");
  const int head_size = p.t + 2 * i;
  std::vector<int> head, tail;
  for (int q = 1; q <= head_size; ++q) head.push_back(q);
  for (int q = head_size + 1; q <= p.n; ++q) tail.push_back(q);

  std::vector<BitWord> blocks;
  for (int j = p.t + i; j <= std::min(p.w, head_size); ++j) {
    emit_split(p.n, head, tail, j, p.w, blocks);
  }
  return FrequencyFamily{p, i, SetSystem(p.n, std::move(blocks))};
}

Count max_intersecting_size(const IntersectParams& p, int* r_out) {
  validate(p);
  Count best{0};
  int best_i = 0;
  for (int i = 0; 2 * i <= p.n - p.t; ++i) {
    const Count size = frankl_size(p, i);
    if (size > best) {
      best = size;
      best_i = i;
    }
  }
  if (r_out != nullptr) *r_out = best_i;
  return best;
}

MaxIntersecting max_intersecting(const IntersectParams& p) {
  int r = 0;
  max_intersecting_size(p, &r);
  return MaxIntersecting{r, frankl_family(p, r)};
}

Code cw_stateless_code(int n, int w, int delta) {
  if (n < 0 || w < 0 || w > n) {
    throw std::invalid_argument("cw_stateless_code: need 0 <= w <= n");
  }
  if (delta < 0 || delta % 2 != 0) {
    throw std::invalid_argument(
        "cw_stateless_code: delta must be even (constant-weight diameters are even)");
  }
  const int t = w - delta / 2;
  if (t <= 0) {
    // vacuous constraint: the whole weight-w layer qualifies
    check_materializable(binomial(n, w), "cw_stateless_code");
    return Code(n, lex_subsets_prefix(n, w, binomial(n, w)));
  }
  return from_set_system(max_intersecting(IntersectParams{n, w, t}).family.blocks);
}

bool cw_stateful_threshold_check(int n, int w, int t) {
  validate(IntersectParams{n, w, t});
  const Count star = binomial(n - t, w - t);
  for (int u = 0; u <= t - 1; ++u) {
    Count blocks{0};
    if (n - (2 * t - u) >= 0) {
      const Count choose = binomial(w - u, t - u);
      blocks = choose * choose * binomial(n - (2 * t - u), w - (2 * t - u));
    }
    if (!(blocks < star)) return false;
  }
  return true;
}

CwStatefulCode cw_stateful_code(int n, int w, int delta, std::vector<int> T) {
  if (n < 0 || w < 0 || w > n) {
    throw std::invalid_argument("cw_stateful_code: need 0 <= w <= n");
  }
  if (delta < 0 || delta % 2 != 0) {
    throw std::invalid_argument("cw_stateful_code: delta must be even");
  }
  const int t = w - delta / 2;
  if (t < 1) {
    throw std::invalid_argument("cw_stateful_code: w - delta/2 must be >= 1");
  }
  if (T.empty()) {
    for (int q = 1; q <= t; ++q) T.push_back(q);
  }
  std::sort(T.begin(), T.end());
  if (static_cast<int>(T.size()) != t ||
      std::adjacent_find(T.begin(), T.end()) != T.end() || T.front() < 1 || T.back() > n) {
    throw std::invalid_argument("cw_stateful_code: T must be a t-subset of [n]");
  }
  check_materializable(binomial(n - t, w - t), "cw_stateful_code");

  std::vector<int> rest;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(T.begin(), T.end(), q)) rest.push_back(q);
  }
  std::vector<BitWord> words;
  for (const BitWord& reduced : lex_subsets_prefix(n - t, w - t, binomial(n - t, w - t))) {
    std::vector<int> supp = T;
    for (int q : reduced.support()) supp.push_back(rest[static_cast<std::size_t>(q) - 1]);
    words.push_back(BitWord::from_support(n, supp));
  }
  Code star(n, std::move(words));
  return CwStatefulCode{LpCodeFamily{n, delta, {star, star}},
                        cw_stateful_threshold_check(n, w, t)};
}

}  // namespace lpbus
