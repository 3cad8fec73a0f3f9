#include "lpbus/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lpbus/combinatorics.hpp"
#include "lpbus/errors.hpp"
#include "lpbus/lp_codes.hpp"

namespace lpbus {

namespace {

using clock = std::chrono::steady_clock;

struct CliqueOutcome {
  std::vector<int> best;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes = 0;
};

// Tomita-style maximum clique: greedy-coloring upper bounds, bitset rows,
// candidates expanded in reverse color order. Deterministic for a fixed
// vertex numbering.
class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(int nv)
      : nv_(nv), nw_((nv + 63) / 64), adj_(static_cast<std::size_t>(nv) * nw_, 0) {}

  void add_edge(int u, int v) {
    set_bit(row(u), v);
    set_bit(row(v), u);
  }

  CliqueOutcome solve(const SearchBudget& budget) {
    node_limit_ = budget.node_limit == 0 ? ~std::uint64_t{0} : budget.node_limit;
    use_deadline_ = budget.time_limit_seconds > 0;
    if (use_deadline_) {
      deadline_ = clock::now() + std::chrono::duration_cast<clock::duration>(
                                     std::chrono::duration<double>(budget.time_limit_seconds));
    }
    best_ = greedy_seed();
    cur_.clear();
    std::vector<std::uint64_t> all(static_cast<std::size_t>(nw_), 0);
    for (int v = 0; v < nv_; ++v) set_bit(all.data(), v);
    expand(all);
    return CliqueOutcome{best_, exceeded_ ? SearchStatus::budget_exceeded : SearchStatus::exact,
                         nodes_};
  }

 private:
  std::uint64_t* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * nw_; }
  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * nw_; }

  static void set_bit(std::uint64_t* bits, int v) {
    bits[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  static void clear_bit(std::uint64_t* bits, int v) {
    bits[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  static bool test_bit(const std::uint64_t* bits, int v) {
    return (bits[v / 64] >> (v % 64)) & 1u;
  }
  int first_bit(const std::uint64_t* bits) const {
    for (int i = 0; i < nw_; ++i) {
      if (bits[i] != 0) return i * 64 + std::countr_zero(bits[i]);
    }
    return -1;
  }

  std::vector<int> greedy_seed() const {
    std::vector<int> order(static_cast<std::size_t>(nv_));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> degree(static_cast<std::size_t>(nv_), 0);
    for (int v = 0; v < nv_; ++v) {
      int d = 0;
      for (int i = 0; i < nw_; ++i) d += std::popcount(row(v)[i]);
      degree[static_cast<std::size_t>(v)] = d;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    std::vector<int> clique;
    for (int v : order) {
      bool ok = true;
      for (int u : clique) {
        if (!test_bit(row(v), u)) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(v);
    }
    return clique;
  }

  bool budget_ok() {
    if (exceeded_) return false;
    if (++nodes_ > node_limit_) {
      exceeded_ = true;
      return false;
    }
    if (use_deadline_ && (nodes_ & 1023) == 0 && clock::now() > deadline_) {
      exceeded_ = true;
      return false;
    }
    return true;
  }

  void expand(std::vector<std::uint64_t>& candidates) {
    if (!budget_ok()) return;

    // greedy coloring; `order` ends up sorted by color ascending
    std::vector<int> order;
    std::vector<int> color_of;
    std::vector<std::uint64_t> uncolored = candidates;
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(nw_));
    int color = 0;
    while (true) {
      const int start = first_bit(uncolored.data());
      if (start < 0) break;
      ++color;
      cand = uncolored;
      while (true) {
        const int v = first_bit(cand.data());
        if (v < 0) break;
        order.push_back(v);
        color_of.push_back(color);
        clear_bit(cand.data(), v);
        clear_bit(uncolored.data(), v);
        for (int i = 0; i < nw_; ++i) cand[static_cast<std::size_t>(i)] &= ~row(v)[i];
      }
    }

    std::vector<std::uint64_t> next(static_cast<std::size_t>(nw_));
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (exceeded_) return;
      if (static_cast<int>(cur_.size()) + color_of[idx] <= static_cast<int>(best_.size())) {
        return;  // every remaining vertex has an equal or smaller bound
      }
      const int v = order[idx];
      bool empty = true;
      for (int i = 0; i < nw_; ++i) {
        next[static_cast<std::size_t>(i)] = candidates[static_cast<std::size_t>(i)] & row(v)[i];
        if (next[static_cast<std::size_t>(i)] != 0) empty = false;
      }
      cur_.push_back(v);
      if (empty) {
        if (cur_.size() > best_.size()) best_ = cur_;
      } else {
        expand(next);  // next is rebuilt each iteration; mutation is fine
      }
      cur_.pop_back();
      clear_bit(candidates.data(), v);
    }
  }

  int nv_;
  int nw_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> best_, cur_;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_ = 0;
  clock::time_point deadline_;
  bool use_deadline_ = false;
  bool exceeded_ = false;
};

int effective_cap(const SearchBudget& budget, int fallback) {
  return budget.max_order > 0 ? budget.max_order : fallback;
}

}  // namespace

DiameterSearchResult max_diameter_code(int n, int delta, const SearchBudget& budget) {
  if (n < 0) throw std::invalid_argument("max_diameter_code: negative n");
  if (n > effective_cap(budget, 6)) {
    throw resource_limit_error("max_diameter_code: n above budget.max_order");
  }
  if (n > 13) {
    throw resource_limit_error("max_diameter_code: n above the 2^13-vertex search bound");
  }
  const int d = std::min(std::max(delta, 0), n);
  const int nv = 1 << n;
  MaxCliqueSolver solver(nv);
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      if (std::popcount(static_cast<unsigned>(u ^ v)) <= d) solver.add_edge(u, v);
    }
  }
  const CliqueOutcome outcome = solver.solve(budget);

  std::vector<BitWord> words;
  words.reserve(outcome.best.size());
  for (int mask : outcome.best) {
    BitWord w(n);
    for (int p = 1; p <= n; ++p) {
      if ((mask >> (p - 1)) & 1) w.set(p);
    }
    words.push_back(std::move(w));
  }
  return DiameterSearchResult{outcome.status, Count{outcome.best.size()},
                              Code(n, std::move(words)), outcome.nodes};
}

IntersectSearchResult max_t_intersecting(int n, int w, int t, const SearchBudget& budget) {
  if (!(1 <= t && t <= w && w <= n)) {
    throw std::invalid_argument("max_t_intersecting: need 1 <= t <= w <= n");
  }
  if (n > effective_cap(budget, 8)) {
    throw resource_limit_error("max_t_intersecting: n above budget.max_order");
  }
  const Count blocks = binomial(n, w);
  if (blocks > Count{8192}) {
    throw resource_limit_error("max_t_intersecting: C(n, w) above the 2^13-vertex search bound");
  }
  const std::vector<BitWord> universe = lex_subsets_prefix(n, w, blocks);
  const int nv = static_cast<int>(universe.size());
  MaxCliqueSolver solver(nv);
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (intersection_size(universe[static_cast<std::size_t>(i)],
                            universe[static_cast<std::size_t>(j)]) >= t) {
        solver.add_edge(i, j);
      }
    }
  }
  const CliqueOutcome outcome = solver.solve(budget);

  std::vector<BitWord> chosen;
  chosen.reserve(outcome.best.size());
  for (int idx : outcome.best) chosen.push_back(universe[static_cast<std::size_t>(idx)]);
  return IntersectSearchResult{outcome.status, Count{outcome.best.size()},
                               SetSystem(n, std::move(chosen)), outcome.nodes};
}

DeltaPairSearchResult max_delta_pair(int n, int delta, const SearchBudget& budget) {
  if (n < 0) throw std::invalid_argument("max_delta_pair: negative n");
  if (n > effective_cap(budget, 5)) {
    throw resource_limit_error("max_delta_pair: n above budget.max_order");
  }
  if (n > 12) throw resource_limit_error("max_delta_pair: n above the sweep bound");

  const bool use_deadline = budget.time_limit_seconds > 0;
  const clock::time_point deadline =
      clock::now() + std::chrono::duration_cast<clock::duration>(
                         std::chrono::duration<double>(std::max(budget.time_limit_seconds, 0.0)));

  DeltaPairSearchResult result;
  result.min_size = Count{0};
  const std::uint64_t universe = std::uint64_t{1} << n;
  for (std::uint64_t target = 1; target <= universe; ++target) {
    if (use_deadline && clock::now() > deadline) {
      result.status = SearchStatus::budget_exceeded;
      return result;
    }
    const QuasiSphere sphere = quasi_sphere(n, Count{target});
    const SetSystem response = best_response(sphere.blocks, delta);
    const Count current = std::min(Count{target}, Count{response.size()});
    if (current > result.min_size) {
      result.min_size = current;
      result.a = sphere.blocks;
      result.b = response;
    }
    if (Count{response.size()} <= result.min_size) break;  // responses only shrink
  }
  return result;
}

Count max_delta_pair_exhaustive(int n, int delta) {
  if (n < 0 || n > 4) {
    throw resource_limit_error("max_delta_pair_exhaustive: n must be in [0, 4]");
  }
  const int d = std::min(std::max(delta, 0), n);
  const int blocks = 1 << n;
  std::vector<std::uint32_t> ok(static_cast<std::size_t>(blocks), 0);
  for (int a = 0; a < blocks; ++a) {
    for (int b = 0; b < blocks; ++b) {
      if (std::popcount(static_cast<unsigned>(a ^ b)) <= d) {
        ok[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
      }
    }
  }
  const std::uint64_t families = std::uint64_t{1} << blocks;
  const std::uint32_t all = blocks == 32 ? ~std::uint32_t{0}
                                         : (std::uint32_t{1} << blocks) - 1;
  std::uint32_t best = 0;
  for (std::uint64_t family = 1; family < families; ++family) {
    std::uint32_t response = all;
    std::uint64_t rest = family;
    while (rest != 0 && response != 0) {
      response &= ok[static_cast<std::size_t>(std::countr_zero(rest))];
      rest &= rest - 1;
    }
    const std::uint32_t current =
        std::min<std::uint32_t>(static_cast<std::uint32_t>(std::popcount(family)),
                                static_cast<std::uint32_t>(std::popcount(response)));
    best = std::max(best, current);
  }
  return Count{best};
}

}  // namespace lpbus
