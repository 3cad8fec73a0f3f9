#pragma once

#include <cstdint>

#include "lpbus/count.hpp"
#include "lpbus/hamming.hpp"

namespace lpbus {

// Limits for the brute-force searches. Every search either returns an exact
// answer or an explicit budget_exceeded status carrying the best bound found
// so far; there are no silent partial answers.
struct SearchBudget {
  int max_order = 0;  // cap on n; 0 selects the per-search default
  double time_limit_seconds = 60.0;
  std::uint64_t node_limit = 10'000'000;
};

enum class SearchStatus { exact, budget_exceeded };

struct DiameterSearchResult {
  SearchStatus status = SearchStatus::exact;
  Count size;
  Code witness;
  std::uint64_t nodes = 0;
};

// Exact maximum size of a width-n code with diameter <= delta, by
// branch-and-bound maximum clique over all 2^n words (edges join words at
// distance <= delta). Default max_order 6.
DiameterSearchResult max_diameter_code(int n, int delta, const SearchBudget& budget = {});

struct IntersectSearchResult {
  SearchStatus status = SearchStatus::exact;
  Count size;
  SetSystem witness;
  std::uint64_t nodes = 0;
};

// Exact maximum w-uniform t-intersecting family of order n, by clique search
// over the C(n, w) blocks. Default max_order 8.
IntersectSearchResult max_t_intersecting(int n, int w, int t, const SearchBudget& budget = {});

struct DeltaPairSearchResult {
  SearchStatus status = SearchStatus::exact;
  Count min_size;
  SetSystem a;
  SetSystem b;
};

// Max over quasi-sphere candidates A of min(|A|, |best_response(A, delta)|).
// Quasi-sphere sufficiency prunes the doubly-exponential pair search; the
// unpruned sweep is max_delta_pair_exhaustive. Default max_order 5.
DeltaPairSearchResult max_delta_pair(int n, int delta, const SearchBudget& budget = {});

// Assumption-free: sweeps every family A over 2^[n] and intersects candidate
// responses directly. n <= 4.
Count max_delta_pair_exhaustive(int n, int delta);

}  // namespace lpbus
