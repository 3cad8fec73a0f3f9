#include <algorithm>

#include "doctest.h"
#include "lpbus/cw_codes.hpp"
#include "lpbus/errors.hpp"
#include "lpbus/hamming.hpp"
#include "lpbus/lp_codes.hpp"
#include "lpbus/oracle.hpp"

using lpbus::Count;
using lpbus::SearchBudget;
using lpbus::SearchStatus;
using lpbus::kleitman_size;
using lpbus::max_delta_pair;
using lpbus::max_diameter_code;
using lpbus::max_t_intersecting;

TEST_CASE("max_diameter_code on known instances") {
  const auto r42 = max_diameter_code(4, 2);
  CHECK(r42.status == SearchStatus::exact);
  CHECK(r42.size == Count{5});
  CHECK(r42.size == kleitman_size(4, 2));
  CHECK(Count{r42.witness.size()} == r42.size);
  CHECK(lpbus::diameter(r42.witness) <= 2);

  const auto full = max_diameter_code(4, 4);
  CHECK(full.size == Count{16});

  const auto r53 = max_diameter_code(5, 3);
  CHECK(r53.size == Count{10});
  CHECK(lpbus::diameter(r53.witness) <= 3);
}

TEST_CASE("max_diameter_code certifies the closed form for n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    for (int delta = 0; delta <= n; ++delta) {
      CAPTURE(n);
      CAPTURE(delta);
      const auto result = max_diameter_code(n, delta);
      REQUIRE(result.status == SearchStatus::exact);
      CHECK(result.size == kleitman_size(n, delta));
      if (!result.witness.empty()) CHECK(lpbus::diameter(result.witness) <= delta);
    }
  }
}

TEST_CASE("max_diameter_code budget handling") {
  CHECK_THROWS_AS(max_diameter_code(7, 2), lpbus::resource_limit_error);

  SearchBudget wider;
  wider.max_order = 7;
  CHECK(max_diameter_code(7, 2, wider).size == kleitman_size(7, 2));

  SearchBudget starved;
  starved.node_limit = 1;
  const auto partial = max_diameter_code(5, 4, starved);
  CHECK(partial.status == SearchStatus::budget_exceeded);
  CHECK(partial.size <= kleitman_size(5, 4));  // lower bound only
  CHECK(Count{partial.witness.size()} == partial.size);
  CHECK(lpbus::diameter(partial.witness) <= 4);

  // determinism under the same budget
  const auto again = max_diameter_code(5, 4, starved);
  CHECK(again.size == partial.size);
  CHECK(again.witness == partial.witness);
}

TEST_CASE("max_t_intersecting on known instances") {
  const auto ekr = max_t_intersecting(6, 3, 1);
  CHECK(ekr.status == SearchStatus::exact);
  CHECK(ekr.size == Count{10});

  CHECK(max_t_intersecting(5, 3, 3).size == Count{1});
  CHECK(max_t_intersecting(4, 2, 1).size == Count{3});

  // witness really is t-intersecting
  const auto& blocks = ekr.witness.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      CHECK(lpbus::intersection_size(blocks[i], blocks[j]) >= 1);
    }
  }
}

TEST_CASE("max_t_intersecting certifies the Frankl maximum for n <= 8, w <= 4") {
  for (int n = 1; n <= 8; ++n) {
    for (int w = 1; w <= std::min(4, n); ++w) {
      for (int t = 1; t <= w; ++t) {
        CAPTURE(n);
        CAPTURE(w);
        CAPTURE(t);
        const auto oracle = max_t_intersecting(n, w, t);
        REQUIRE(oracle.status == SearchStatus::exact);
        CHECK(oracle.size == lpbus::max_intersecting_size({n, w, t}));
      }
    }
  }
}

TEST_CASE("max_delta_pair certifies that a second state buys nothing") {
  for (int n = 0; n <= 5; ++n) {
    for (int delta = 0; delta <= n; ++delta) {
      CAPTURE(n);
      CAPTURE(delta);
      const auto result = max_delta_pair(n, delta);
      REQUIRE(result.status == SearchStatus::exact);
      CHECK(result.min_size == kleitman_size(n, delta));
    }
  }

  const auto pair = max_delta_pair(5, 3);
  CHECK(pair.min_size == Count{10});
  CHECK(std::min(Count{pair.a.size()}, Count{pair.b.size()}) == pair.min_size);
  for (const auto& a : pair.a.blocks()) {
    for (const auto& b : pair.b.blocks()) {
      CHECK(lpbus::hamming_distance(a, b) <= 3);
    }
  }

  CHECK_THROWS_AS(max_delta_pair(6, 2), lpbus::resource_limit_error);
}

TEST_CASE("assumption-free pair sweep agrees with the quasi-sphere pruning") {
  for (int n = 0; n <= 4; ++n) {
    for (int delta = 0; delta <= n; ++delta) {
      CAPTURE(n);
      CAPTURE(delta);
      const Count free_search = lpbus::max_delta_pair_exhaustive(n, delta);
      CHECK(free_search == kleitman_size(n, delta));
      CHECK(free_search == max_delta_pair(n, delta).min_size);
    }
  }
  CHECK_THROWS_AS(lpbus::max_delta_pair_exhaustive(5, 2), lpbus::resource_limit_error);
}
