#pragma once

#include <vector>

#include "lpbus/count.hpp"
#include "lpbus/hamming.hpp"
#include "lpbus/lp_codes.hpp"

namespace lpbus {

// Parameters of a w-uniform t-intersecting family of order n; 1 <= t <= w <= n.
// The LP connection is t = w - delta/2 for even delta.
struct IntersectParams {
  int n = 0;
  int w = 0;
  int t = 0;
};

// The i-th Frankl family F(i): all w-subsets F of [n] with |F ∩ [t+2i]| >= t+i.
struct FrequencyFamily {
  IntersectParams params;
  int i = 0;
  SetSystem blocks;
};

FrequencyFamily frankl_family(const IntersectParams& p, int i);

// Closed-form |F(i)|: sum over j of C(t+2i, j) * C(n-t-2i, w-j).
Count frankl_size(const IntersectParams& p, int i);

struct MaxIntersecting {
  int r = 0;  // smallest maximizing index
  FrequencyFamily family;
};

// The maximum w-uniform t-intersecting family M(n, w, t) = |F(r)|.
MaxIntersecting max_intersecting(const IntersectParams& p);
Count max_intersecting_size(const IntersectParams& p, int* r_out = nullptr);

// Optimal stateless constant-weight code: max_intersecting at t = w - delta/2.
// delta must be even; t <= 0 makes the constraint vacuous and yields all of
// H(n, w).
Code cw_stateless_code(int n, int w, int delta);

// Sufficient condition under which the star construction below is certified
// optimal: for every u in [0, t-1],
//   C(w-u, t-u)^2 * C(n-(2t-u), w-(2t-u)) < C(n-t, w-t).
bool cw_stateful_threshold_check(int n, int w, int t);

struct CwStatefulCode {
  LpCodeFamily family;
  bool certified = false;  // cw_stateful_threshold_check result for this n
};

// Two-state constant-weight construction: both subcodes are the star of all
// w-sets containing the fixed t-subset T (default {1..t}), size C(n-t, w-t).
CwStatefulCode cw_stateful_code(int n, int w, int delta, std::vector<int> T = {});

}  // namespace lpbus
