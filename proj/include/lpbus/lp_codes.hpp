#pragma once

#include <vector>

#include "lpbus/combinatorics.hpp"
#include "lpbus/count.hpp"
#include "lpbus/hamming.hpp"

namespace lpbus {

// Parameters of an (n, delta)_s family. delta above n is clamped to n (the
// full space then qualifies); s is 1 (stateless) or 2 (stateful).
struct LpParams {
  int n = 0;
  int delta = 0;
  int s = 1;
};

LpParams make_lp_params(int n, int delta, int s);

// An indexed family of subcodes; the family is an LP code when every
// cyclically consecutive pair has cross-diameter <= delta.
struct LpCodeFamily {
  int n = 0;
  int delta = 0;
  std::vector<Code> subcodes;
};

// All subsets of size <= radius plus the first top_count (radius+1)-subsets
// in lexicographic order. radius is -1 for the empty sphere.
struct QuasiSphere {
  int n = 0;
  int radius = -1;
  Count top_count;
  SetSystem blocks;
};

// Maximum size of a code of width n with diameter <= delta.
Count kleitman_size(int n, int delta);

// The extremal code attaining kleitman_size: all words of weight <= delta/2,
// plus (for odd delta) the weight-((delta+1)/2) words whose support contains
// the fixed point x. delta >= n yields the full space.
Code kleitman_code(int n, int delta, int x = 1);

// Optimal two-state family: both subcodes equal kleitman_code(n, delta, x).
LpCodeFamily stateful_optimal(int n, int delta, int x = 1);

// The unique quasi-sphere of dimension n with exactly target_size blocks.
QuasiSphere quasi_sphere(int n, const Count& target_size);

// The unique maximal system forming a delta-pair with `a`: every block within
// symmetric-difference distance delta of all of a's blocks. Brute force over
// all 2^n candidates; n <= 20.
SetSystem best_response(const SetSystem& a, int delta);

bool is_lp_family(const LpCodeFamily& family);

// Exact diameter of kleitman_code(n, delta, x) without the quadratic scan.
int extremal_diameter(int n, int delta);

}  // namespace lpbus
