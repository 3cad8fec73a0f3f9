#include "lpbus/lp_codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lpbus/errors.hpp"
#include "lpbus/limits.hpp"

namespace lpbus {

namespace {

int normalize_delta(int n, int delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  return std::min(delta, n);
}

void check_materializable(const Count& size, const char* what) {
  if (size > Count{kMaxMaterializedWords}) {
    throw resource_limit_error(std::string(what) + ": result too large to materialize");
  }
}

std::vector<BitWord> full_layer(int n, int k) {
  return lex_subsets_prefix(n, k, binomial(n, k));
}

}  // namespace

LpParams make_lp_params(int n, int delta, int s) {
  if (n < 0) throw std::invalid_argument("LpParams: negative n");
  if (delta < 1) throw std::invalid_argument("LpParams: delta must be >= 1");
  if (s != 1 && s != 2) throw std::invalid_argument("LpParams: s must be 1 or 2");
  return LpParams{n, std::min(delta, n), s};
}

Count kleitman_size(int n, int delta) {
  if (n < 0) throw std::invalid_argument("kleitman_size: negative n");
  const int d = normalize_delta(n, delta);
  if (d >= n) return Count::pow2(n);
  Count total{0};
  if (d % 2 == 0) {
    for (int i = 0; i <= d / 2; ++i) total += binomial(n, i);
  } else {
    for (int i = 0; i <= (d - 1) / 2; ++i) total += binomial(n, i);
    total += binomial(n - 1, (d - 1) / 2);
  }
  return total;
}

Code kleitman_code(int n, int delta, int x) {
  if (n < 0) throw std::invalid_argument("kleitman_code: negative n");
  const int d = normalize_delta(n, delta);
  check_materializable(kleitman_size(n, d), "kleitman_code");

  std::vector<BitWord> words;
  if (d >= n) {
    for (int i = 0; i <= n; ++i) {
      auto layer = full_layer(n, i);
      words.insert(words.end(), layer.begin(), layer.end());
    }
    return Code(n, std::move(words));
  }
  const int base = d / 2;  // full layers 0..base
  for (int i = 0; i <= base; ++i) {
    auto layer = full_layer(n, i);
    words.insert(words.end(), layer.begin(), layer.end());
  }
  if (d % 2 == 1) {
    if (x < 1 || x > n) throw std::invalid_argument("kleitman_code: x out of range");
    for (const BitWord& reduced : full_layer(n - 1, base)) {
      words.push_back(adjoin_point(reduced, x));
    }
  }
  return Code(n, std::move(words));
}

LpCodeFamily stateful_optimal(int n, int delta, int x) {
  Code c = kleitman_code(n, delta, x);
  const int d = normalize_delta(n, delta);
  return LpCodeFamily{n, d, {c, c}};
}

QuasiSphere quasi_sphere(int n, const Count& target_size) {
  if (n < 0 || n > 64) throw std::invalid_argument("quasi_sphere: n must be in [0, 64]");
  if (target_size > Count::pow2(n)) {
    throw std::invalid_argument("quasi_sphere: target size exceeds 2^n");
  }
  check_materializable(target_size, "quasi_sphere");

  int radius = -1;
  Count below{0};  // blocks of size <= radius
  while (radius < n) {
    const Count next = below + binomial(n, radius + 1);
    if (next > target_size) break;
    below = next;
    ++radius;
  }
  const Count top = target_size - below;

  std::vector<BitWord> blocks;
  for (int i = 0; i <= radius; ++i) {
    auto layer = full_layer(n, i);
    blocks.insert(blocks.end(), layer.begin(), layer.end());
  }
  if (top > Count{0}) {
    auto prefix = lex_subsets_prefix(n, radius + 1, top);
    blocks.insert(blocks.end(), prefix.begin(), prefix.end());
  }
  return QuasiSphere{n, radius, top, SetSystem(n, std::move(blocks))};
}

SetSystem best_response(const SetSystem& a, int delta) {
  const int n = a.n();
  if (n > 20) throw resource_limit_error("best_response: n > 20 exceeds the brute-force bound");
  const int d = normalize_delta(n, delta);
  const std::uint64_t universe = std::uint64_t{1} << n;

  std::vector<BitWord> result;
  if (d >= n || a.empty()) {
    // every candidate is within distance n of everything (or the condition
    // is vacuous): the response is the full power set
    check_materializable(Count{universe}, "best_response");
    result.reserve(universe);
    for (std::uint64_t mask = 0; mask < universe; ++mask) {
      BitWord w(n);
      for (int p = 1; p <= n; ++p) {
        if ((mask >> (p - 1)) & 1u) w.set(p);
      }
      result.push_back(std::move(w));
    }
    return SetSystem(n, std::move(result));
  }

  // Partition a's blocks by size. A size class containing all C(n, i) blocks
  // admits a closed-form worst case; others are scanned with early exit.
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n) + 1);
  for (const BitWord& block : a.blocks()) {
    by_size[static_cast<std::size_t>(block.weight())].push_back(
        block.width() == 0 ? 0 : block.limbs()[0]);
  }
  std::vector<int> full_sizes;
  std::vector<const std::vector<std::uint64_t>*> partial_classes;
  for (int i = 0; i <= n; ++i) {
    const auto& cls = by_size[static_cast<std::size_t>(i)];
    if (cls.empty()) continue;
    if (Count{cls.size()} == binomial(n, i)) {
      full_sizes.push_back(i);
    } else {
      partial_classes.push_back(&cls);
    }
  }

  for (std::uint64_t mask = 0; mask < universe; ++mask) {
    const int b = std::popcount(mask);
    bool ok = true;
    for (int i : full_sizes) {
      const int forced = std::max(0, i - (n - b));  // min |B ∩ A| over all i-sets
      if (b + i - 2 * forced > d) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto* cls : partial_classes) {
      for (std::uint64_t block : *cls) {
        if (std::popcount(mask ^ block) > d) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    BitWord w(n);
    for (int p = 1; p <= n; ++p) {
      if ((mask >> (p - 1)) & 1u) w.set(p);
    }
    result.push_back(std::move(w));
  }
  return SetSystem(n, std::move(result));
}

bool is_lp_family(const LpCodeFamily& family) {
  const std::size_t s = family.subcodes.size();
  for (std::size_t i = 0; i < s; ++i) {
    const Code& cur = family.subcodes[i];
    const Code& next = family.subcodes[(i + 1) % s];
    if (cur.empty() || next.empty()) continue;  // vacuous pair
    if (cross_diameter(cur, next) > family.delta) return false;
  }
  return true;
}

int extremal_diameter(int n, int delta) {
  if (n < 0) throw std::invalid_argument("extremal_diameter: negative n");
  return std::min(normalize_delta(n, delta), n);
}

}  // namespace lpbus
