#include "lpbus/codec.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "lpbus/combinatorics.hpp"
#include "lpbus/errors.hpp"
#include "lpbus/lp_codes.hpp"

namespace lpbus {

namespace {

constexpr int kMaxPracticalWidth = 1 << 24;

// kleitman_size that saturates instead of overflowing, for width searches.
bool size_reaches(int n, int delta, const Count& target) {
  try {
    return kleitman_size(n, delta) >= target;
  } catch (const std::overflow_error&) {
    return true;  // beyond 128 bits is certainly >= any 2^k
  }
}

}  // namespace

WidthChoice minimal_width(int k, int delta) {
  if (k < 1 || k > 64) throw std::invalid_argument("minimal_width: k must be in [1, 64]");
  if (delta < 1) throw std::invalid_argument("minimal_width: delta must be >= 1");
  if (delta == 1 && k >= 2) {
    // a diameter-1 code never exceeds two words, so no width reaches 2^k
    throw std::invalid_argument("minimal_width: no width can carry k >= 2 bits at delta = 1");
  }
  const Count target = Count::pow2(k);
  int hi = 1;
  while (!size_reaches(hi, delta, target)) {
    if (hi >= kMaxPracticalWidth) {
      throw resource_limit_error("minimal_width: required width exceeds practical bus scale");
    }
    hi = std::min(hi * 2, kMaxPracticalWidth);
  }
  int lo = hi / 2 + 1;  // sizes below hi/2+1 were ruled out by the doubling scan
  if (hi == 1) lo = 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (size_reaches(mid, delta, target)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const int g = std::gcd(hi, k);
  return WidthChoice{hi, WireExpansion{hi / g, k / g}};
}

CodecConfig CodecConfig::make(int k, int delta, int n, int x0) {
  if (k < 1 || k > 64) throw std::invalid_argument("CodecConfig: k must be in [1, 64]");
  if (delta < 1) throw std::invalid_argument("CodecConfig: delta must be >= 1");
  if (n == 0) n = minimal_width(k, delta).n;
  if (n < 1) throw std::invalid_argument("CodecConfig: n must be >= 1");

  CodecConfig cfg;
  cfg.k_ = k;
  cfg.n_ = n;
  cfg.delta_ = std::min(delta, n);
  cfg.x0_ = x0;
  if (cfg.delta_ >= n) {
    cfg.m_ = n;
  } else if (cfg.delta_ % 2 == 0) {
    cfg.m_ = cfg.delta_ / 2;
  } else {
    cfg.m_ = (cfg.delta_ + 1) / 2;
    cfg.odd_top_ = true;
    if (x0 < 1 || x0 > n) throw std::invalid_argument("CodecConfig: x0 out of range");
  }

  cfg.layer_start_.assign(static_cast<std::size_t>(cfg.m_) + 2, Count{0});
  Count running{0};
  for (int t = 0; t <= cfg.m_; ++t) {
    cfg.layer_start_[static_cast<std::size_t>(t)] = running;
    if (cfg.odd_top_ && t == cfg.m_) {
      running += binomial(n - 1, cfg.m_ - 1);
    } else {
      running += binomial(n, t);
    }
  }
  cfg.layer_start_[static_cast<std::size_t>(cfg.m_) + 1] = running;

  if (cfg.capacity() < Count::pow2(k)) {
    throw std::invalid_argument(
        "CodecConfig: the (n, delta) code cannot carry 2^k source words");
  }
  return cfg;
}

BitWord encode(const CodecConfig& cfg, const BitWord& source) {
  if (source.width() != cfg.k()) {
    throw std::invalid_argument("encode: source width does not match k");
  }
  const Count v{source.value()};
  const auto& start = cfg.layer_start();
  int t = 0;
  while (start[static_cast<std::size_t>(t) + 1] <= v) ++t;
  const Count r = v - start[static_cast<std::size_t>(t)];
  if (cfg.odd_top() && t == cfg.max_weight()) {
    return adjoin_point(colex_unrank(cfg.n() - 1, t - 1, r), cfg.fixed_point());
  }
  return colex_unrank(cfg.n(), t, r);
}

BitWord decode(const CodecConfig& cfg, const BitWord& codeword) {
  if (codeword.width() != cfg.n()) {
    throw std::invalid_argument("decode: codeword width does not match n");
  }
  const int w = codeword.weight();
  if (w > cfg.max_weight()) {
    throw codeword_error("decode: codeword weight exceeds the code's maximum");
  }
  Count r;
  if (cfg.odd_top() && w == cfg.max_weight()) {
    if (!codeword.test(cfg.fixed_point())) {
      throw codeword_error("decode: top-layer codeword misses the fixed point");
    }
    r = colex_rank(w - 1, delete_point(codeword, cfg.fixed_point()));
  } else {
    r = colex_rank(w, codeword);
  }
  const Count v = cfg.layer_start()[static_cast<std::size_t>(w)] + r;
  if (v >= Count::pow2(cfg.k())) {
    throw codeword_error("decode: codeword lies beyond the encoded prefix");
  }
  return BitWord::from_value(cfg.k(), v.as_u64());
}

namespace {

Trace map_trace(const CodecConfig& cfg, const Trace& trace, int in_width, int out_width,
                BitWord (*op)(const CodecConfig&, const BitWord&), const char* what) {
  if (trace.width != in_width) {
    throw std::invalid_argument(std::string(what) + ": trace width mismatch");
  }
  std::vector<BitWord> out;
  out.reserve(trace.words.size());
  for (std::size_t i = 0; i < trace.words.size(); ++i) {
    try {
      out.push_back(op(cfg, trace.words[i]));
    } catch (const std::exception& e) {
      throw parse_error(std::string(what) + ": " + e.what(), static_cast<int>(i) + 1);
    }
  }
  return Trace{out_width, std::move(out), trace.source};
}

}  // namespace

Trace encode_trace(const CodecConfig& cfg, const Trace& trace) {
  return map_trace(cfg, trace, cfg.k(), cfg.n(), encode, "encode");
}

Trace decode_trace(const CodecConfig& cfg, const Trace& trace) {
  return map_trace(cfg, trace, cfg.n(), cfg.k(), decode, "decode");
}

}  // namespace lpbus
