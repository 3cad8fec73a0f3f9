#pragma once

#include <vector>

#include "lpbus/bitword.hpp"
#include "lpbus/count.hpp"
#include "lpbus/trace.hpp"

namespace lpbus {

struct WireExpansion {
  int num = 0;
  int den = 1;
};

struct WidthChoice {
  int n = 0;
  WireExpansion alpha;  // n/k reduced
};

// Smallest n whose optimal diameter-delta code holds 2^k codewords.
WidthChoice minimal_width(int k, int delta);

// Table-free encoder configuration for a k-bit source over n wires with a
// per-cycle transition guarantee delta. Codewords are the first 2^k words of
// the extremal diameter-delta code in (weight, colex) order.
class CodecConfig {
 public:
  // n == 0 selects minimal_width(k, delta). x0 is the fixed point of the odd-
  // delta top layer.
  static CodecConfig make(int k, int delta, int n = 0, int x0 = 1);

  int k() const { return k_; }
  int n() const { return n_; }
  int delta() const { return delta_; }
  int max_weight() const { return m_; }
  int fixed_point() const { return x0_; }
  bool odd_top() const { return odd_top_; }
  Count capacity() const { return layer_start_[static_cast<std::size_t>(m_) + 1]; }

  // layer_start()[t] = number of codewords of weight < t, for t in [0, m+1].
  const std::vector<Count>& layer_start() const { return layer_start_; }

 private:
  CodecConfig() = default;
  int k_ = 0;
  int n_ = 0;
  int delta_ = 0;
  int m_ = 0;
  int x0_ = 1;
  bool odd_top_ = false;
  std::vector<Count> layer_start_;
};

BitWord encode(const CodecConfig& cfg, const BitWord& source);
BitWord decode(const CodecConfig& cfg, const BitWord& codeword);

// Elementwise encode/decode; errors carry the 1-based word index.
Trace encode_trace(const CodecConfig& cfg, const Trace& trace);
Trace decode_trace(const CodecConfig& cfg, const Trace& trace);

}  // namespace lpbus
