#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lpbus {

// Fixed-width binary word over wire positions 1..width. Position 1 is the
// leftmost character of the text form, so a word built from support {1,2,3}
// with width 6 prints as "111000". Width may exceed 64; positions are stored
// in little-endian 64-bit limbs.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(int width);

  static BitWord from_string(std::string_view text);
  static BitWord from_support(int width, const std::vector<int>& positions);
  // Interprets `value` most-significant-bit first from position 1; width <= 64.
  static BitWord from_value(int width, std::uint64_t value);

  int width() const { return width_; }
  bool test(int pos) const;  // 1-based position
  void set(int pos, bool on = true);

  int weight() const;
  std::vector<int> support() const;  // ascending positions
  std::uint64_t value() const;       // MSB-first integer; width <= 64
  std::string str() const;

  const std::vector<std::uint64_t>& limbs() const { return limbs_; }

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  int width_ = 0;
  std::vector<std::uint64_t> limbs_;  // bit (p-1) of the limb array holds position p
};

// Number of positions where u and v differ; widths must match.
int hamming_distance(const BitWord& u, const BitWord& v);

// |supp(u) ∩ supp(v)|; widths must match.
int intersection_size(const BitWord& u, const BitWord& v);

// Co-lexicographic order on supports: the largest differing position decides.
bool colex_less(const BitWord& a, const BitWord& b);

// Canonical library order: weight first, then colex within a weight.
bool canonical_less(const BitWord& a, const BitWord& b);

// Widen a word over [n-1] to [n] by inserting position x (set to 1);
// positions >= x shift up by one.
BitWord adjoin_point(const BitWord& reduced, int x);

// Inverse of adjoin_point: drop position x (whatever its bit) and compact.
BitWord delete_point(const BitWord& word, int x);

}  // namespace lpbus
