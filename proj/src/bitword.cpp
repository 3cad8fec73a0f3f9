#include "lpbus/bitword.hpp"

#include <bit>
#include <stdexcept>

namespace lpbus {

namespace {
std::size_t limb_count(int width) { return (static_cast<std::size_t>(width) + 63) / 64; }
}  // namespace

BitWord::BitWord(int width) : width_(width), limbs_(limb_count(width), 0) {
  if (width < 0) throw std::invalid_argument("BitWord: negative width");
}

BitWord BitWord::from_string(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(1) << 30) {
    throw std::invalid_argument("BitWord: text too long");
  }
  BitWord w(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1') {
      w.set(static_cast<int>(i) + 1);
    } else if (c != '0') {
      throw std::invalid_argument("BitWord: invalid character in bit string");
    }
  }
  return w;
}

BitWord BitWord::from_support(int width, const std::vector<int>& positions) {
  BitWord w(width);
  for (int p : positions) w.set(p);
  return w;
}

BitWord BitWord::from_value(int width, std::uint64_t value) {
  if (width < 0 || width > 64) {
    throw std::invalid_argument("BitWord::from_value: width must be in [0, 64]");
  }
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("BitWord::from_value: value exceeds width");
  }
  BitWord w(width);
  for (int p = 1; p <= width; ++p) {
    if ((value >> (width - p)) & 1u) w.set(p);
  }
  return w;
}

bool BitWord::test(int pos) const {
  if (pos < 1 || pos > width_) throw std::invalid_argument("BitWord: position out of range");
  const int b = pos - 1;
  return (limbs_[static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1u;
}

void BitWord::set(int pos, bool on) {
  if (pos < 1 || pos > width_) throw std::invalid_argument("BitWord: position out of range");
  const int b = pos - 1;
  const std::uint64_t mask = std::uint64_t{1} << (b % 64);
  if (on) {
    limbs_[static_cast<std::size_t>(b) / 64] |= mask;
  } else {
    limbs_[static_cast<std::size_t>(b) / 64] &= ~mask;
  }
}

int BitWord::weight() const {
  int w = 0;
  for (std::uint64_t limb : limbs_) w += std::popcount(limb);
  return w;
}

std::vector<int> BitWord::support() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t limb = limbs_[i];
    while (limb != 0) {
      const int b = std::countr_zero(limb);
      out.push_back(static_cast<int>(i) * 64 + b + 1);
      limb &= limb - 1;
    }
  }
  return out;
}

std::uint64_t BitWord::value() const {
  if (width_ > 64) throw std::invalid_argument("BitWord::value: width exceeds 64");
  std::uint64_t v = 0;
  if (width_ > 0) {
    const std::uint64_t limb = limbs_[0];
    for (int p = 1; p <= width_; ++p) {
      if ((limb >> (p - 1)) & 1u) v |= std::uint64_t{1} << (width_ - p);
    }
  }
  return v;
}

std::string BitWord::str() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int p : support()) s[static_cast<std::size_t>(p) - 1] = '1';
  return s;
}

int hamming_distance(const BitWord& u, const BitWord& v) {
  if (u.width() != v.width()) {
    throw std::invalid_argument("hamming_distance: width mismatch");
  }
  int d = 0;
  const auto& a = u.limbs();
  const auto& b = v.limbs();
  for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
  return d;
}

int intersection_size(const BitWord& u, const BitWord& v) {
  if (u.width() != v.width()) {
    throw std::invalid_argument("intersection_size: width mismatch");
  }
  int s = 0;
  const auto& a = u.limbs();
  const auto& b = v.limbs();
  for (std::size_t i = 0; i < a.size(); ++i) s += std::popcount(a[i] & b[i]);
  return s;
}

bool colex_less(const BitWord& a, const BitWord& b) {
  const auto& la = a.limbs();
  const auto& lb = b.limbs();
  if (la.size() != lb.size()) return la.size() < lb.size();
  for (std::size_t i = la.size(); i-- > 0;) {
    if (la[i] != lb[i]) return la[i] < lb[i];
  }
  return false;
}

bool canonical_less(const BitWord& a, const BitWord& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  return colex_less(a, b);
}

BitWord adjoin_point(const BitWord& reduced, int x) {
  const int n = reduced.width() + 1;
  if (x < 1 || x > n) throw std::invalid_argument("adjoin_point: position out of range");
  BitWord out(n);
  out.set(x);
  for (int p : reduced.support()) out.set(p < x ? p : p + 1);
  return out;
}

BitWord delete_point(const BitWord& word, int x) {
  const int n = word.width();
  if (x < 1 || x > n) throw std::invalid_argument("delete_point: position out of range");
  BitWord out(n - 1);
  for (int p : word.support()) {
    if (p == x) continue;
    out.set(p < x ? p : p - 1);
  }
  return out;
}

}  // namespace lpbus
