#include "lpbus/count.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace lpbus {

Count Count::pow2(int exponent) {
  if (exponent < 0 || exponent > 127) {
    throw std::overflow_error("Count::pow2: exponent out of 128-bit range");
  }
  Count c;
  c.value_ = static_cast<unsigned __int128>(1) << exponent;
  return c;
}

Count& Count::operator+=(const Count& other) {
  unsigned __int128 result = 0;
  if (__builtin_add_overflow(value_, other.value_, &result)) {
    throw std::overflow_error("Count: addition exceeds 128-bit capacity");
  }
  value_ = result;
  return *this;
}

Count& Count::operator-=(const Count& other) {
  if (value_ < other.value_) {
    throw std::underflow_error("Count: subtraction below zero");
  }
  value_ -= other.value_;
  return *this;
}

Count& Count::operator*=(const Count& other) {
  unsigned __int128 result = 0;
  if (__builtin_mul_overflow(value_, other.value_, &result)) {
    throw std::overflow_error("Count: multiplication exceeds 128-bit capacity");
  }
  value_ = result;
  return *this;
}

std::uint64_t Count::as_u64() const {
  if (!fits_u64()) {
    throw std::overflow_error("Count: value does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value_);
}

std::string Count::str() const {
  if (value_ == 0) return "0";
  std::string digits;
  unsigned __int128 v = value_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.str(); }

}  // namespace lpbus
