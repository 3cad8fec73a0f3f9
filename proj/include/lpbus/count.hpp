#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lpbus {

// Exact non-negative integer with 128-bit capacity. Arithmetic never wraps:
// exceeding the capacity throws std::overflow_error, going below zero throws
// std::underflow_error.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t value) : value_(value) {}

  // 2^exponent; exponent must be in [0, 127].
  static Count pow2(int exponent);

  Count& operator+=(const Count& other);
  Count& operator-=(const Count& other);
  Count& operator*=(const Count& other);

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }

  friend constexpr bool operator==(const Count&, const Count&) = default;
  friend constexpr auto operator<=>(const Count& a, const Count& b) {
    return a.value_ <=> b.value_;
  }

  bool fits_u64() const { return value_ <= ~std::uint64_t{0}; }
  std::uint64_t as_u64() const;  // throws std::overflow_error if it does not fit
  double as_double() const { return static_cast<double>(value_); }
  std::string str() const;

 private:
  unsigned __int128 value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Count& c);

}  // namespace lpbus
