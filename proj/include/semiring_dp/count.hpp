#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sdp {

/// Non-negative 128-bit path counter. Arithmetic is checked: an overflow
/// throws std::overflow_error instead of wrapping.
class Count {
 public:
  __extension__ typedef unsigned __int128 rep;

  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : v_(v) {}  // NOLINT(implicit)

  static constexpr Count from_raw(rep v) {
    Count c;
    c.v_ = v;
    return c;
  }

  constexpr rep raw() const { return v_; }

  friend Count operator+(Count a, Count b) {
    rep out;
    if (__builtin_add_overflow(a.v_, b.v_, &out)) {
      throw std::overflow_error("count overflow in addition");
    }
    return from_raw(out);
  }

  friend Count operator*(Count a, Count b) {
    rep out;
    if (__builtin_mul_overflow(a.v_, b.v_, &out)) {
      throw std::overflow_error("count overflow in multiplication");
    }
    return from_raw(out);
  }

  Count& operator+=(Count o) { return *this = *this + o; }
  Count& operator*=(Count o) { return *this = *this * o; }

  friend constexpr bool operator==(Count, Count) = default;
  friend constexpr auto operator<=>(Count a, Count b) { return a.v_ <=> b.v_; }

  bool fits_u64() const { return v_ <= UINT64_MAX; }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("count does not fit in 64 bits");
    return static_cast<std::uint64_t>(v_);
  }
  double to_double() const { return static_cast<double>(v_); }

  std::string to_string() const {
    if (v_ == 0) return "0";
    std::string s;
    for (rep v = v_; v != 0; v /= 10) s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, Count c) { return os << c.to_string(); }

 private:
  rep v_ = 0;
};

}  // namespace sdp
