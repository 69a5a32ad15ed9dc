#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qsl2 {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition or value-domain violation (CLI exit code 1).
struct domain_error : error {
  using error::error;
};

/// Malformed textual input (CLI exit code 2).
struct parse_error : error {
  using error::error;
};

/// Half-integer stored as twice its value, so spin labels, weights and
/// q-exponents stay in exact integer arithmetic.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long whole) : twice_(2 * whole) {}
  constexpr HalfInt(int whole) : twice_(2L * whole) {}

  static constexpr HalfInt from_twice(long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Value as a long; throws unless the value is a whole integer.
  long to_long() const {
    if (!is_integer()) throw domain_error("HalfInt " + str() + " is not an integer");
    return twice_ / 2;
  }
  constexpr double to_double() const { return 0.5 * static_cast<double>(twice_); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator*(long n, HalfInt h) { return from_twice(n * h.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  /// Lowest-terms rendering with denominator 1 or 2: "2", "3/2", "-1/2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  /// Parses "2", "-3", "3/2", "-1/2". Rejects non-lowest-terms such as "4/2".
  static HalfInt parse(const std::string& s);

private:
  long twice_ = 0;
};

constexpr HalfInt half(long numerator) { return HalfInt::from_twice(numerator); }

/// (-1)^(2j) for a half-integer exponent, i.e. -1 exactly when 2j is odd.
inline int parity_sign(HalfInt j) { return (j.twice() % 2 == 0) ? +1 : -1; }

}  // namespace qsl2
