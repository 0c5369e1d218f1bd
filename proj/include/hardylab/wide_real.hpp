#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hardylab {

using quad = __float128;

// Quad-precision mantissa with an unbounded binary exponent.
//
// Radial quantities on trees grow like d^r (vol, area) or decay like r/d^r
// (u, Green's function); at depths of 10^5 these leave even the quad exponent
// range. Ratios of neighbouring values stay moderate and are what the radial
// formulas consume, so the representation keeps every value exactly scaled
// and exposes quad-accurate ratios.
class WideReal {
 public:
  constexpr WideReal() = default;
  WideReal(quad value);  // NOLINT: implicit from plain numbers is intended
  WideReal(double value) : WideReal(static_cast<quad>(value)) {}
  WideReal(int value) : WideReal(static_cast<quad>(value)) {}
  WideReal(long value) : WideReal(static_cast<quad>(value)) {}
  WideReal(long long value) : WideReal(static_cast<quad>(value)) {}

  // value = mantissa * 2^exponent; the result is renormalized.
  static WideReal from_parts(quad mantissa, std::int64_t exponent);
  static WideReal from_log(quad natural_log);

  // Normalized mantissa in [0.5, 1) (or 0) and its binary exponent.
  quad mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_positive() const { return mantissa_ > 0; }
  bool is_negative() const { return mantissa_ < 0; }

  // Overflows to inf / underflows to 0 when out of range.
  double to_double() const;
  quad to_quad() const;
  // Natural log of |value|; -inf for zero.
  quad log() const;

  WideReal sqrt() const;
  WideReal abs() const;
  WideReal operator-() const;

  WideReal& operator+=(const WideReal& rhs);
  WideReal& operator-=(const WideReal& rhs);
  WideReal& operator*=(const WideReal& rhs);
  WideReal& operator/=(const WideReal& rhs);

  friend WideReal operator+(WideReal a, const WideReal& b) { return a += b; }
  friend WideReal operator-(WideReal a, const WideReal& b) { return a -= b; }
  friend WideReal operator*(WideReal a, const WideReal& b) { return a *= b; }
  friend WideReal operator/(WideReal a, const WideReal& b) { return a /= b; }

  friend bool operator==(const WideReal& a, const WideReal& b) {
    return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
  }
  friend std::partial_ordering operator<=>(const WideReal& a, const WideReal& b);

  // Decimal text: plain "%.17g" when the value fits a double, otherwise
  // "<mantissa>*2^<exponent>" with a double mantissa.
  std::string to_string() const;
  // Accepts both forms produced by to_string().
  static WideReal parse(const std::string& text);

 private:
  void normalize();

  quad mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

// a / b evaluated to quad precision without forming either value.
quad ratio(const WideReal& a, const WideReal& b);

namespace qm {
quad sqrt(quad x);
quad log(quad x);
quad log1p(quad x);
quad exp(quad x);
quad abs(quad x);
quad pow(quad x, quad y);
bool isfinite(quad x);
std::string to_string(quad x, int digits = 36);
}  // namespace qm

}  // namespace hardylab
