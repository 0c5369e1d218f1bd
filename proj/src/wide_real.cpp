#include "hardylab/wide_real.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "hardylab/error.hpp"

extern "C" {
#include <quadmath.h>
}

namespace hardylab {

namespace {
// Beyond this exponent gap the smaller addend is below quad resolution.
constexpr std::int64_t kAlignLimit = 130;
}  // namespace

WideReal::WideReal(quad value) : mantissa_(value), exponent_(0) { normalize(); }

WideReal WideReal::from_parts(quad mantissa, std::int64_t exponent) {
  WideReal w;
  w.mantissa_ = mantissa;
  w.exponent_ = exponent;
  w.normalize();
  return w;
}

WideReal WideReal::from_log(quad natural_log) {
  // Split ln x = k ln 2 + rest with |rest| <= ln 2.
  const quad ln2 = M_LN2q;
  const quad k = floorq(natural_log / ln2);
  const quad rest = natural_log - k * ln2;
  return from_parts(expq(rest), static_cast<std::int64_t>(k));
}

void WideReal::normalize() {
  if (mantissa_ == 0 || !finiteq(mantissa_)) {
    if (mantissa_ == 0) exponent_ = 0;
    return;
  }
  int e = 0;
  mantissa_ = frexpq(mantissa_, &e);
  exponent_ += e;
}

double WideReal::to_double() const { return static_cast<double>(to_quad()); }

quad WideReal::to_quad() const {
  if (is_zero()) return 0;
  if (exponent_ > 20000) return mantissa_ > 0 ? HUGE_VALQ : -HUGE_VALQ;
  if (exponent_ < -20000) return 0;
  return ldexpq(mantissa_, static_cast<int>(exponent_));
}

quad WideReal::log() const {
  if (is_zero()) return -HUGE_VALQ;
  return logq(fabsq(mantissa_)) + static_cast<quad>(exponent_) * M_LN2q;
}

WideReal WideReal::sqrt() const {
  if (is_negative()) throw Error(ErrorKind::not_positive, "square root of a negative value");
  if (is_zero()) return {};
  quad m = mantissa_;
  std::int64_t e = exponent_;
  if (e % 2 != 0) {
    m *= 2;
    e -= 1;
  }
  return from_parts(sqrtq(m), e / 2);
}

WideReal WideReal::abs() const {
  WideReal w = *this;
  w.mantissa_ = fabsq(w.mantissa_);
  return w;
}

WideReal WideReal::operator-() const {
  WideReal w = *this;
  w.mantissa_ = -w.mantissa_;
  return w;
}

WideReal& WideReal::operator+=(const WideReal& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t gap = exponent_ - rhs.exponent_;
  if (gap > kAlignLimit) return *this;
  if (gap < -kAlignLimit) return *this = rhs;
  if (gap >= 0) {
    mantissa_ += ldexpq(rhs.mantissa_, static_cast<int>(-gap));
  } else {
    mantissa_ = ldexpq(mantissa_, static_cast<int>(gap)) + rhs.mantissa_;
    exponent_ = rhs.exponent_;
  }
  normalize();
  return *this;
}

WideReal& WideReal::operator-=(const WideReal& rhs) { return *this += -rhs; }

WideReal& WideReal::operator*=(const WideReal& rhs) {
  mantissa_ *= rhs.mantissa_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

WideReal& WideReal::operator/=(const WideReal& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::invalid_parameter, "division by zero");
  mantissa_ /= rhs.mantissa_;
  exponent_ -= rhs.exponent_;
  normalize();
  return *this;
}

std::partial_ordering operator<=>(const WideReal& a, const WideReal& b) {
  const WideReal diff = a - b;
  if (diff.mantissa_ != diff.mantissa_) return std::partial_ordering::unordered;
  if (diff.is_zero()) return std::partial_ordering::equivalent;
  return diff.is_negative() ? std::partial_ordering::less : std::partial_ordering::greater;
}

std::string WideReal::to_string() const {
  char buf[64];
  const double d = to_double();
  if (is_zero() || (std::isfinite(d) && d != 0 && std::fabs(d) >= std::numeric_limits<double>::min())) {
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g*2^%lld", static_cast<double>(mantissa_),
                static_cast<long long>(exponent_));
  return buf;
}

WideReal WideReal::parse(const std::string& text) {
  const auto star = text.find("*2^");
  char* end = nullptr;
  if (star == std::string::npos) {
    const double d = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(d))
      throw Error(ErrorKind::parse_error, "not a number: '" + text + "'");
    return WideReal(d);
  }
  const std::string head = text.substr(0, star);
  const std::string tail = text.substr(star + 3);
  const double m = std::strtod(head.c_str(), &end);
  if (end == head.c_str() || *end != '\0')
    throw Error(ErrorKind::parse_error, "bad mantissa in '" + text + "'");
  const long long e = std::strtoll(tail.c_str(), &end, 10);
  if (end == tail.c_str() || *end != '\0')
    throw Error(ErrorKind::parse_error, "bad exponent in '" + text + "'");
  return from_parts(m, e);
}

quad ratio(const WideReal& a, const WideReal& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_parameter, "ratio with zero denominator");
  if (a.is_zero()) return 0;
  const std::int64_t gap = a.exponent() - b.exponent();
  const quad m = a.mantissa() / b.mantissa();
  if (gap > 20000) return m > 0 ? HUGE_VALQ : -HUGE_VALQ;
  if (gap < -20000) return 0;
  return ldexpq(m, static_cast<int>(gap));
}

namespace qm {
quad sqrt(quad x) { return sqrtq(x); }
quad log(quad x) { return logq(x); }
quad log1p(quad x) { return log1pq(x); }
quad exp(quad x) { return expq(x); }
quad abs(quad x) { return fabsq(x); }
quad pow(quad x, quad y) { return powq(x, y); }
bool isfinite(quad x) { return finiteq(x) != 0; }
std::string to_string(quad x, int digits) {
  char buf[96];
  quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
  return buf;
}
}  // namespace qm

}  // namespace hardylab
