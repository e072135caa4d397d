#include "infoq/extended_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "infoq/error.hpp"

namespace infoq {

namespace {

int sign_of(const ExtendedReal& x) {
  switch (x.kind()) {
    case ExtendedReal::Kind::pos_infinity:
      return 1;
    case ExtendedReal::Kind::neg_infinity:
      return -1;
    default: {
      const double v = x.value();
      return (v > 0) - (v < 0);
    }
  }
}

ExtendedReal infinity_with_sign(int s) {
  return s >= 0 ? ExtendedReal::pos_infinity() : ExtendedReal::neg_infinity();
}

}  // namespace

ExtendedReal ExtendedReal::finite(double v) {
  if (!std::isfinite(v)) {
    throw DomainError("ExtendedReal::finite given a non-finite value");
  }
  return ExtendedReal(Kind::finite, v);
}

double ExtendedReal::value() const {
  if (kind_ != Kind::finite) {
    throw DomainError("value() called on a non-finite ExtendedReal (" + to_string() + ")");
  }
  return value_;
}

double ExtendedReal::to_double() const {
  switch (kind_) {
    case Kind::finite:
      return value_;
    case Kind::pos_infinity:
      return std::numeric_limits<double>::infinity();
    case Kind::neg_infinity:
      return -std::numeric_limits<double>::infinity();
    case Kind::undefined:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string ExtendedReal::to_string() const {
  switch (kind_) {
    case Kind::pos_infinity:
      return "inf";
    case Kind::neg_infinity:
      return "-inf";
    case Kind::undefined:
      return "undefined";
    case Kind::finite:
      break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value_);
  return buf;
}

InfoValue InfoValue::bits(double b) {
  if (std::isnan(b) || std::isinf(b)) {
    throw DomainError("InfoValue::bits given a non-finite value; use InfoValue::infinite()");
  }
  if (b < 0.0) {
    if (b < -1e-12) {
      throw DomainError("InfoValue must be nonnegative");
    }
    b = 0.0;
  }
  InfoValue v;
  v.bits_ = b;
  return v;
}

double InfoValue::value() const {
  if (infinite_) {
    throw DomainError("value() called on an infinite InfoValue");
  }
  return bits_;
}

ExtendedReal divide(const InfoValue& numerator, const InfoValue& denominator) {
  return divide(numerator.as_extended(), denominator.as_extended());
}

ExtendedReal divide(const ExtendedReal& n, const ExtendedReal& d) {
  using K = ExtendedReal::Kind;
  if (n.kind() == K::undefined || d.kind() == K::undefined) {
    return ExtendedReal::undefined();
  }
  const bool n_inf = !n.is_finite();
  const bool d_inf = !d.is_finite();
  if (n_inf && d_inf) {
    return ExtendedReal::undefined();
  }
  if (d_inf) {
    return ExtendedReal::finite(0.0);
  }
  const double dv = d.value();
  if (n_inf) {
    return infinity_with_sign(sign_of(n) * (dv < 0 ? -1 : 1));
  }
  const double nv = n.value();
  if (dv == 0.0) {
    if (nv == 0.0) {
      return ExtendedReal::undefined();
    }
    return infinity_with_sign(nv > 0 ? 1 : -1);
  }
  const double q = nv / dv;
  if (!std::isfinite(q)) {
    return infinity_with_sign(q > 0 ? 1 : -1);
  }
  return ExtendedReal::finite(q);
}

ExtendedReal multiply(const ExtendedReal& a, const ExtendedReal& b) {
  using K = ExtendedReal::Kind;
  if (a.kind() == K::undefined || b.kind() == K::undefined) {
    return ExtendedReal::undefined();
  }
  if (a.is_finite() && b.is_finite()) {
    return ExtendedReal::finite(a.value() * b.value());
  }
  const int s = sign_of(a) * sign_of(b);
  if (s == 0) {
    return ExtendedReal::undefined();
  }
  return infinity_with_sign(s);
}

}  // namespace infoq
