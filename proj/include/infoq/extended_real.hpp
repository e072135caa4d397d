#pragma once

#include <string>

namespace infoq {

/// A real number extended with explicit +inf, -inf and "undefined" (0/0)
/// sentinels. Arithmetic never relies on IEEE overflow to produce them.
class ExtendedReal {
 public:
  enum class Kind { finite, pos_infinity, neg_infinity, undefined };

  constexpr ExtendedReal() = default;

  static ExtendedReal finite(double v);
  static constexpr ExtendedReal pos_infinity() { return ExtendedReal(Kind::pos_infinity, 0.0); }
  static constexpr ExtendedReal neg_infinity() { return ExtendedReal(Kind::neg_infinity, 0.0); }
  static constexpr ExtendedReal undefined() { return ExtendedReal(Kind::undefined, 0.0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }

  /// Finite value; throws DomainError for any sentinel.
  double value() const;

  /// IEEE view (inf / -inf / NaN) for callers that only compare.
  double to_double() const;

  std::string to_string() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  constexpr ExtendedReal(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

/// Nonnegative amount of information in bits, or +infinity (an event of
/// probability zero).
class InfoValue {
 public:
  constexpr InfoValue() = default;

  /// Values in [-1e-12, 0) are treated as rounding residue and clamped to 0.
  static InfoValue bits(double b);
  static constexpr InfoValue infinite() {
    InfoValue v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }

  /// Finite bit count; throws DomainError on the infinity sentinel.
  double value() const;

  ExtendedReal as_extended() const {
    return infinite_ ? ExtendedReal::pos_infinity() : ExtendedReal::finite(bits_);
  }

  std::string to_string() const { return as_extended().to_string(); }

  friend bool operator==(const InfoValue&, const InfoValue&) = default;

 private:
  double bits_ = 0.0;
  bool infinite_ = false;
};

/// numerator / denominator with the sentinel rules used throughout the
/// query-count estimators:
///   finite / positive -> finite,  x > 0 / 0 -> +inf,  0 / 0 -> undefined,
///   inf / finite      -> +inf,    finite / inf -> 0,  inf / inf -> undefined.
ExtendedReal divide(const InfoValue& numerator, const InfoValue& denominator);
ExtendedReal divide(const ExtendedReal& numerator, const ExtendedReal& denominator);
ExtendedReal multiply(const ExtendedReal& a, const ExtendedReal& b);

}  // namespace infoq
