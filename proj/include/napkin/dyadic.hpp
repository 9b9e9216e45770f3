#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace napkin {

/// Exact rational whose denominator is a power of two: numerator / 2^exponent.
///
/// Kept normalized: either the value is zero (numerator 0, exponent 0), the
/// exponent is 0, or the numerator is odd. Normalization makes equality a
/// plain member comparison.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : numerator_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(mpz_class numerator, std::uint64_t exponent = 0);

  static Dyadic ratio(long numerator, std::uint64_t exponent) {
    return Dyadic(mpz_class(numerator), exponent);
  }

  const mpz_class& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }
  mpz_class denominator() const;

  bool is_zero() const { return numerator_ == 0; }
  int sign() const { return sgn(numerator_); }

  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(long factor);
  /// Divides by 2^k exactly.
  Dyadic& shift_down(std::uint64_t k);

  Dyadic half() const {
    Dyadic copy = *this;
    copy.shift_down(1);
    return copy;
  }
  Dyadic abs() const;

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, long rhs) { return lhs *= rhs; }
  friend Dyadic operator-(const Dyadic& value) { return Dyadic(-value.numerator_, value.exponent_); }

  friend bool operator==(const Dyadic& lhs, const Dyadic& rhs) {
    return lhs.exponent_ == rhs.exponent_ && lhs.numerator_ == rhs.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& lhs, const Dyadic& rhs);

  /// Scaled integer value * 2^scale; requires scale >= exponent().
  mpz_class scaled(std::uint64_t scale) const;

  mpq_class to_rational() const;
  double to_double() const;
  /// "p/q", or just "p" for integers.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on a non-dyadic or malformed value.
  static Dyadic parse(const std::string& text);

 private:
  void normalize();

  mpz_class numerator_{0};
  std::uint64_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& value);

}  // namespace napkin
