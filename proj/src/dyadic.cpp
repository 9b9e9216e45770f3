#include "napkin/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace napkin {

Dyadic::Dyadic(mpz_class numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const mp_bitcnt_t twos = mpz_scan1(numerator_.get_mpz_t(), 0);
  const std::uint64_t drop = std::min<std::uint64_t>(twos, exponent_);
  if (drop > 0) {
    mpz_tdiv_q_2exp(numerator_.get_mpz_t(), numerator_.get_mpz_t(), drop);
    exponent_ -= drop;
  }
}

mpz_class Dyadic::denominator() const {
  mpz_class d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), exponent_);
  return d;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (exponent_ >= other.exponent_) {
    mpz_class aligned;
    mpz_mul_2exp(aligned.get_mpz_t(), other.numerator_.get_mpz_t(), exponent_ - other.exponent_);
    numerator_ += aligned;
  } else {
    mpz_mul_2exp(numerator_.get_mpz_t(), numerator_.get_mpz_t(), other.exponent_ - exponent_);
    numerator_ += other.numerator_;
    exponent_ = other.exponent_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(long factor) {
  numerator_ *= factor;
  normalize();
  return *this;
}

Dyadic& Dyadic::shift_down(std::uint64_t k) {
  if (numerator_ != 0) exponent_ += k;
  normalize();
  return *this;
}

Dyadic Dyadic::abs() const { return Dyadic(::abs(numerator_), exponent_); }

std::strong_ordering operator<=>(const Dyadic& lhs, const Dyadic& rhs) {
  const std::uint64_t scale = std::max(lhs.exponent_, rhs.exponent_);
  const int c = cmp(lhs.scaled(scale), rhs.scaled(scale));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

mpz_class Dyadic::scaled(std::uint64_t scale) const {
  if (scale < exponent_) throw std::invalid_argument("Dyadic::scaled: scale below exponent");
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), numerator_.get_mpz_t(), scale - exponent_);
  return out;
}

mpq_class Dyadic::to_rational() const { return mpq_class(numerator_, denominator()); }

double Dyadic::to_double() const { return to_rational().get_d(); }

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.get_str();
  return numerator_.get_str() + "/" + denominator().get_str();
}

Dyadic Dyadic::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  const mpz_class& den = q.get_den();
  const mp_bitcnt_t k = mpz_scan1(den.get_mpz_t(), 0);
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("denominator is not a power of two: '" + text + "'");
  }
  return Dyadic(q.get_num(), k);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& value) { return os << value.to_string(); }

}  // namespace napkin
