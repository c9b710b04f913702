#pragma once

#include <iosfwd>
#include <string>

#include "qkac/laurent.hpp"

namespace qkac {

/**
 * Element of the field Q(q), stored as a fraction of Laurent polynomials.
 *
 * Canonical form: the denominator has lowest exponent 0 and positive leading
 * coefficient, and numerator and denominator are coprime in Z[q] (integer
 * content included). Equal values therefore have equal representations and
 * operator== compares fields directly.
 */
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQ(LaurentInt numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT
  RatQ(LaurentInt numerator, LaurentInt denominator);

  const LaurentInt& numerator() const noexcept { return num_; }
  const LaurentInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const noexcept { return den_.is_one(); }

  RatQ inverse() const;

  RatQ operator-() const;
  RatQ& operator+=(const RatQ& other);
  RatQ& operator-=(const RatQ& other);
  RatQ& operator*=(const RatQ& other);
  RatQ& operator/=(const RatQ& other);

  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  LaurentInt num_;
  LaurentInt den_;
};

std::ostream& operator<<(std::ostream& os, const RatQ& f);

}  // namespace qkac
