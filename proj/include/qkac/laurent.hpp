#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qkac {

/**
 * Laurent polynomial in q with arbitrary-precision integer coefficients,
 * i.e. an element of Z[q, q^-1].
 *
 * Stored densely from the lowest to the highest nonzero exponent. Both ends
 * of the coefficient vector are always nonzero, so the zero polynomial is the
 * empty vector and two equal polynomials have identical storage.
 */
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentInt(const mpz_class& constant);

  static LaurentInt monomial(const mpz_class& coefficient, std::int64_t exponent);
  static LaurentInt q_power(std::int64_t exponent) { return monomial(1, exponent); }
  /// Builds sum_k coefficients[k] * q^(low + k).
  static LaurentInt from_coefficients(std::int64_t low, std::vector<mpz_class> coefficients);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  bool is_constant() const noexcept { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }

  /// Lowest and highest exponents with nonzero coefficient. Undefined on zero.
  std::int64_t low_degree() const noexcept { return low_; }
  std::int64_t high_degree() const noexcept {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// high_degree() - low_degree(); the degree of the polynomial obtained by
  /// stripping the power of q. Zero for the zero polynomial.
  std::int64_t span() const noexcept {
    return coeffs_.empty() ? 0 : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }

  mpz_class coefficient(std::int64_t exponent) const;
  const mpz_class& leading_coefficient() const { return coeffs_.back(); }
  const mpz_class& trailing_coefficient() const { return coeffs_.front(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }

  /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
  mpz_class content() const;

  /// Multiplies by q^k.
  LaurentInt shifted(std::int64_t k) const;
  /// Same polynomial with lowest exponent moved to 0.
  LaurentInt stripped() const { return shifted(-low_); }

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& other);
  LaurentInt& operator-=(const LaurentInt& other);
  LaurentInt& operator*=(const LaurentInt& other);
  LaurentInt& operator*=(const mpz_class& scalar);

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend LaurentInt operator*(LaurentInt a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Exact quotient. Throws qkac::Error when `divisor` does not divide *this
  /// in Z[q, q^-1].
  LaurentInt divide_exact(const LaurentInt& divisor) const;
  /// Quotient if `divisor` divides *this exactly, otherwise returns false.
  bool try_divide(const LaurentInt& divisor, LaurentInt& quotient) const;
  LaurentInt divide_exact(const mpz_class& divisor) const;

  /// Exact value at a nonzero rational point.
  mpq_class evaluate(const mpq_class& z) const;

  /// Human readable form, highest exponent first: "q^2 + 1 + q^-2".
  std::string to_string() const;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Greatest common divisor in Z[q, q^-1], normalized to lowest exponent 0 and
/// positive leading coefficient. gcd(0, 0) = 0.
LaurentInt gcd(const LaurentInt& a, const LaurentInt& b);

std::ostream& operator<<(std::ostream& os, const LaurentInt& p);

}  // namespace qkac
