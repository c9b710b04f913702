#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qkac/laurent.hpp"
#include "qkac/ratq.hpp"

namespace qkac::qarith {

/// [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}). Requires n >= 0, d >= 1.
LaurentInt q_integer(long n, long d = 1);
/// Balanced q-number for any integer n: [-n] = -[n].
LaurentInt q_integer_signed(long n, long d = 1);
/// [n]!_{q^d}.
LaurentInt q_factorial(long n, long d = 1);
/// [n choose k]_{q^d} = [n]! / ([k]! [n-k]!), a Laurent polynomial.
LaurentInt q_binomial(long n, long k, long d = 1);

/// n-th cyclotomic polynomial as a polynomial in q. n >= 1.
const LaurentInt& cyclotomic(long n);
/// Euler's totient.
long euler_phi(long n);

/// Witness that f = sign * q^q_power * prod Phi_n^e, i.e. that f is a unit of
/// Z[q, q^-1, (q^n - 1)^-1 : n > 0].
struct UnitCertificate {
  int sign = 1;
  std::int64_t q_power = 0;
  /// (n, exponent) sorted by n; exponents nonzero.
  std::vector<std::pair<long, long>> factors;

  friend bool operator==(const UnitCertificate&, const UnitCertificate&) = default;
};

/// Factors f over the cyclotomic polynomials. Throws NotAUnit when a
/// non-cyclotomic factor or a nontrivial integer remains.
UnitCertificate certify_unit(const RatQ& f);
RatQ reconstruct(const UnitCertificate& certificate);
/// "n^e n^e ..." ("-" when empty).
std::string format_factors(const UnitCertificate& certificate);

/// True exactly for the rational roots of unity, 1 and -1.
bool is_root_of_unity(const mpq_class& z);

struct Specialization {
  mpq_class value;
  /// z is a root of unity, so the generic statements need not hold there.
  bool root_of_unity = false;
};

/// Exact value of f at q = z. Throws PoleAtZ when the denominator vanishes.
Specialization specialize(const RatQ& f, const mpq_class& z);
/// Parses "3", "-2", "1/3".
mpq_class parse_rational(const std::string& text);
std::string format_rational(const mpq_class& z);

// --- function field F_p(t) ---------------------------------------------------

/// Laurent polynomial in t over the prime field F_p.
class FpLaurent {
 public:
  FpLaurent() = default;
  FpLaurent(std::uint64_t p, std::int64_t low, std::vector<std::uint64_t> coeffs);
  /// Reduction of an integer Laurent polynomial, q -> t.
  static FpLaurent reduce(const LaurentInt& f, std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t low_degree() const noexcept { return low_; }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }

  FpLaurent operator-() const;
  friend FpLaurent operator+(const FpLaurent& a, const FpLaurent& b);
  friend FpLaurent operator-(const FpLaurent& a, const FpLaurent& b) { return a + (-b); }
  friend FpLaurent operator*(const FpLaurent& a, const FpLaurent& b);
  friend bool operator==(const FpLaurent&, const FpLaurent&) = default;
  FpLaurent divide_exact(const FpLaurent& divisor) const;

  std::string to_string() const;

 private:
  void trim();

  std::uint64_t p_ = 0;
  std::int64_t low_ = 0;
  std::vector<std::uint64_t> coeffs_;
};

/// Element of F_p(t), kept as an unreduced fraction.
struct FpRational {
  FpLaurent numerator;
  FpLaurent denominator;
  bool is_zero() const noexcept { return numerator.is_zero(); }
};

/// Image of f in F_p(t) under q -> t. Throws PoleAtZ when the denominator
/// vanishes modulo p.
FpRational specialize_function_field(const RatQ& f, std::uint64_t p);

// --- cyclotomic number field Q(zeta_n) ------------------------------------------

/// Element of Q[x]/(Phi_n), used to specialize at a primitive n-th root of 1.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(long n, std::vector<mpq_class> coeffs);
  /// Image of a Laurent polynomial under q -> zeta_n.
  static CyclotomicNumber from_laurent(const LaurentInt& f, long n);

  long order() const noexcept { return n_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
  }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;
  CyclotomicNumber inverse() const;

 private:
  void reduce();

  long n_ = 1;
  std::vector<mpq_class> coeffs_;
};

}  // namespace qkac::qarith
