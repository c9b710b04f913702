#include "qkac/qarith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "qkac/error.hpp"

namespace qkac::qarith {

LaurentInt q_integer(long n, long d) {
  if (n < 0) throw InvalidInput("q_integer: negative argument " + std::to_string(n));
  if (d < 1) throw InvalidInput("q_integer: base exponent must be positive");
  if (n == 0) return {};
  // q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(2 * d * (n - 1) + 1), mpz_class(0));
  for (long k = 0; k < n; ++k) coeffs[static_cast<std::size_t>(2 * d * k)] = 1;
  return LaurentInt::from_coefficients(-d * (n - 1), std::move(coeffs));
}

LaurentInt q_integer_signed(long n, long d) {
  return n >= 0 ? q_integer(n, d) : -q_integer(-n, d);
}

LaurentInt q_factorial(long n, long d) {
  if (n < 0) throw InvalidInput("q_factorial: negative argument " + std::to_string(n));
  LaurentInt r(1);
  for (long k = 2; k <= n; ++k) r *= q_integer(k, d);
  return r;
}

LaurentInt q_binomial(long n, long k, long d) {
  if (n < 0 || k < 0 || k > n) throw InvalidInput("q_binomial: need 0 <= k <= n");
  return q_factorial(n, d).divide_exact(q_factorial(k, d) * q_factorial(n - k, d));
}

long euler_phi(long n) {
  if (n < 1) throw InvalidInput("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const LaurentInt& cyclotomic(long n) {
  if (n < 1) throw InvalidInput("cyclotomic: n must be >= 1, got " + std::to_string(n));
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<LaurentInt>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
  LaurentInt value = LaurentInt::q_power(n) - LaurentInt(1);
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) value = value.divide_exact(cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<LaurentInt>(std::move(value)));
  return *it->second;
}

UnitCertificate certify_unit(const RatQ& f) {
  if (f.is_zero()) throw NotAUnit("0");
  UnitCertificate cert;
  cert.q_power = f.numerator().low_degree();
  LaurentInt num = f.numerator().stripped();
  LaurentInt den = f.denominator();
  std::map<long, long> exponents;
  const std::int64_t bound = num.span() + den.span();
  // phi(k) >= sqrt(k/2), so every cyclotomic factor of degree <= bound has
  // index at most 2 * bound^2.
  const long k_max = 2 * bound * bound + 2;
  for (long k = 1; k <= k_max && (num.span() > 0 || den.span() > 0); ++k) {
    const long phi = euler_phi(k);
    if (phi > std::max(num.span(), den.span())) continue;
    const LaurentInt& cyc = cyclotomic(k);
    LaurentInt quotient;
    while (num.span() >= phi && num.try_divide(cyc, quotient)) {
      num = std::move(quotient);
      ++exponents[k];
    }
    while (den.span() >= phi && den.try_divide(cyc, quotient)) {
      den = std::move(quotient);
      --exponents[k];
    }
  }
  const bool unit_num = num.is_constant() && abs(num.trailing_coefficient()) == 1;
  if (!unit_num || !den.is_one()) {
    throw NotAUnit(RatQ(num, den).to_string());
  }
  cert.sign = sgn(num.trailing_coefficient());
  for (const auto& [k, e] : exponents) {
    if (e != 0) cert.factors.emplace_back(k, e);
  }
  return cert;
}

RatQ reconstruct(const UnitCertificate& certificate) {
  LaurentInt num = LaurentInt::monomial(certificate.sign, certificate.q_power);
  LaurentInt den(1);
  for (const auto& [n, e] : certificate.factors) {
    for (long k = 0; k < (e > 0 ? e : -e); ++k) {
      if (e > 0) {
        num *= cyclotomic(n);
      } else {
        den *= cyclotomic(n);
      }
    }
  }
  return RatQ(std::move(num), std::move(den));
}

std::string format_factors(const UnitCertificate& certificate) {
  if (certificate.factors.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, e] : certificate.factors) {
    if (!first) os << ' ';
    first = false;
    os << n << '^' << e;
  }
  return os.str();
}

bool is_root_of_unity(const mpq_class& z) { return z == 1 || z == -1; }

Specialization specialize(const RatQ& f, const mpq_class& z) {
  Specialization out;
  out.root_of_unity = is_root_of_unity(z);
  const mpq_class den = f.denominator().evaluate(z);
  if (sgn(den) == 0) {
    throw PoleAtZ("denominator " + f.denominator().to_string() + " vanishes at q = " +
                  format_rational(z));
  }
  out.value = f.numerator().evaluate(z) / den;
  out.value.canonicalize();
  return out;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
  if (sgn(z.get_den()) == 0) throw InvalidInput("zero denominator in '" + text + "'");
  z.canonicalize();
  return z;
}

std::string format_rational(const mpq_class& z) {
  mpq_class c(z);
  c.canonicalize();
  return c.get_str();
}

// --- FpLaurent -------------------------------------------------------------------

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
  }
  return result;
}

}  // namespace

FpLaurent::FpLaurent(std::uint64_t p, std::int64_t low, std::vector<std::uint64_t> coeffs)
    : p_(p), low_(low), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

FpLaurent FpLaurent::reduce(const LaurentInt& f, std::uint64_t p) {
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(f.coefficients().size());
  const mpz_class modulus(static_cast<unsigned long>(p));
  for (const auto& c : f.coefficients()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    coeffs.push_back(r.get_ui());
  }
  return FpLaurent(p, f.is_zero() ? 0 : f.low_degree(), std::move(coeffs));
}

void FpLaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ = coeffs_.empty() ? 0 : low_ + static_cast<std::int64_t>(lead);
}

FpLaurent FpLaurent::operator-() const {
  FpLaurent r = *this;
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : p_ - c;
  return r;
}

FpLaurent operator+(const FpLaurent& a, const FpLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint64_t p = a.p_;
  const std::int64_t lo = std::min(a.low_, b.low_);
  const std::int64_t hi = std::max(a.low_ + static_cast<std::int64_t>(a.coeffs_.size()),
                                   b.low_ + static_cast<std::int64_t>(b.coeffs_.size()));
  std::vector<std::uint64_t> r(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[static_cast<std::size_t>(a.low_ - lo) + k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    auto& slot = r[static_cast<std::size_t>(b.low_ - lo) + k];
    slot = (slot + b.coeffs_[k]) % p;
  }
  return FpLaurent(p, lo, std::move(r));
}

FpLaurent operator*(const FpLaurent& a, const FpLaurent& b) {
  if (a.is_zero() || b.is_zero()) return FpLaurent(a.p_ ? a.p_ : b.p_, 0, {});
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a.coeffs_[i], b.coeffs_[j], p)) % p;
    }
  }
  return FpLaurent(p, a.low_ + b.low_, std::move(r));
}

FpLaurent FpLaurent::divide_exact(const FpLaurent& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero in F_p(t)");
  if (is_zero()) return *this;
  const std::size_t nd = divisor.coeffs_.size();
  if (coeffs_.size() < nd) throw Error("inexact division in F_p[t, 1/t]");
  std::vector<std::uint64_t> rem = coeffs_;
  std::vector<std::uint64_t> quo(coeffs_.size() - nd + 1, 0);
  const std::uint64_t lead_inv = inv_mod(divisor.coeffs_.back(), p_);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const std::uint64_t top = rem[k + nd - 1];
    if (top == 0) continue;
    quo[k] = mul_mod(top, lead_inv, p_);
    for (std::size_t j = 0; j < nd; ++j) {
      rem[k + j] = (rem[k + j] + p_ - mul_mod(quo[k], divisor.coeffs_[j], p_)) % p_;
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::uint64_t c) { return c != 0; })) {
    throw Error("inexact division in F_p[t, 1/t]");
  }
  return FpLaurent(p_, low_ - divisor.low_, std::move(quo));
}

std::string FpLaurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::int64_t e = low_ + static_cast<std::int64_t>(k);
    os << coeffs_[k];
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

FpRational specialize_function_field(const RatQ& f, std::uint64_t p) {
  FpRational r{FpLaurent::reduce(f.numerator(), p), FpLaurent::reduce(f.denominator(), p)};
  if (r.denominator.is_zero()) {
    throw PoleAtZ("denominator " + f.denominator().to_string() + " vanishes modulo " +
                  std::to_string(p));
  }
  return r;
}

// --- CyclotomicNumber ----------------------------------------------------------------

namespace {

using QPoly = std::vector<mpq_class>;

void trim_q(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a by b over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim_q(a);
  QPoly quo;
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, mpq_class(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    quo[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    a.pop_back();
    trim_q(a);
  }
  trim_q(quo);
  return {quo, a};
}

QPoly mul_q(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_q(r);
  return r;
}

QPoly sub_q(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim_q(a);
  return a;
}

QPoly cyclotomic_q(long n) {
  QPoly r;
  for (const auto& c : cyclotomic(n).coefficients()) r.emplace_back(c);
  return r;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(long n, std::vector<mpq_class> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  reduce();
}

CyclotomicNumber CyclotomicNumber::from_laurent(const LaurentInt& f, long n) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(n), mpq_class(0));
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    std::int64_t e = (f.low_degree() + static_cast<std::int64_t>(k)) % n;
    if (e < 0) e += n;
    coeffs[static_cast<std::size_t>(e)] += f.coefficients()[k];
  }
  return CyclotomicNumber(n, std::move(coeffs));
}

void CyclotomicNumber::reduce() {
  trim_q(coeffs_);
  coeffs_ = divmod(std::move(coeffs_), cyclotomic_q(n_)).second;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  std::vector<mpq_class> r = a.coeffs_;
  if (r.size() < b.coeffs_.size()) r.resize(b.coeffs_.size(), mpq_class(0));
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
  return CyclotomicNumber(std::max(a.n_, b.n_), std::move(r));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return CyclotomicNumber(std::max(a.n_, b.n_), mul_q(a.coeffs_, b.coeffs_));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw Error("inverse of zero in Q(zeta)");
  // Extended Euclid: s * a + t * Phi = 1.
  QPoly r0 = cyclotomic_q(n_);
  QPoly r1 = coeffs_;
  QPoly s0;
  QPoly s1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [quo, rem] = divmod(r0, r1);
    QPoly s2 = sub_q(s0, mul_q(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  const mpq_class c = r0.at(0);
  for (auto& x : s0) x /= c;
  return CyclotomicNumber(n_, std::move(s0));
}

}  // namespace qkac::qarith
