#include "qkac/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qkac/error.hpp"

namespace qkac {

namespace {

using Poly = std::vector<mpz_class>;  // index = exponent, back() nonzero

void trim_back(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class poly_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Poly& p) {
  if (p.empty()) return;
  mpz_class g = poly_content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero); result is trimmed.
Poly pseudo_remainder(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    trim_back(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.empty()) {
    make_primitive(b);
    return b;
  }
  if (b.empty()) {
    make_primitive(a);
    return a;
  }
  mpz_class c = gcd(poly_content(a), poly_content(b));
  if (a.size() == 1 || b.size() == 1) return {c};
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = {1};
      break;
    }
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    make_primitive(r);
    b = std::move(r);
  }
  make_primitive(a);
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace

LaurentInt::LaurentInt(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentInt::LaurentInt(const mpz_class& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

LaurentInt LaurentInt::monomial(const mpz_class& coefficient, std::int64_t exponent) {
  LaurentInt p(coefficient);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentInt LaurentInt::from_coefficients(std::int64_t low, std::vector<mpz_class> coefficients) {
  LaurentInt p;
  p.low_ = low;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

void LaurentInt::trim() {
  trim_back(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentInt::is_one() const noexcept {
  return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

mpz_class LaurentInt::coefficient(std::int64_t exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

mpz_class LaurentInt::content() const { return poly_content(coeffs_); }

LaurentInt LaurentInt::shifted(std::int64_t k) const {
  LaurentInt p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const std::int64_t lo = std::min(low_, other.low_);
  const std::int64_t hi = std::max(high_degree(), other.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto offset = static_cast<std::size_t>(other.low_ - low_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[offset + k] += other.coeffs_[k];
  trim();
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) { return *this += -other; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentInt r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) { return *this = *this * other; }

LaurentInt& LaurentInt::operator*=(const mpz_class& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool LaurentInt::try_divide(const LaurentInt& divisor, LaurentInt& quotient) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (is_zero()) {
    quotient = LaurentInt();
    return true;
  }
  const std::size_t nd = divisor.coeffs_.size();
  if (coeffs_.size() < nd) return false;
  Poly rem = coeffs_;
  Poly quo(coeffs_.size() - nd + 1);
  const mpz_class& lead = divisor.coeffs_.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    mpz_class& top = rem[k + nd - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_divexact(quo[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < nd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quo[k].get_mpz_t(), divisor.coeffs_[j].get_mpz_t());
    }
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) return false;
  }
  quotient = from_coefficients(low_ - divisor.low_, std::move(quo));
  return true;
}

LaurentInt LaurentInt::divide_exact(const LaurentInt& divisor) const {
  if (divisor.is_monomial()) {
    LaurentInt r = divide_exact(divisor.coeffs_[0]);
    return r.shifted(-divisor.low_);
  }
  LaurentInt quotient;
  if (!try_divide(divisor, quotient)) {
    throw Error("inexact division of " + to_string() + " by " + divisor.to_string());
  }
  return quotient;
}

LaurentInt LaurentInt::divide_exact(const mpz_class& divisor) const {
  if (sgn(divisor) == 0) throw Error("division by zero");
  LaurentInt r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
      throw Error("inexact division of " + to_string() + " by " + divisor.get_str());
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  }
  return r;
}

mpq_class LaurentInt::evaluate(const mpq_class& z) const {
  if (is_zero()) return 0;
  if (sgn(z) == 0) {
    if (low_ < 0) throw PoleAtZ("Laurent polynomial " + to_string() + " has a pole at 0");
    return low_ == 0 ? mpq_class(coeffs_[0]) : mpq_class(0);
  }
  // Horner on the polynomial part, then the power of z.
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + mpq_class(*it);
  mpq_class power = 1;
  const mpq_class base = low_ >= 0 ? z : mpq_class(1) / z;
  for (std::int64_t k = 0; k < (low_ >= 0 ? low_ : -low_); ++k) power *= base;
  mpq_class r = acc * power;
  r.canonicalize();
  return r;
}

std::string LaurentInt::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const std::int64_t e = low_ + static_cast<std::int64_t>(k);
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentInt gcd(const LaurentInt& a, const LaurentInt& b) {
  Poly g = poly_gcd(a.coefficients(), b.coefficients());
  return LaurentInt::from_coefficients(0, std::move(g));
}

std::ostream& operator<<(std::ostream& os, const LaurentInt& p) { return os << p.to_string(); }

}  // namespace qkac
