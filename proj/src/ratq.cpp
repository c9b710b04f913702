#include "qkac/ratq.hpp"

#include <ostream>

#include "qkac/error.hpp"

namespace qkac {

RatQ::RatQ(LaurentInt numerator, LaurentInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error("RatQ with zero denominator");
  normalize();
}

void RatQ::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentInt(1);
    return;
  }
  if (den_.low_degree() != 0) {
    num_ = num_.shifted(-den_.low_degree());
    den_ = den_.stripped();
  }
  if (den_.is_one()) return;
  if (den_.is_constant()) {
    // Integer denominator: only the integer content can cancel.
    mpz_class g = gcd(num_.content(), den_.trailing_coefficient());
    if (sgn(den_.trailing_coefficient()) < 0) g = -g;
    if (g != 1) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
    return;
  }
  LaurentInt g = gcd(num_, den_);
  if (sgn(den_.leading_coefficient()) < 0) g = -g;
  if (!g.is_one()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw Error("inverse of zero in Q(q)");
  return RatQ(den_, num_);
}

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ& RatQ::operator+=(const RatQ& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& other) { return *this += -other; }

RatQ& RatQ::operator*=(const RatQ& other) {
  if (is_zero() || other.is_zero()) return *this = RatQ();
  num_ *= other.num_;
  const bool laurent = den_.is_one() && other.den_.is_one();
  den_ *= other.den_;
  if (laurent) return *this;
  normalize();
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& other) { return *this *= other.inverse(); }

std::string RatQ::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatQ& f) { return os << f.to_string(); }

}  // namespace qkac
