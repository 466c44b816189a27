#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "qlin/exact/rational.hpp"

namespace qlin::exact {

// Element a + b*sqrt(m) of Q or of a real quadratic field Q(sqrt(m)).
// Stored canonically: b == 0 forces m == 0 (plain rational), and m is a
// squarefree integer >= 2 whenever b != 0. Every operation returns a fresh
// value; nothing is mutated in place.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), m_(0) {}
  ExactScalar(long v) : a_(v), b_(0), m_(0) {}  // NOLINT: implicit by design
  ExactScalar(Rational a) : a_(std::move(a)), b_(0), m_(0) {}

  ExactScalar(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    if (b_ == 0) {
      m_ = 0;
    } else {
      if (m_ < 2) throw MathError("radicand must be >= 2");
      if (!is_squarefree(Integer(m_))) throw MathError("radicand must be squarefree");
    }
  }

  static ExactScalar sqrt_of(long m) { return ExactScalar(Rational(0), Rational(1), m); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  long radicand() const { return m_; }

  bool is_rational() const { return m_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  ExactScalar conjugate() const { return unchecked(a_, -b_, m_); }

  // a^2 - m b^2; multiplicative across the field.
  Rational field_norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

  int sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(m) pull in opposite directions: compare a^2 vs m b^2.
    const int sn = sgn(field_norm());
    return sa > 0 ? sn : -sn;
  }

  ExactScalar abs() const { return sign() >= 0 ? *this : -(*this); }

  double to_double() const {
    double v = exact::to_double(a_);
    if (m_ != 0) v += exact::to_double(b_) * std::sqrt(static_cast<double>(m_));
    return v;
  }

  ExactScalar operator-() const { return unchecked(-a_, -b_, m_); }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    const long m = combined_radicand(x, y);
    return unchecked(x.a_ + y.a_, x.b_ + y.b_, m);
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    const long m = combined_radicand(x, y);
    return unchecked(x.a_ * y.a_ + Rational(m) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, m);
  }

  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    if (y.is_zero()) throw MathError("division by zero scalar");
    combined_radicand(x, y);
    if (y.is_rational()) return unchecked(x.a_ / y.a_, x.b_ / y.a_, x.m_);
    const Rational n = y.field_norm();
    return x * unchecked(y.a_ / n, -y.b_ / n, y.m_);
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  ExactScalar& operator/=(const ExactScalar& y) { return *this = *this / y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  // Order of the real embedding; exact.
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const ExactScalar& x, const ExactScalar& y) { return y < x; }
  friend bool operator<=(const ExactScalar& x, const ExactScalar& y) { return !(y < x); }
  friend bool operator>=(const ExactScalar& x, const ExactScalar& y) { return !(x < y); }

 private:
  struct Unchecked {};
  ExactScalar(Rational a, Rational b, long m, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), m_(b_ == 0 ? 0 : m) {}

  static ExactScalar unchecked(Rational a, Rational b, long m) {
    return ExactScalar(std::move(a), std::move(b), m, Unchecked{});
  }

  static int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

  static long combined_radicand(const ExactScalar& x, const ExactScalar& y) {
    if (x.m_ == 0) return y.m_;
    if (y.m_ == 0 || y.m_ == x.m_) return x.m_;
    throw MathError("incompatible radicands " + std::to_string(x.m_) + " and " +
                    std::to_string(y.m_));
  }

  Rational a_, b_;
  long m_;
};

inline ExactScalar abs(const ExactScalar& x) { return x.abs(); }

// Square root of a nonnegative rational, with the squarefree part of the
// radicand pulled out: sqrt(P/Q) = (s/Q) * sqrt(m) where P*Q = s^2 * m.
inline ExactScalar exact_sqrt(const Rational& r) {
  if (r < 0) throw MathError("square root of a negative rational");
  if (r == 0) return ExactScalar(0);
  const auto [s, m] = squarefree_decompose(r.get_num() * r.get_den());
  const Rational coeff = make_rational(s, r.get_den());
  if (m == 1) return ExactScalar(coeff);
  if (!m.fits_slong_p()) throw MathError("radicand exceeds machine range");
  return ExactScalar(Rational(0), coeff, m.get_si());
}

}  // namespace qlin::exact
