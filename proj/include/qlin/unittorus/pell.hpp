#pragma once

#include "qlin/exact/scalar.hpp"

namespace qlin::unittorus {

// Fundamental norm-1 unit of Q(sqrt(m)): minimal positive integers with
// x^2 - m y^2 = 1.
struct UnitSpec {
  long m = 0;
  exact::Integer x, y;

  // The trivial unit (1, 0) is representable; it embeds at the origin and
  // fails the density check downstream rather than here.
  void validate() const {
    if (m < 2) throw ValidationError("unit: m must be >= 2");
    if (x <= 0 || y < 0) throw ValidationError("unit: x must be positive and y nonnegative");
    if (x * x - exact::Integer(m) * y * y != 1)
      throw ValidationError("unit: x^2 - m y^2 = 1 fails");
  }

  // x + y*sqrt(m) as an exact scalar, with the radicand reduced to its
  // squarefree part.
  exact::ExactScalar value() const {
    const auto [s, mm] = exact::squarefree_decompose(exact::Integer(m));
    if (mm == 1) return exact::ExactScalar(exact::Rational(x + s * y));
    return exact::ExactScalar(exact::Rational(x), exact::Rational(s * y), mm.get_si());
  }
};

// Minimal solution of x^2 - m y^2 = 1 via the continued fraction of sqrt(m).
// The convergents are scanned in order and the first exact Pell solution is
// returned, which is the fundamental one.
inline UnitSpec pell_fundamental(long m) {
  using exact::Integer;
  if (m < 2) throw ValidationError("pell: m must be >= 2");
  const Integer mm(m);
  Integer a0;
  mpz_sqrt(a0.get_mpz_t(), mm.get_mpz_t());
  if (a0 * a0 == mm) throw MathError("pell: m is a perfect square");

  Integer p = 0, q = 1, a = a0;
  Integer h_prev = 1, h = a0;  // numerators of the convergents
  Integer k_prev = 0, k = 1;   // denominators

  for (int iter = 0; iter < 100000; ++iter) {
    if (h * h - mm * k * k == 1) return UnitSpec{m, h, k};
    p = a * q - p;
    q = (mm - p * p) / q;
    a = (a0 + p) / q;
    const Integer h_next = a * h + h_prev;
    const Integer k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  throw MathError("pell: continued fraction failed to close");  // unreachable for valid m
}

// (x + y sqrt(m))^n inside the unit group, by exact multiplication.
inline UnitSpec unit_power(const UnitSpec& u, long n) {
  if (n < 1) throw ValidationError("unit_power: exponent must be >= 1");
  exact::Integer x = 1, y = 0;
  for (long i = 0; i < n; ++i) {
    const exact::Integer nx = x * u.x + exact::Integer(u.m) * y * u.y;
    const exact::Integer ny = x * u.y + y * u.x;
    x = nx;
    y = ny;
  }
  return UnitSpec{u.m, x, y};
}

}  // namespace qlin::unittorus
