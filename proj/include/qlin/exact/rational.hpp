#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qlin/error.hpp"

namespace qlin::exact {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw MathError("rational with zero denominator");
  Rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_positive_integer(const Rational& r) {
  return is_integer(r) && r > 0;
}

inline double to_double(const Rational& r) { return r.get_d(); }

// n = s^2 * m with m squarefree. Trial division up to 10^6; a residual
// cofactor beyond that is folded if it is a perfect square and otherwise
// taken squarefree (inputs here are small discriminants, not RSA moduli).
inline std::pair<Integer, Integer> squarefree_decompose(Integer n) {
  if (n <= 0) throw MathError("squarefree_decompose requires n > 0");
  Integer s = 1;
  Integer m = 1;
  Integer p = 2;
  while (p * p <= n && p < 1000000) {
    if (n % p == 0) {
      int mult = 0;
      while (n % p == 0) {
        n /= p;
        ++mult;
      }
      for (int i = 0; i < mult / 2; ++i) s *= p;
      if (mult % 2 == 1) m *= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      s *= root;
    } else {
      m *= n;
    }
  }
  return {s, m};
}

inline bool is_squarefree(const Integer& n) {
  if (n <= 0) return false;
  auto [s, m] = squarefree_decompose(n);
  return s == 1;
}

}  // namespace qlin::exact
