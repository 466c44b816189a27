#pragma once

// Shared test fixture: the free group <a, b> in SL(2,Z) with
//   a = [[5,3],[3,2]],  b = [[2,3],[3,5]],  w = a,
// diagonalized over Q(sqrt(5)). The conjugator h is built from the exact
// eigenvectors of a, independently of the library's own diagonalization.

#include "qlin/exact/matrix.hpp"
#include "qlin/words/reduce.hpp"

namespace fixture {

using qlin::exact::ExactScalar;
using qlin::exact::Rational;
using qlin::exact::ScalarMatrix;

inline ScalarMatrix matrix_a() {
  ScalarMatrix a(2, 2);
  a << ExactScalar(5), ExactScalar(3), ExactScalar(3), ExactScalar(2);
  return a;
}

inline ScalarMatrix matrix_b() {
  ScalarMatrix b(2, 2);
  b << ExactScalar(2), ExactScalar(3), ExactScalar(3), ExactScalar(5);
  return b;
}

// Eigenvalues of a: (7 +- 3*sqrt(5))/2, eigenvectors (1, (s-5)/3).
inline ExactScalar eigen_top() {
  return ExactScalar(qlin::exact::make_rational(7, 2), qlin::exact::make_rational(3, 2), 5);
}
inline ExactScalar eigen_bottom() {
  return ExactScalar(qlin::exact::make_rational(7, 2), qlin::exact::make_rational(-3, 2), 5);
}

inline ScalarMatrix conjugator_h() {
  // Columns of P are the eigenvectors for eigen_top and eigen_bottom.
  ScalarMatrix p(2, 2);
  p(0, 0) = ExactScalar(1);
  p(0, 1) = ExactScalar(1);
  p(1, 0) = (eigen_top() - ExactScalar(5)) / ExactScalar(3);
  p(1, 1) = (eigen_bottom() - ExactScalar(5)) / ExactScalar(3);
  return qlin::exact::inverse(p);
}

inline qlin::words::MatrixGroup group() {
  return qlin::words::MatrixGroup({matrix_a(), matrix_b()});
}

inline qlin::words::GammaElement w_word() { return qlin::words::GammaElement::generator(0); }

inline qlin::words::CyclicGroup cyclic() {
  return qlin::words::make_cyclic_group(group(), w_word(), conjugator_h());
}

}  // namespace fixture
