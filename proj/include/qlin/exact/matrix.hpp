#pragma once

#include <Eigen/Core>

#include "qlin/exact/poly.hpp"
#include "qlin/exact/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<qlin::exact::ExactScalar> : GenericNumTraits<qlin::exact::ExactScalar> {
  using Real = qlin::exact::ExactScalar;
  using NonInteger = qlin::exact::ExactScalar;
  using Nested = qlin::exact::ExactScalar;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qlin::exact::QPoly> : GenericNumTraits<qlin::exact::QPoly> {
  using Real = qlin::exact::QPoly;
  using NonInteger = qlin::exact::QPoly;
  using Nested = qlin::exact::QPoly;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 200,
    MulCost = 400
  };
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qlin::exact::Integer> : GenericNumTraits<qlin::exact::Integer> {
  using Real = qlin::exact::Integer;
  using NonInteger = qlin::exact::Integer;
  using Nested = qlin::exact::Integer;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qlin::exact {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ScalarMatrix = DenseMatrix<ExactScalar>;
using PolyMatrix = DenseMatrix<QPoly>;
using IntMatrix = DenseMatrix<Integer>;

template <typename Scalar>
bool equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename Scalar>
bool is_identity(const DenseMatrix<Scalar>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == Scalar(i == j ? 1 : 0))) return false;
  return true;
}

// Laplace expansion along the first column; valid over any commutative ring.
template <typename Scalar>
Scalar determinant(const DenseMatrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw MathError("determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Scalar det(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    DenseMatrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (Eigen::Index c = 1; c < n; ++c) minor(rr, c - 1) = a(r, c);
      ++rr;
    }
    const Scalar term = a(i, 0) * determinant(minor);
    if (i % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

// Gauss-Jordan over the exact field; throws on singular input.
inline ScalarMatrix inverse(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) throw MathError("inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  ScalarMatrix work = a;
  ScalarMatrix inv = ScalarMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw MathError("singular matrix has no inverse");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const ExactScalar p = work(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const ExactScalar f = work(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

inline ScalarMatrix matrix_power(const ScalarMatrix& a, long n) {
  if (a.rows() != a.cols()) throw MathError("power of non-square matrix");
  ScalarMatrix base = n < 0 ? inverse(a) : a;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  ScalarMatrix result = ScalarMatrix::Identity(a.rows(), a.cols());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

inline bool is_scalar_multiple_of_identity(const PolyMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j) {
        if (!(a(i, j) == a(0, 0))) return false;
      } else if (!a(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

inline PolyMatrix to_poly(const ScalarMatrix& a) {
  PolyMatrix p(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) p(i, j) = QPoly(a(i, j));
  return p;
}

inline Eigen::MatrixXd to_double(const ScalarMatrix& a) {
  Eigen::MatrixXd d(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) d(i, j) = a(i, j).to_double();
  return d;
}

}  // namespace qlin::exact
