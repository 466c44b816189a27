#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qlin/spectra/translation.hpp"

namespace qlin::spectra {

struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;  // a + b i + c j + d k

  Quaternion() = default;
  Quaternion(double a_, double b_ = 0, double c_ = 0, double d_ = 0)
      : a(a_), b(b_), c(c_), d(d_) {}

  Quaternion conj() const { return {a, -b, -c, -d}; }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
};

class QuatMatrix {
 public:
  QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QuatMatrix identity(int n) {
    QuatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Quaternion(1);
    return m;
  }

  static QuatMatrix from_real(const Eigen::MatrixXd& r) {
    QuatMatrix m(static_cast<int>(r.rows()), static_cast<int>(r.cols()));
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < r.cols(); ++j) m(i, j) = Quaternion(r(i, j));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Quaternion& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Quaternion& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  QuatMatrix conj_transpose() const {
    QuatMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
  }

  friend QuatMatrix operator*(const QuatMatrix& x, const QuatMatrix& y) {
    if (x.cols_ != y.rows_) throw ValidationError("quaternion matrix dimension mismatch");
    QuatMatrix out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < y.cols_; ++j) {
        Quaternion acc;
        for (int k = 0; k < x.cols_; ++k) acc = acc + x(i, k) * y(k, j);
        out(i, j) = acc;
      }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<Quaternion> data_;
};

// Standard embedding: q = z1 + z2 j with z1 = a + bi, z2 = c + di maps to
// the 2x2 complex block [[z1, z2], [-conj z2, conj z1]]; an n x n
// quaternionic matrix becomes a 2n x 2n complex matrix, block by block.
// This is an algebra *-homomorphism.
inline Eigen::MatrixXcd quat_complex_embed(const QuatMatrix& m) {
  Eigen::MatrixXcd out(2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Quaternion& q = m(i, j);
      const std::complex<double> z1(q.a, q.b), z2(q.c, q.d);
      out(2 * i, 2 * j) = z1;
      out(2 * i, 2 * j + 1) = z2;
      out(2 * i + 1, 2 * j) = -std::conj(z2);
      out(2 * i + 1, 2 * j + 1) = std::conj(z1);
    }
  return out;
}

// Frobenius residual of g* J g = J with J = diag(1, ..., 1, -1), computed
// through the complex embedding.
inline double j_form_residual(const QuatMatrix& g) {
  if (g.rows() != g.cols()) throw ValidationError("J-form residual of a non-square matrix");
  const int n = g.rows();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Identity(2 * n, 2 * n);
  j(2 * n - 1, 2 * n - 1) = -1;
  j(2 * n - 2, 2 * n - 2) = -1;
  const Eigen::MatrixXcd e = quat_complex_embed(g);
  return (e.adjoint() * j * e - j).norm();
}

inline TranslationLength translation_length_quat(const QuatMatrix& g, double tol = 1e-9) {
  const double residual = j_form_residual(g);
  if (residual > tol * std::max(1.0, static_cast<double>(g.rows())))
    throw MathError("matrix does not preserve the quaternionic hyperbolic form");
  return translation_length_via_rep(quat_complex_embed(g), tol);
}

// Translation by t along the standard geodesic of quaternionic hyperbolic
// space: cosh/sinh block on the last two coordinates (the signature (+,-)
// pair of the form), identity elsewhere. Exactly form-preserving.
inline QuatMatrix sp_translation(double t, int m) {
  if (m < 1) throw ValidationError("sp_translation needs m >= 1");
  QuatMatrix g = QuatMatrix::identity(m + 1);
  g(m - 1, m - 1) = Quaternion(std::cosh(t));
  g(m - 1, m) = Quaternion(std::sinh(t));
  g(m, m - 1) = Quaternion(std::sinh(t));
  g(m, m) = Quaternion(std::cosh(t));
  return g;
}

enum class Obstruction { obstructed, inconclusive };

struct ObstructionReport {
  Obstruction verdict = Obstruction::inconclusive;
  double length1 = 0.0, length2 = 0.0;
};

// Two isometries with different translation lengths cannot be identified by
// any faithful linear representation of the amalgam; the verdict is
// OBSTRUCTED when the lengths differ by more than 3*tol.
inline ObstructionReport obstruction_witness(const QuatMatrix& g1, const QuatMatrix& g2,
                                             double tol = 1e-9) {
  ObstructionReport out;
  out.length1 = translation_length_quat(g1, tol).value;
  out.length2 = translation_length_quat(g2, tol).value;
  out.verdict = std::abs(out.length1 - out.length2) > 3.0 * tol ? Obstruction::obstructed
                                                                : Obstruction::inconclusive;
  return out;
}

}  // namespace qlin::spectra
