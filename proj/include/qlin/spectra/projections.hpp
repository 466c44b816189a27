#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "qlin/error.hpp"
#include "qlin/spectra/powers.hpp"

namespace qlin::spectra {

// Sorted log singular values of an invertible matrix.
inline Eigen::VectorXd cartan_projection(const Eigen::MatrixXd& g, double tol = 1e-9) {
  if (g.rows() != g.cols()) throw ValidationError("cartan projection of a non-square matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
  const Eigen::VectorXd sv = svd.singularValues();
  if (!(sv.minCoeff() > tol * std::max(1.0, sv.maxCoeff()) * 1e-6))
    throw MathError("cartan projection of a singular matrix");
  Eigen::VectorXd mu(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) mu[i] = std::log(sv[i]);
  return mu;  // JacobiSVD sorts descending
}

namespace detail {

// log sigma_1(b^{2^squarings}), rescaling at every squaring so the powers
// stay inside double range. Only the top singular value is used; it stays
// well conditioned under powering.
inline double scaled_power_log_top(Eigen::MatrixXcd b, int squarings) {
  double logscale = 0.0;
  for (int i = 0; i < squarings; ++i) {
    b = b * b;
    const double s = b.cwiseAbs().maxCoeff();
    if (!(s > 0)) throw MathError("matrix power collapsed to zero");
    b /= s;
    logscale = 2.0 * logscale + std::log(s);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b);
  return std::log(svd.singularValues()[0]) + logscale;
}

// mu(g^n)/n for n = 2^squarings, computed through top singular values of
// exterior powers: sum_{j<=i} log sigma_j(M) = log sigma_1(Lambda^i M) and
// Lambda^i(g^n) = (Lambda^i g)^n. The small singular values of g^n underflow
// double precision long before n = 64; this route never touches them.
inline Eigen::VectorXd power_cartan_estimate(const Eigen::MatrixXd& g, int squarings) {
  const Eigen::Index d = g.rows();
  const double n = std::pow(2.0, squarings);
  const Eigen::MatrixXcd gc = g.cast<std::complex<double>>();
  Eigen::VectorXd out(d);
  double prev = 0.0;
  for (Eigen::Index i = 1; i <= d; ++i) {
    const double cur =
        scaled_power_log_top(exterior_power(gc, static_cast<int>(i)), squarings) / n;
    out[i - 1] = cur - prev;
    prev = cur;
  }
  return out;
}

}  // namespace detail

// Sorted log eigenvalue moduli. The result is cross-checked against
// mu(g^64)/64; the maximal deviation is written to *consistency when
// provided. For normal matrices the deviation is at floating-point level;
// strong non-normality shows up here instead of being hidden.
inline Eigen::VectorXd jordan_projection(const Eigen::MatrixXd& g, double tol = 1e-9,
                                         double* consistency = nullptr) {
  if (g.rows() != g.cols()) throw ValidationError("jordan projection of a non-square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> es(g, /*computeEigenvectors=*/false);
  std::vector<double> logs(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    const double mod = std::abs(es.eigenvalues()[i]);
    if (!(mod > tol * 1e-6)) throw MathError("jordan projection of a singular matrix");
    logs[i] = std::log(mod);
  }
  std::sort(logs.rbegin(), logs.rend());
  Eigen::VectorXd lambda(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i) lambda[i] = logs[i];

  if (consistency) {
    const Eigen::VectorXd approx = detail::power_cartan_estimate(g, 6);
    *consistency = (approx - lambda).cwiseAbs().maxCoeff();
  }
  return lambda;
}

// Cartan and Jordan data of one matrix with the invariants checked:
// both vectors non-increasing, sum of sigma equals log|det| within tol,
// and every lambda_i is bounded by sigma_1 + tol.
struct SpectralData {
  Eigen::VectorXd sigma;
  Eigen::VectorXd lambda;
  double tol = 1e-9;
  double jordan_consistency = 0.0;
};

inline SpectralData spectral_data(const Eigen::MatrixXd& g, double tol = 1e-9) {
  SpectralData out;
  out.tol = tol;
  out.sigma = cartan_projection(g, tol);
  out.lambda = jordan_projection(g, tol, &out.jordan_consistency);

  const double scale = std::max(1.0, out.sigma.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i + 1 < out.sigma.size(); ++i) {
    if (out.sigma[i] < out.sigma[i + 1] - tol * scale)
      throw MathError("singular values not sorted");
    if (out.lambda[i] < out.lambda[i + 1] - tol * scale)
      throw MathError("eigenvalue moduli not sorted");
  }
  const double logdet = std::log(std::abs(g.determinant()));
  if (std::abs(out.sigma.sum() - logdet) > tol * scale * g.rows())
    throw MathError("sum of log singular values does not match log|det|");
  for (Eigen::Index i = 0; i < out.lambda.size(); ++i)
    if (out.lambda[i] > out.sigma[0] + tol * scale)
      throw MathError("eigenvalue modulus exceeds top singular value");
  return out;
}

}  // namespace qlin::spectra
