#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "qlin/error.hpp"

namespace qlin::spectra {

namespace detail {

inline std::vector<std::vector<int>> subsets_lex(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::vector<std::vector<int>> multidegrees_lex(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  cur[0] = p;
  while (true) {
    out.push_back(cur);
    // next composition of p into n parts, lexicographically decreasing
    int i = n - 2;
    while (i >= 0 && cur[i] == 0) --i;
    if (i < 0) break;
    --cur[i];
    int rest = p;
    for (int j = 0; j <= i; ++j) rest -= cur[j];
    for (int j = i + 1; j < n; ++j) cur[j] = 0;
    cur[i + 1] = rest;
  }
  return out;
}

}  // namespace detail

// Action on Lambda^p with the lexicographic basis e_S = e_{s1} ^ ... ^ e_{sp}:
// the (S,T) entry is the minor det g[S,T].
inline Eigen::MatrixXcd exterior_power(const Eigen::MatrixXcd& g, int p) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n) throw ValidationError("exterior power of a non-square matrix");
  if (p < 1 || p > n) throw ValidationError("exterior power index out of range");
  const auto basis = detail::subsets_lex(n, p);
  const int dim = static_cast<int>(basis.size());
  Eigen::MatrixXcd out(dim, dim);
  Eigen::MatrixXcd minor(p, p);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) {
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) minor(i, j) = g(basis[r][i], basis[c][j]);
      out(r, c) = minor.determinant();
    }
  return out;
}

// Action on Sym^p with the monomial basis e^alpha (lex order on exponent
// vectors): the column of e^alpha expands prod_i (g e_i)^{alpha_i}.
inline Eigen::MatrixXcd symmetric_power(const Eigen::MatrixXcd& g, int p) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n) throw ValidationError("symmetric power of a non-square matrix");
  if (p < 1) throw ValidationError("symmetric power index out of range");
  const auto basis = detail::multidegrees_lex(n, p);
  const int dim = static_cast<int>(basis.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < dim; ++i) index.emplace(basis[i], i);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    std::map<std::vector<int>, std::complex<double>> poly;
    poly.emplace(std::vector<int>(n, 0), std::complex<double>(1.0, 0.0));
    for (int var = 0; var < n; ++var) {
      for (int rep = 0; rep < basis[c][var]; ++rep) {
        std::map<std::vector<int>, std::complex<double>> next;
        for (const auto& [mono, coeff] : poly) {
          for (int k = 0; k < n; ++k) {
            if (g(k, var) == std::complex<double>(0.0, 0.0)) continue;
            std::vector<int> grown = mono;
            ++grown[k];
            next[grown] += coeff * g(k, var);
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : poly) out(index.at(mono), c) = coeff;
  }
  return out;
}

// Translation by t along the standard geodesic, as a block matrix in
// SL(k+1): cosh/sinh on the first two coordinates, identity elsewhere.
// Eigenvalue moduli are e^t, 1 (k-1 times), e^{-t}.
inline Eigen::MatrixXd gt_matrix(double t, int k) {
  if (k < 1) throw ValidationError("gt_matrix needs k >= 1");
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(k + 1, k + 1);
  g(0, 0) = std::cosh(t);
  g(0, 1) = std::sinh(t);
  g(1, 0) = std::sinh(t);
  g(1, 1) = std::cosh(t);
  return g;
}

}  // namespace qlin::spectra
