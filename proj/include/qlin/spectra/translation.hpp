#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <vector>

#include "qlin/error.hpp"

namespace qlin::spectra {

struct TranslationLength {
  double value = 0.0;
  bool elliptic = false;    // all eigenvalue moduli equal; value is 0
  int top_multiplicity = 0;  // size of the top eigenvalue-modulus cluster
};

// log lambda_i - log lambda_{i+1} where i is the multiplicity of the top
// eigenvalue modulus, clustered per matrix at relative tolerance tol. The
// chosen multiplicity is reported so a caller expecting a fixed index across
// a family of matrices can see any disagreement.
inline TranslationLength translation_length_via_rep(const Eigen::MatrixXcd& m,
                                                    double tol = 1e-9) {
  if (m.rows() != m.cols()) throw ValidationError("translation length of a non-square matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  const Eigen::Index r = m.rows();
  std::vector<double> logs(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const double mod = std::abs(es.eigenvalues()[i]);
    if (!(mod > 0)) throw MathError("translation length of a singular matrix");
    logs[i] = std::log(mod);
  }
  std::sort(logs.rbegin(), logs.rend());

  const double cluster = tol * std::max(1.0, std::abs(logs[0]));
  Eigen::Index i = 0;
  while (i + 1 < r && logs[0] - logs[i + 1] <= cluster) ++i;
  if (i == r - 1) return TranslationLength{0.0, true, static_cast<int>(r)};
  return TranslationLength{logs[i] - logs[i + 1], false, static_cast<int>(i) + 1};
}

}  // namespace qlin::spectra
