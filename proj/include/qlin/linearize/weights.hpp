#pragma once

#include <vector>

#include "qlin/exact/rational.hpp"

namespace qlin::linearize {

// Weight values chi_1 > ... > chi_d of the diagonal one-parameter subgroup
// that the stable letter maps to. chi_1 is strictly maximal and chi_d
// strictly minimal, and both gaps chi_1 - chi_i and chi_j - chi_d are
// positive integers; the values themselves may be arbitrary rationals.
struct WeightData {
  std::vector<exact::Rational> chi;

  int dim() const { return static_cast<int>(chi.size()); }

  const exact::Rational& top() const { return chi.front(); }
  const exact::Rational& bottom() const { return chi.back(); }
  exact::Rational spread() const { return top() - bottom(); }

  void validate() const {
    const int d = dim();
    if (d < 2) throw ValidationError("weights: need at least two entries");
    for (int i = 1; i < d; ++i) {
      if (!(chi[0] > chi[i])) throw ValidationError("weights: first entry must be strictly maximal");
      if (!exact::is_positive_integer(chi[0] - chi[i]))
        throw ValidationError("weights: chi_1 - chi_i must be a positive integer");
    }
    for (int j = 0; j + 1 < d; ++j) {
      if (!(chi[j] > chi[d - 1]))
        throw ValidationError("weights: last entry must be strictly minimal");
      if (!exact::is_positive_integer(chi[j] - chi[d - 1]))
        throw ValidationError("weights: chi_j - chi_d must be a positive integer");
    }
  }

  friend bool operator==(const WeightData&, const WeightData&) = default;
};

}  // namespace qlin::linearize
