#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlin/spectra/projections.hpp"

namespace qlin::spectra {

struct GapRow {
  int length = 0;
  double min_gap = 0.0;
  std::string witness;  // a word attaining the per-length minimum
};

struct GapFit {
  double c = 0.0;  // slope of the certified affine lower bound
  double C = 0.0;  // offset: gap >= c * |word| - C over the sampled ball
  std::vector<GapRow> table;
};

namespace detail {

// Entries are normalized by the matrix's own magnitude and quantized at
// 1e-9, which absorbs float noise (including near-zero noise from inverse
// round trips) while staying overflow-safe for entries of any size; the
// magnitude itself enters the key on a coarse log scale.
inline std::vector<long long> dedupe_key(const Eigen::MatrixXd& m) {
  std::vector<long long> key;
  key.reserve(m.size() + 1);
  const double scale = m.cwiseAbs().maxCoeff();
  if (!(scale > 0)) return std::vector<long long>(m.size() + 1, 0);
  key.push_back(llround(std::log2(scale) * 1e6));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) key.push_back(llround(m(i, j) / scale * 1e9));
  return key;
}

}  // namespace detail

// Enumerates the ball of the given radius in the group generated by the
// input matrices (inverses included), computes the i-th singular value gap
// log sigma_i - log sigma_{i+1} for every element, and fits the best affine
// lower bound to the per-length minima. The slope is the trend-extrapolated
// average increment: exact on affinely growing data, and non-positive when
// the growth is detectably sublinear. c > 0 is finite-ball evidence for the
// gap growth hypothesis, never a proof; c <= 0 is a failure report.
inline GapFit anosov_gap_fit(const std::vector<Eigen::MatrixXd>& generators, int radius,
                             int root_index, double /*tol*/ = 1e-9) {
  if (generators.empty()) throw ValidationError("gap fit needs at least one generator");
  if (radius < 2) throw ValidationError("gap fit radius must be >= 2");
  const Eigen::Index d = generators[0].rows();
  if (root_index < 1 || root_index >= d)
    throw ValidationError("root index out of range");
  for (const auto& g : generators)
    if (g.rows() != d || g.cols() != d)
      throw ValidationError("gap fit generators must share one square dimension");

  struct Element {
    Eigen::MatrixXd m;
    std::string word;
  };
  std::vector<Element> alphabet;
  for (size_t i = 0; i < generators.size(); ++i) {
    const char name = static_cast<char>('a' + (i % 26));
    alphabet.push_back({generators[i], std::string(1, name)});
    alphabet.push_back({generators[i].inverse(), std::string(1, static_cast<char>(name - 32))});
  }

  auto gap_of = [&](const Eigen::MatrixXd& m) {
    const Eigen::VectorXd mu = cartan_projection(m);
    return mu[root_index - 1] - mu[root_index];
  };

  std::map<std::vector<long long>, int> seen;  // matrix -> distance from identity
  std::vector<Element> layer = {{Eigen::MatrixXd::Identity(d, d), ""}};
  seen.emplace(detail::dedupe_key(layer[0].m), 0);

  GapFit fit;
  fit.table.push_back(GapRow{0, 0.0, ""});
  std::vector<double> minima = {0.0};

  for (int len = 1; len <= radius; ++len) {
    std::vector<Element> next;
    GapRow row{len, 0.0, ""};
    bool have = false;
    for (const Element& e : layer) {
      for (const Element& a : alphabet) {
        Element grown{e.m * a.m, e.word + a.word};
        auto [it, inserted] = seen.emplace(detail::dedupe_key(grown.m), len);
        if (!inserted) continue;
        const double gap = gap_of(grown.m);
        if (!have || gap < row.min_gap) {
          row.min_gap = gap;
          row.witness = grown.word;
          have = true;
        }
        next.push_back(std::move(grown));
      }
    }
    if (!have) {
      // The group was exhausted below the requested radius (finite group);
      // reuse the previous minimum so the fit stays defined.
      row.min_gap = minima.back();
      row.witness = fit.table.back().witness;
    }
    minima.push_back(row.min_gap);
    fit.table.push_back(row);
    layer = std::move(next);
  }

  if (radius == 2) {
    fit.c = minima[2] - minima[1];
  } else {
    // Average slopes over the near and far halves of the sampled range,
    // extrapolated one further half-range along the observed trend. Exact on
    // affine data (the halves agree); detectably sublinear growth pushes the
    // certified slope to zero or below.
    const int mid = (1 + radius) / 2;
    const double first_half = (minima[mid] - minima[1]) / static_cast<double>(mid - 1);
    const double second_half = (minima[radius] - minima[mid]) / static_cast<double>(radius - mid);
    fit.c = 3.0 * second_half - 2.0 * first_half;
  }
  fit.C = 0.0;
  for (int len = 0; len <= radius; ++len)
    fit.C = std::max(fit.C, fit.c * len - minima[len]);
  return fit;
}

}  // namespace qlin::spectra
