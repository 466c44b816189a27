#pragma once

#include <Eigen/Dense>
#include <set>
#include <vector>

#include "qlin/exact/matrix.hpp"
#include "qlin/unittorus/pell.hpp"

namespace qlin::unittorus {

// Matrix of multiplication by x + y*sqrt(m) on the basis {1, sqrt(m)} of the
// ring Z[sqrt(m)]: [[x, m y], [y, x]], determinant one by the Pell relation.
inline exact::IntMatrix regular_rep(const UnitSpec& u) {
  u.validate();
  exact::IntMatrix out(2, 2);
  out(0, 0) = u.x;
  out(0, 1) = exact::Integer(u.m) * u.y;
  out(1, 0) = u.y;
  out(1, 1) = u.x;
  return out;
}

// (log(x + y sqrt m), log(x - y sqrt m)); the second component is exactly the
// negative of the first because the unit has norm 1.
inline Eigen::Vector2d log_embedding(const UnitSpec& u) {
  u.validate();
  const double v = std::log(u.value().to_double());
  return Eigen::Vector2d(v, -v);
}

namespace detail {

inline void validate_permutation(const std::vector<int>& perm, size_t d) {
  if (perm.size() != d) throw ValidationError("permutation length mismatch");
  std::vector<bool> hit(d, false);
  for (int v : perm) {
    if (v < 0 || static_cast<size_t>(v) >= d || hit[v])
      throw ValidationError("not a permutation");
    hit[v] = true;
  }
}

// Closure of the generated permutation group, breadth-first.
inline std::vector<std::vector<int>> permutation_group(const std::vector<std::vector<int>>& gens,
                                                       size_t d) {
  std::vector<int> id(d);
  for (size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen = {id};
  std::vector<std::vector<int>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> pg(d);
        for (size_t i = 0; i < d; ++i) pg[i] = p[g[i]];
        if (seen.insert(pg).second) next.push_back(pg);
        if (seen.size() > 200000) throw MathError("permutation group too large");
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Rank of the span of the orbit of x under the permutation group generated
// by the given generators. Rank d-1 on a sum-zero vector certifies that the
// orbit spans the full trace-zero hyperplane.
inline int orbit_span_rank(const Eigen::VectorXd& x, const std::vector<std::vector<int>>& perms,
                           double tol = 1e-9) {
  const size_t d = static_cast<size_t>(x.size());
  if (perms.empty() && d > 1)
    throw ValidationError("orbit span: need at least one permutation generator");
  for (const auto& p : perms) detail::validate_permutation(p, d);

  const auto group = detail::permutation_group(perms, d);
  Eigen::MatrixXd orbit(group.size(), d);
  for (size_t r = 0; r < group.size(); ++r)
    for (size_t i = 0; i < d; ++i) orbit(r, group[r][i]) = x[i];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(orbit);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++rank;
  return rank;
}

// True when the rational span of the given integer character vectors is
// setwise invariant under each permutation generator. Decided exactly.
inline bool galois_invariance_check(const std::vector<std::vector<long>>& characters,
                                    const std::vector<std::vector<int>>& perms) {
  if (characters.empty()) return true;
  const size_t d = characters[0].size();
  for (const auto& c : characters)
    if (c.size() != d) throw ValidationError("character length mismatch");
  for (const auto& p : perms) detail::validate_permutation(p, d);

  using Row = std::vector<exact::Rational>;
  std::vector<Row> basis;
  auto reduce = [&](Row v) {
    for (const Row& b : basis) {
      size_t lead = 0;
      while (lead < d && b[lead] == 0) ++lead;
      if (lead < d && v[lead] != 0) {
        const exact::Rational f = v[lead] / b[lead];
        for (size_t i = 0; i < d; ++i) v[i] -= f * b[i];
      }
    }
    return v;
  };
  auto insert = [&](const Row& v) {
    Row r = reduce(v);
    for (size_t i = 0; i < d; ++i)
      if (r[i] != 0) {
        basis.push_back(std::move(r));
        // keep rows sorted by leading index so reduce() stays triangular
        std::sort(basis.begin(), basis.end(), [&](const Row& a, const Row& b) {
          size_t la = 0, lb = 0;
          while (la < a.size() && a[la] == 0) ++la;
          while (lb < b.size() && b[lb] == 0) ++lb;
          return la < lb;
        });
        return true;
      }
    return false;
  };

  for (const auto& c : characters) {
    Row r(d);
    for (size_t i = 0; i < d; ++i) r[i] = exact::Rational(c[i]);
    insert(r);
  }
  for (const auto& p : perms)
    for (const auto& c : characters) {
      Row moved(d);
      for (size_t i = 0; i < d; ++i) moved[p[i]] = exact::Rational(c[i]);
      Row rem = reduce(moved);
      for (size_t i = 0; i < d; ++i)
        if (rem[i] != 0) return false;
    }
  return true;
}

struct TorusCertificate {
  long m = 0;
  UnitSpec unit;
  exact::IntMatrix matrix{2, 2};
  Eigen::Vector2d log_vector;
  std::vector<std::vector<int>> galois_generators;
  int rank = 0;
  bool dense = false;
};

// Full pipeline for the real quadratic case: fundamental unit, its action on
// the ring of integers, the log embedding, and the Galois-orbit span test.
// The verdict certifies density in the norm-one torus; the matrix has
// distinct real eigenvalues x +- y sqrt(m), verified exactly against the
// characteristic polynomial X^2 - 2x X + 1.
inline TorusCertificate zariski_dense_cyclic(long m, double tol = 1e-9) {
  TorusCertificate cert;
  cert.m = m;
  cert.unit = pell_fundamental(m);
  cert.matrix = regular_rep(cert.unit);
  cert.log_vector = log_embedding(cert.unit);
  cert.galois_generators = {{1, 0}};  // the nontrivial Galois element swaps the embeddings
  cert.rank = orbit_span_rank(cert.log_vector, cert.galois_generators, tol);
  cert.dense = (cert.rank == 1);

  // Exact eigenvalue check: both x +- y sqrt(m) are roots of X^2 - 2xX + 1.
  const exact::ExactScalar trace(exact::Rational(2 * cert.unit.x));
  for (const exact::ExactScalar& root : {cert.unit.value(), cert.unit.value().conjugate()}) {
    const exact::ExactScalar value = root * root - trace * root + exact::ExactScalar(1);
    if (!value.is_zero()) throw MathError("unit eigenvalues fail the characteristic polynomial");
  }
  return cert;
}

}  // namespace qlin::unittorus
