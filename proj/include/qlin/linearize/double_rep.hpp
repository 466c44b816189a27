#pragma once

#include <memory>
#include <utility>

#include "qlin/linearize/pi_q.hpp"

namespace qlin::linearize {

struct DoubleCertificate {
  words::AmalgamWord word;
  words::AmalgamWord normal_form;
  words::AmalgamWord canonical;
  std::optional<exact::Rational> expected_degree;  // junctions * (chi_1 - chi_d)
  std::optional<exact::Rational> observed_deg_11;  // degree - valuation of the (1,1) entry
  std::optional<exact::Rational> observed_deg_1d;
  Verdict verdict = Verdict::indeterminate;
};

// Linearization of the amalgam of two groups over a shared cyclic subgroup:
// first-factor letters map to their h-basis images, second-factor letters are
// conjugated by the diagonal weight matrix h_q = diag(q^{chi_1},...,q^{chi_d}),
// which twists entry (i,j) by q^{chi_i - chi_j}. Requires the two w-images to
// agree exactly in the common basis.
class DoubleRep {
 public:
  DoubleRep(PiQ first, PiQ second)
      : first_(std::move(first)), second_(std::move(second)) {
    if (first_.dim() != second_.dim())
      throw MathError("double: factor dimensions differ");
    if (!exact::equal(first_.validated().w_in_basis(), second_.validated().w_in_basis()))
      throw MathError("double: amalgam mismatch, the two w-images differ");
    if (!(first_.weights() == second_.weights()))
      throw MathError("double: factors must share the weight data");
    ctx_ = words::AmalgamContext{first_.cyclic(), second_.cyclic()};

    // The amalgam relation (1,w)(2,w^{-1}) must evaluate to the identity.
    const words::AmalgamWord relation{{words::AmalgamLetter{1, ctx_.factor1.w},
                                       words::AmalgamLetter{2, ctx_.factor2.w.inverse()}}};
    if (!exact::is_identity(evaluate(relation)))
      throw MathError("double: amalgam relation does not evaluate to the identity");
  }

  int dim() const { return first_.dim(); }
  const PiQ& first() const { return first_; }
  const PiQ& second() const { return second_; }
  const words::AmalgamContext& context() const { return ctx_; }
  const WeightData& weights() const { return first_.weights(); }

  exact::PolyMatrix letter_image(const words::AmalgamLetter& l) const {
    if (l.factor == 1) return exact::to_poly(first_.gamma_image(l.g));
    const exact::ScalarMatrix m = second_.gamma_image(l.g);
    const int d = dim();
    exact::PolyMatrix out(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out(i, j) = m(i, j).is_zero()
                        ? exact::QPoly()
                        : exact::QPoly::monomial(m(i, j),
                                                 weights().chi[i] - weights().chi[j]);
    return out;
  }

  exact::PolyMatrix evaluate(const words::AmalgamWord& word) const {
    const int d = dim();
    exact::PolyMatrix m = exact::PolyMatrix::Identity(d, d);
    for (const auto& l : word.letters) m = m * letter_image(l);
    return m;
  }

  DoubleCertificate certify(const words::AmalgamWord& word) const {
    DoubleCertificate cert;
    cert.word = word;
    cert.normal_form = words::amalgam_normal_form(word, ctx_);
    cert.canonical = words::amalgam_cyclic_canonical(cert.normal_form, ctx_);

    const size_t n = cert.canonical.letters.size();
    if (n == 0) {
      cert.verdict = Verdict::trivial;
      return cert;
    }

    const exact::PolyMatrix m = evaluate(cert.canonical);
    const bool nonscalar = !exact::is_scalar_multiple_of_identity(m);
    if (n == 1) {
      // Conjugate into one factor: decided by the exact matrix alone.
      if (exact::is_identity(m))
        cert.verdict = Verdict::trivial;
      else
        cert.verdict = nonscalar ? Verdict::nontrivial_by_nonscalar : Verdict::indeterminate;
      return cert;
    }

    // Even alternating word starting in factor 1. Each of the n-1 junctions
    // between adjacent letters contributes one full weight spread to the
    // corner entries; the span deg - val is exactly (n-1)*(chi_1 - chi_d).
    cert.expected_degree = weights().spread() * exact::Rational(static_cast<long>(n) - 1);
    const int d = dim();
    const auto span = [](const exact::QPoly& p) -> std::optional<exact::Rational> {
      if (p.is_zero()) return std::nullopt;
      return *p.degree() - *p.valuation();
    };
    cert.observed_deg_11 = span(m(0, 0));
    cert.observed_deg_1d = span(m(0, d - 1));
    const bool degree_match = cert.observed_deg_11 && cert.observed_deg_1d &&
                              *cert.observed_deg_11 == *cert.expected_degree &&
                              *cert.observed_deg_1d == *cert.expected_degree;
    if (degree_match)
      cert.verdict = Verdict::nontrivial_by_degree;
    else
      cert.verdict = nonscalar ? Verdict::nontrivial_by_nonscalar : Verdict::indeterminate;
    return cert;
  }

 private:
  PiQ first_, second_;
  words::AmalgamContext ctx_;
};

}  // namespace qlin::linearize
