#pragma once

#include <utility>
#include <vector>

#include "qlin/linearize/rep_spec.hpp"

namespace qlin::linearize {

enum class Verdict { trivial, nontrivial_by_degree, nontrivial_by_nonscalar, indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial: return "trivial";
    case Verdict::nontrivial_by_degree: return "nontrivial-by-degree";
    case Verdict::nontrivial_by_nonscalar: return "nontrivial-by-nonscalar";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

// Conjugacy-class shape of a reduced word after cyclic normalization.
//   base:     conjugate into the base group; rep carries the element.
//   axis:     t^p w^j with p != 0; commutes with the edge subgroup.
//   standard: t^{p_1} g_1 ... t^{p_k} g_k with every g_j outside <w>
//             and p_1 > 0.
struct CanonicalForm {
  enum class Kind { base, axis, standard };
  Kind kind = Kind::base;
  words::GammaElement base_rep;
  long axis_p = 0;
  long axis_wpow = 0;
  std::vector<words::Syllable> syllables;

  words::HnnWord as_word(const words::GammaElement& w) const {
    switch (kind) {
      case Kind::base:
        return words::HnnWord{base_rep, {}};
      case Kind::axis:
        return words::HnnWord{{}, {words::Syllable{axis_p, w.pow(axis_wpow)}}};
      case Kind::standard:
        return words::HnnWord{{}, syllables};
    }
    return {};
  }
};

// Cyclic canonicalization of a Britton-reduced word. Rotation is conjugation,
// so every step preserves nontriviality; <w>-powers migrate across stable
// runs using the defining relation. When no rotation makes the leading
// exponent positive (all exponents negative), the inverse word is canonical
// in its place.
inline CanonicalForm canonical_form(const words::HnnWord& reduced, const words::CyclicGroup& cyc) {
  CanonicalForm out;
  if (reduced.in_base_group()) {
    out.kind = CanonicalForm::Kind::base;
    out.base_rep = reduced.prefix;
    return out;
  }

  std::vector<words::Syllable> cs = reduced.syllables;
  cs.back().g = cs.back().g * reduced.prefix;  // rotate the prefix to the back

  while (true) {
    const size_t k = cs.size();
    size_t member_at = k;
    long wpow = 0;
    for (size_t j = 0; j < k; ++j) {
      if (const auto kk = cyc.member(cs[j].g)) {
        member_at = j;
        wpow = *kk;
        break;
      }
    }
    if (member_at == k) break;

    if (k == 1) {
      out.kind = CanonicalForm::Kind::axis;
      out.axis_p = cs[0].p;
      out.axis_wpow = wpow;
      return out;
    }

    const size_t j = member_at;
    const size_t jn = (j + 1) % k;
    const size_t left = (j + k - 1) % k;
    const long pnew = cs[j].p + cs[jn].p;
    const words::GammaElement wk = cyc.w.pow(wpow);

    if (k == 2) {
      if (pnew == 0) {
        out.kind = CanonicalForm::Kind::base;
        out.base_rep = cs[jn].g * wk;
        return out;
      }
      cs[jn].g = cs[jn].g * wk;
      cs[jn].p = pnew;
      cs.erase(cs.begin() + j);
      continue;
    }

    cs[left].g = cs[left].g * wk;
    if (pnew == 0) {
      cs[left].g = cs[left].g * cs[jn].g;
      if (jn > j) {
        cs.erase(cs.begin() + jn);
        cs.erase(cs.begin() + j);
      } else {
        cs.erase(cs.begin() + j);
        cs.erase(cs.begin() + jn);
      }
    } else {
      cs[jn].p = pnew;
      cs.erase(cs.begin() + j);
    }
  }

  size_t positive = cs.size();
  for (size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].p > 0) {
      positive = j;
      break;
    }
  }
  if (positive < cs.size()) {
    std::rotate(cs.begin(), cs.begin() + positive, cs.end());
  } else {
    // Every exponent is negative: the inverse word is the canonical witness.
    std::vector<words::Syllable> inv;
    const size_t k = cs.size();
    inv.reserve(k);
    for (size_t i = 0; i < k; ++i) {
      const size_t src = k - 1 - i;
      const size_t gsrc = (src + k - 1) % k;
      inv.push_back(words::Syllable{-cs[src].p, cs[gsrc].g.inverse()});
    }
    cs = std::move(inv);
  }

  out.kind = CanonicalForm::Kind::standard;
  out.syllables = std::move(cs);
  return out;
}

// d_k = (chi_1 - chi_d) * sum |p_i| over a word in canonical standard shape.
inline exact::Rational degree_ledger(const words::HnnWord& canonical, const WeightData& weights) {
  if (!canonical.prefix.empty_word())
    throw ValidationError("degree ledger: word must start with a stable-letter run");
  if (canonical.syllables.empty())
    throw ValidationError("degree ledger: word has no stable letters");
  if (canonical.syllables.front().p <= 0)
    throw ValidationError("degree ledger: leading exponent must be positive");
  long total = 0;
  for (const auto& s : canonical.syllables) {
    if (s.p == 0) throw ValidationError("degree ledger: zero exponent");
    total += std::abs(s.p);
  }
  return weights.spread() * exact::Rational(total);
}

struct Certificate {
  words::HnnWord word;
  words::HnnWord reduced;
  CanonicalForm canonical;
  std::optional<exact::Rational> ledger_degree;
  std::optional<exact::Rational> observed_deg_11;
  std::optional<exact::Rational> observed_deg_1d;
  bool corner_ok = false;
  Verdict verdict = Verdict::indeterminate;
};

// The symbolic linearization of the HNN extension of the given group over
// <w>: the stable letter goes to diag(q^{chi_1}, ..., q^{chi_d}) and group
// elements to their h-basis images. Handles are immutable; evaluation and
// certification are pure.
class PiQ {
 public:
  explicit PiQ(RepSpec spec) : v_(std::move(spec)) {
    // Defining relation: the weight matrix commutes with w (validated above),
    // so t w t^{-1} w^{-1} evaluates to the identity.
  }

  int dim() const { return v_.dim(); }
  const ValidatedSpec& validated() const { return v_; }
  const WeightData& weights() const { return v_.weights(); }
  const words::CyclicGroup& cyclic() const { return v_.cyclic(); }

  exact::ScalarMatrix gamma_image(const words::GammaElement& g) const { return v_.gamma_image(g); }
  bool corner_check(const words::GammaElement& g) const { return v_.corner_check(g); }

  exact::PolyMatrix stable_image(long p) const {
    const int d = dim();
    exact::PolyMatrix t(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        t(i, j) = (i == j) ? exact::QPoly::monomial(exact::ExactScalar(1),
                                                    exact::Rational(p) * v_.weights().chi[i])
                           : exact::QPoly();
    return t;
  }

  exact::PolyMatrix evaluate(const words::HnnWord& word) const {
    exact::PolyMatrix m = exact::to_poly(gamma_image(word.prefix));
    for (const auto& s : word.syllables) {
      m = m * stable_image(s.p);
      m = m * exact::to_poly(gamma_image(s.g));
    }
    return m;
  }

  // Exponent of the monomial normalization q^s: each positive run contributes
  // p*chi_d, each negative run p*chi_1.
  exact::Rational monomial_shift(const std::vector<words::Syllable>& syllables) const {
    exact::Rational s(0);
    for (const auto& syl : syllables)
      s += exact::Rational(syl.p) * (syl.p > 0 ? v_.weights().bottom() : v_.weights().top());
    return s;
  }

  Certificate certify(const words::HnnWord& word) const {
    Certificate cert;
    cert.word = word;
    cert.reduced = words::britton_reduce(word, cyclic());
    cert.canonical = canonical_form(cert.reduced, cyclic());

    switch (cert.canonical.kind) {
      case CanonicalForm::Kind::base: {
        const exact::ScalarMatrix m = gamma_image(cert.canonical.base_rep);
        cert.verdict =
            exact::is_identity(m) ? Verdict::trivial : Verdict::nontrivial_by_nonscalar;
        return cert;
      }
      case CanonicalForm::Kind::axis: {
        const exact::PolyMatrix m = evaluate(cert.canonical.as_word(cyclic().w));
        cert.verdict = exact::is_scalar_multiple_of_identity(m) ? Verdict::indeterminate
                                                                : Verdict::nontrivial_by_nonscalar;
        return cert;
      }
      case CanonicalForm::Kind::standard:
        break;
    }

    const auto& syllables = cert.canonical.syllables;
    cert.corner_ok = true;
    for (const auto& s : syllables) cert.corner_ok = cert.corner_ok && corner_check(s.g);

    const words::HnnWord canon_word{{}, syllables};
    const exact::PolyMatrix m = evaluate(canon_word);
    const exact::Rational shift = monomial_shift(syllables);
    const int d = dim();
    if (const auto deg = m(0, 0).degree()) cert.observed_deg_11 = *deg - shift;
    if (const auto deg = m(0, d - 1).degree()) cert.observed_deg_1d = *deg - shift;
    const bool nonscalar = !exact::is_scalar_multiple_of_identity(m);

    if (cert.corner_ok) {
      cert.ledger_degree = degree_ledger(canon_word, v_.weights());
      const bool degree_match = cert.observed_deg_11 && cert.observed_deg_1d &&
                                *cert.observed_deg_11 == *cert.ledger_degree &&
                                *cert.observed_deg_1d == *cert.ledger_degree;
      if (degree_match) {
        cert.verdict = Verdict::nontrivial_by_degree;
        return cert;
      }
    }
    cert.verdict = nonscalar ? Verdict::nontrivial_by_nonscalar : Verdict::indeterminate;
    return cert;
  }

 private:
  ValidatedSpec v_;
};

}  // namespace qlin::linearize
