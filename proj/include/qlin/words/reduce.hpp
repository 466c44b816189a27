#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "qlin/words/words.hpp"

namespace qlin::words {

// True when the first and last rows and columns vanish away from the
// (1,1) and (d,d) corners, i.e. the matrix has the shape diag(s1, A, sd).
inline bool corner_block_diagonal(const exact::ScalarMatrix& m) {
  const Eigen::Index d = m.rows();
  for (Eigen::Index j = 1; j < d; ++j)
    if (!m(0, j).is_zero() || !m(j, 0).is_zero()) return false;
  for (Eigen::Index j = 0; j < d - 1; ++j)
    if (!m(d - 1, j).is_zero() || !m(j, d - 1).is_zero()) return false;
  return true;
}

// Decides membership in the cyclic group generated by a biproximal matrix w,
// working in the basis given by the conjugator h. Returns k when g = w^k
// exactly (k = 0 for the identity), nullopt otherwise. The candidate power is
// read off the (1,1) entry in the h-basis and then verified by exact
// multiplication, so the float step can never produce a wrong answer.
inline std::optional<long> cyclic_membership(const exact::ScalarMatrix& g,
                                             const exact::ScalarMatrix& w,
                                             const exact::ScalarMatrix& h) {
  using exact::ExactScalar;
  const Eigen::Index d = w.rows();
  if (g.rows() != d || g.cols() != d || w.cols() != d || h.rows() != d || h.cols() != d)
    throw ValidationError("cyclic_membership: dimension mismatch");

  const exact::ScalarMatrix hinv = exact::inverse(h);  // throws when h is singular

  const exact::ScalarMatrix wd = h * w * hinv;
  if (!corner_block_diagonal(wd)) throw MathError("w is not block-diagonal in the given basis");
  const ExactScalar s1 = wd(0, 0);
  const ExactScalar sd = wd(d - 1, d - 1);
  if (!(s1.abs() > sd.abs()) || !(s1.abs() > ExactScalar(1)))
    throw MathError("w is not biproximal in the given basis");

  const exact::ScalarMatrix m = h * g * hinv;
  if (!corner_block_diagonal(m)) return std::nullopt;
  if (m(0, 0).is_zero()) return std::nullopt;

  const double target = std::log(std::abs(m(0, 0).to_double()));
  const double base = std::log(std::abs(s1.to_double()));
  const long k0 = std::lround(target / base);
  constexpr long kMaxPower = 1 << 20;
  if (std::abs(k0) > kMaxPower) return std::nullopt;

  for (long k = k0 - 2; k <= k0 + 2; ++k) {
    if (exact::equal(g, exact::matrix_power(w, k))) return k;
  }
  return std::nullopt;
}

// The edge subgroup <w> of an HNN extension or double: the generator as a
// word plus a sound-and-complete membership oracle.
struct CyclicGroup {
  GammaElement w;
  std::function<std::optional<long>(const GammaElement&)> member;
};

inline CyclicGroup make_cyclic_group(const MatrixGroup& group, GammaElement w_word,
                                     const exact::ScalarMatrix& h) {
  exact::ScalarMatrix w_matrix = group.evaluate(w_word);
  return CyclicGroup{
      std::move(w_word),
      [group, w_matrix, h](const GammaElement& g) {
        return cyclic_membership(group.evaluate(g), w_matrix, h);
      }};
}

inline void validate(const HnnWord& word) {
  for (const Syllable& s : word.syllables)
    if (s.p == 0) throw ValidationError("syllable exponent must be nonzero");
}

// Leftmost-innermost pinch elimination. A pinch is a junction
// t^{p_j} g_j t^{p_{j+1}} with opposite exponent signs and g_j = w^k; it
// collapses to w^k t^{p_j + p_{j+1}} because the stable letter commutes with
// w. The result has no subword t w^k t^{-1} or t^{-1} w^k t; it is empty of
// syllables exactly when the input represents an element of the base group,
// whose residual word is then carried in the prefix.
inline HnnWord britton_reduce(HnnWord word, const CyclicGroup& cyc) {
  validate(word);
  auto& syl = word.syllables;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < syl.size(); ++j) {
      const bool opposite = (syl[j].p > 0) != (syl[j + 1].p > 0);
      if (!opposite) continue;
      const auto k = cyc.member(syl[j].g);
      if (!k) continue;
      const GammaElement wk = cyc.w.pow(*k);
      GammaElement& left = (j == 0) ? word.prefix : syl[j - 1].g;
      left = left * wk;
      const long pnew = syl[j].p + syl[j + 1].p;
      if (pnew == 0) {
        left = left * syl[j + 1].g;
        syl.erase(syl.begin() + j, syl.begin() + j + 2);
      } else {
        syl[j + 1].p = pnew;
        syl.erase(syl.begin() + j);
      }
      changed = true;
      break;
    }
  }
  return word;
}

inline void validate(const AmalgamWord& word) {
  for (const AmalgamLetter& l : word.letters)
    if (l.factor != 1 && l.factor != 2)
      throw ValidationError("amalgam factor tag must be 1 or 2");
}

// Textual decomposition g = w^k * rest with rest carrying no leading w-power.
// For a single-letter w the power divides the leading exponent; for longer w
// only whole-prefix repetitions are stripped.
inline std::pair<long, GammaElement> strip_leading_power(const GammaElement& g,
                                                         const GammaElement& w) {
  if (w.empty_word() || g.empty_word()) return {0, g};
  if (w.letters().size() == 1) {
    const Letter lw = w.letters()[0];
    const Letter lg = g.letters()[0];
    if (lg.gen != lw.gen) return {0, g};
    const long k = lg.exp / lw.exp;  // truncating division
    if (k == 0) return {0, g};
    std::vector<Letter> rest = g.letters();
    rest[0].exp -= k * lw.exp;
    return {k, GammaElement(std::move(rest))};
  }
  auto starts_with = [](const GammaElement& x, const GammaElement& pre) {
    if (x.letters().size() < pre.letters().size()) return false;
    for (size_t i = 0; i < pre.letters().size(); ++i)
      if (!(x.letters()[i] == pre.letters()[i])) return false;
    return true;
  };
  long k = 0;
  GammaElement rest = g;
  const GammaElement winv = w.inverse();
  while (starts_with(rest, w)) {
    rest = w.inverse() * rest;
    ++k;
  }
  while (k == 0 && starts_with(rest, winv)) {
    rest = w * rest;
    --k;
  }
  return {k, rest};
}

// The two sides of an amalgam share the subgroup <w> but may present it in
// different generator alphabets; each factor carries its own oracle.
struct AmalgamContext {
  CyclicGroup factor1, factor2;
  const CyclicGroup& of(int factor) const { return factor == 1 ? factor1 : factor2; }
};

inline AmalgamContext doubled(const CyclicGroup& cyc) { return AmalgamContext{cyc, cyc}; }

// Alternating form with every letter outside <w> except possibly a single
// surviving <w>-power. <w>-letters are absorbed leftward (the leading one
// rightward); identity letters vanish. Returns the empty word exactly when
// the input is trivial in the double.
inline AmalgamWord amalgam_normal_form(AmalgamWord word, const AmalgamContext& ctx) {
  validate(word);
  auto& ls = word.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    // Merge adjacent same-factor letters.
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].factor == ls[i + 1].factor) {
        ls[i].g = ls[i].g * ls[i + 1].g;
        ls.erase(ls.begin() + i + 1);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // Absorb <w>-letters into the left neighbour; w belongs to both factors,
    // so the power is re-expressed in the neighbour's alphabet.
    for (size_t i = ls.size(); i-- > 0;) {
      const auto k = ctx.of(ls[i].factor).member(ls[i].g);
      if (!k) continue;
      if (ls.size() == 1) {
        if (*k == 0) {
          ls.clear();
          changed = true;
        }
        break;  // single surviving <w>-power stays (nontrivial when k != 0)
      }
      if (i > 0) {
        ls[i - 1].g = ls[i - 1].g * ctx.of(ls[i - 1].factor).w.pow(*k);
      } else {
        ls[1].g = ctx.of(ls[1].factor).w.pow(*k) * ls[1].g;
      }
      ls.erase(ls.begin() + i);
      changed = true;
      break;
    }
    if (changed) continue;
    // Shift leading w-powers of interior letters onto the left neighbour.
    for (size_t i = 1; i < ls.size(); ++i) {
      const auto [k, rest] = strip_leading_power(ls[i].g, ctx.of(ls[i].factor).w);
      if (k == 0) continue;
      ls[i - 1].g = ls[i - 1].g * ctx.of(ls[i - 1].factor).w.pow(k);
      ls[i].g = rest;
      changed = true;
      break;
    }
  }
  return word;
}

inline AmalgamWord amalgam_normal_form(AmalgamWord word, const CyclicGroup& cyc) {
  return amalgam_normal_form(std::move(word), doubled(cyc));
}

// Rotates (conjugates) and merges until the word is empty, a single letter,
// or cyclically alternating of even length starting with factor 1.
inline AmalgamWord amalgam_cyclic_canonical(AmalgamWord word, const AmalgamContext& ctx) {
  word = amalgam_normal_form(std::move(word), ctx);
  auto& ls = word.letters;
  while (ls.size() >= 2 && ls.front().factor == ls.back().factor) {
    ls.insert(ls.begin(), ls.back());
    ls.pop_back();
    word = amalgam_normal_form(std::move(word), ctx);
  }
  if (ls.size() >= 2 && ls.front().factor == 2) {
    ls.push_back(ls.front());
    ls.erase(ls.begin());
  }
  return word;
}

inline AmalgamWord amalgam_cyclic_canonical(AmalgamWord word, const CyclicGroup& cyc) {
  return amalgam_cyclic_canonical(std::move(word), doubled(cyc));
}

// The word (1,u)(2,u^{-1}): trivial in any double along a subgroup
// containing u, nontrivial (normal form of length 2) in the double along
// <w> whenever u lies outside <w>.
inline AmalgamWord collapse_witness(const GammaElement& u, const CyclicGroup& cyc) {
  if (cyc.member(u)) throw MathError("collapse witness must lie outside the cyclic subgroup");
  return AmalgamWord{{AmalgamLetter{1, u}, AmalgamLetter{2, u.inverse()}}};
}

}  // namespace qlin::words
