#pragma once

#include <vector>

#include "qlin/exact/matrix.hpp"

namespace qlin::words {

struct Letter {
  int gen = 0;
  long exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the generators of the base group, freely reduced as written:
// exponents nonzero, adjacent letters on distinct generators. This is a
// word, not a group element; group equality is decided by exact matrices.
class GammaElement {
 public:
  GammaElement() = default;
  explicit GammaElement(std::vector<Letter> letters) { append(letters); }

  static GammaElement generator(int gen, long exp = 1) {
    return GammaElement({Letter{gen, exp}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty_word() const { return letters_.empty(); }

  GammaElement inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      rev.push_back(Letter{it->gen, -it->exp});
    return GammaElement(std::move(rev));
  }

  friend GammaElement operator*(const GammaElement& x, const GammaElement& y) {
    GammaElement r = x;
    r.append(y.letters_);
    return r;
  }

  GammaElement pow(long k) const {
    GammaElement base = k < 0 ? inverse() : *this;
    GammaElement r;
    for (long i = 0, n = k < 0 ? -k : k; i < n; ++i) r = r * base;
    return r;
  }

  friend bool operator==(const GammaElement&, const GammaElement&) = default;

 private:
  void append(const std::vector<Letter>& more) {
    for (const Letter& l : more) {
      if (l.exp == 0) continue;
      if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }
  }

  std::vector<Letter> letters_;
};

struct Syllable {
  long p = 0;            // stable-letter exponent, nonzero
  GammaElement g;        // base-group element following the t-run
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// prefix * t^{p_1} g_1 * ... * t^{p_s} g_s
struct HnnWord {
  GammaElement prefix;
  std::vector<Syllable> syllables;

  bool in_base_group() const { return syllables.empty(); }
  friend bool operator==(const HnnWord&, const HnnWord&) = default;
};

struct AmalgamLetter {
  int factor = 1;        // 1 or 2
  GammaElement g;
  friend bool operator==(const AmalgamLetter&, const AmalgamLetter&) = default;
};

struct AmalgamWord {
  std::vector<AmalgamLetter> letters;
  friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
};

// Concrete finitely generated matrix group: exact generator matrices with
// |det| = 1 and exact evaluation of words.
class MatrixGroup {
 public:
  explicit MatrixGroup(std::vector<exact::ScalarMatrix> generators)
      : gens_(std::move(generators)) {
    if (gens_.empty()) throw ValidationError("matrix group needs at least one generator");
    d_ = static_cast<int>(gens_[0].rows());
    for (const auto& g : gens_) {
      if (g.rows() != d_ || g.cols() != d_)
        throw ValidationError("generators must be square matrices of equal dimension");
      const exact::ExactScalar det = exact::determinant(g);
      if (det != exact::ExactScalar(1) && det != exact::ExactScalar(-1))
        throw ValidationError("generator determinant must be +1 or -1");
      inv_.push_back(exact::inverse(g));
    }
  }

  int dim() const { return d_; }
  size_t generator_count() const { return gens_.size(); }
  const exact::ScalarMatrix& generator(int i) const { return gens_.at(i); }

  exact::ScalarMatrix evaluate(const GammaElement& g) const {
    exact::ScalarMatrix m = exact::ScalarMatrix::Identity(d_, d_);
    for (const Letter& l : g.letters()) {
      if (l.gen < 0 || l.gen >= static_cast<int>(gens_.size()))
        throw ValidationError("generator index out of range: " + std::to_string(l.gen));
      const exact::ScalarMatrix& base = l.exp < 0 ? inv_[l.gen] : gens_[l.gen];
      for (long i = 0, n = l.exp < 0 ? -l.exp : l.exp; i < n; ++i) m = m * base;
    }
    return m;
  }

 private:
  std::vector<exact::ScalarMatrix> gens_, inv_;
  int d_ = 0;
};

}  // namespace qlin::words
