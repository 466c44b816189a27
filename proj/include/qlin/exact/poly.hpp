#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qlin/exact/scalar.hpp"

namespace qlin::exact {

// Laurent polynomial in the formal variable q with rational exponents and
// ExactScalar coefficients. The term map never stores zero coefficients, so
// structural equality is semantic equality. The zero polynomial has no
// degree and no valuation; callers consuming degrees branch on is_zero().
class QPoly {
 public:
  using TermMap = std::map<Rational, ExactScalar>;

  QPoly() = default;
  QPoly(long v) { insert_term(Rational(0), ExactScalar(v)); }  // NOLINT
  QPoly(ExactScalar c) { insert_term(Rational(0), std::move(c)); }  // NOLINT

  static QPoly variable() { return monomial(ExactScalar(1), Rational(1)); }

  static QPoly monomial(ExactScalar coeff, Rational exponent) {
    QPoly p;
    p.insert_term(std::move(exponent), std::move(coeff));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  std::optional<Rational> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  ExactScalar coeff(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? ExactScalar() : it->second;
  }

  ExactScalar leading_coeff() const {
    if (terms_.empty()) throw MathError("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
  }

  const TermMap& terms() const { return terms_; }

  // p * q^e
  QPoly shifted(const Rational& e) const {
    QPoly r;
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp + e, c);
    return r;
  }

  QPoly operator-() const {
    QPoly r;
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
    return r;
  }

  friend QPoly operator+(const QPoly& x, const QPoly& y) {
    QPoly r = x;
    for (const auto& [exp, c] : y.terms_) r.insert_term(exp, c);
    return r;
  }
  friend QPoly operator-(const QPoly& x, const QPoly& y) { return x + (-y); }

  friend QPoly operator*(const QPoly& x, const QPoly& y) {
    QPoly r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) r.insert_term(ex + ey, cx * cy);
    return r;
  }

  friend QPoly operator*(const QPoly& x, const ExactScalar& c) { return x * QPoly(c); }
  friend QPoly operator*(const ExactScalar& c, const QPoly& x) { return x * QPoly(c); }

  QPoly& operator+=(const QPoly& y) {
    for (const auto& [exp, c] : y.terms_) insert_term(exp, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& y) { return *this += -y; }
  QPoly& operator*=(const QPoly& y) { return *this = *this * y; }

  friend bool operator==(const QPoly& x, const QPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const QPoly& x, const QPoly& y) { return !(x == y); }

 private:
  void insert_term(const Rational& exponent, const ExactScalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_.emplace(exponent, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace qlin::exact
