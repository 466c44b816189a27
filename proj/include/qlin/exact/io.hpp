#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qlin/exact/matrix.hpp"

namespace qlin::exact {

inline std::string to_string(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

// Canonical forms: "p", "p/q", "a+b*sqrt(m)", "a-b*sqrt(m)" with a always
// printed (possibly "0") and b printed unsigned.
inline std::string to_string(const ExactScalar& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  const bool neg = x.radical_part() < 0;
  const Rational babs = neg ? Rational(-x.radical_part()) : x.radical_part();
  return to_string(x.rational_part()) + (neg ? "-" : "+") + to_string(babs) + "*sqrt(" +
         std::to_string(x.radicand()) + ")";
}

// Terms in descending exponent order: "(c)*q^(e) + (c)*q^(e) + ...".
inline std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")*q^(" + to_string(it->first) + ")";
  }
  return out;
}

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  char next() { return s_[pos_++]; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' in " + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError(msg + " at position " + std::to_string(pos_) + " of \"" +
                          std::string(s_) + "\"");
  }

  std::string integer_token() {
    std::string tok;
    if (peek() == '-' || peek() == '+') tok += next();
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) tok += next();
    if (tok.empty() || tok == "-" || tok == "+") fail("expected integer");
    return tok;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

inline Rational rational_from(Scanner& sc) {
  const std::string num = sc.integer_token();
  std::string den = "1";
  if (sc.consume('/')) den = sc.integer_token();
  return make_rational(Integer(num), Integer(den));
}

inline ExactScalar scalar_from(Scanner& sc) {
  const Rational a = rational_from(sc);
  if (sc.peek() != '+' && sc.peek() != '-') return ExactScalar(a);
  const bool neg = sc.next() == '-';
  Rational b = rational_from(sc);
  if (neg) b = -b;
  if (!sc.consume("*sqrt(")) sc.fail("expected '*sqrt(' after radical coefficient");
  const std::string m = sc.integer_token();
  sc.expect(')', "sqrt radicand");
  return ExactScalar(a, b, std::stol(m));
}

}  // namespace detail

inline Rational parse_rational(std::string_view s) {
  detail::Scanner sc(s);
  Rational r = detail::rational_from(sc);
  if (!sc.done()) sc.fail("trailing characters after rational");
  return r;
}

inline ExactScalar parse_scalar(std::string_view s) {
  detail::Scanner sc(s);
  ExactScalar x = detail::scalar_from(sc);
  if (!sc.done()) sc.fail("trailing characters after scalar");
  return x;
}

inline QPoly parse_qpoly(std::string_view s) {
  detail::Scanner sc(s);
  if (sc.consume('0')) {
    if (!sc.done()) sc.fail("trailing characters after zero polynomial");
    return QPoly();
  }
  QPoly p;
  while (true) {
    sc.expect('(', "polynomial coefficient");
    const ExactScalar c = detail::scalar_from(sc);
    sc.expect(')', "polynomial coefficient");
    if (!sc.consume("*q^(")) sc.fail("expected '*q^(' after coefficient");
    const Rational e = detail::rational_from(sc);
    sc.expect(')', "polynomial exponent");
    p += QPoly::monomial(c, e);
    if (sc.done()) break;
    if (!sc.consume(" + ")) sc.fail("expected ' + ' between polynomial terms");
  }
  return p;
}

inline nlohmann::json to_json(const ScalarMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const PolyMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

namespace detail {

template <typename Scalar, typename Parse>
DenseMatrix<Scalar> matrix_from_json(const nlohmann::json& j, Parse parse, const char* what) {
  if (!j.is_array() || j.empty()) throw ValidationError(std::string(what) + ": expected a non-empty array of rows");
  const size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw ValidationError(std::string(what) + ": expected rows to be non-empty arrays");
  const size_t cols = j[0].size();
  DenseMatrix<Scalar> a(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError(std::string(what) + ": ragged rows in matrix");
    for (size_t jj = 0; jj < cols; ++jj) {
      const auto& cell = j[i][jj];
      if (cell.is_string()) {
        a(i, jj) = parse(cell.template get<std::string>());
      } else if (cell.is_number_integer()) {
        a(i, jj) = parse(std::to_string(cell.template get<long long>()));
      } else {
        throw ValidationError(std::string(what) + ": matrix entries must be strings or integers");
      }
    }
  }
  return a;
}

}  // namespace detail

inline ScalarMatrix parse_scalar_matrix(const nlohmann::json& j, const char* what = "matrix") {
  return detail::matrix_from_json<ExactScalar>(
      j, [](const std::string& s) { return parse_scalar(s); }, what);
}

inline PolyMatrix parse_poly_matrix(const nlohmann::json& j, const char* what = "matrix") {
  return detail::matrix_from_json<QPoly>(
      j, [](const std::string& s) { return parse_qpoly(s); }, what);
}

}  // namespace qlin::exact
