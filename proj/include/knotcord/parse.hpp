#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotcord/expr.hpp"

namespace knotcord {

namespace detail {

// Recursive-descent parser for
//   expr := unknot | pretzel(ints) | torus(2, int) | twist(int)
//         | matrix([[int,...],...]) | sum(expr, expr) | rev(expr)
//         | inv(expr) | mirror(expr)
// Whitespace is insignificant. Leaf constraints (odd pretzel parameters,
// torus/twist ranges, unimodular literals) are checked here and reported with
// the position of the offending leaf.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"}, "trailing characters");
    return e;
  }

 private:
  struct Position {
    std::size_t line, column;
  };

  Position position_of(std::size_t offset) const {
    Position p{1, 1};
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void fail_at(std::size_t offset, std::vector<std::string> expected, const std::string& detail) const {
    const Position p = position_of(offset);
    throw ParseError(p.line, p.column, std::move(expected), detail);
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    fail_at(pos_, std::move(expected), detail);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      fail({std::string("'") + c + "'"}, "unexpected " + found);
    }
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer big_integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail({"integer"}, "expected an integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }

  long small_integer() {
    skip_ws();
    const std::size_t start = pos_;
    const Integer v = big_integer();
    if (!v.fits_slong_p()) fail_at(start, {"integer"}, "integer out of range: " + v.get_str());
    return v.get_si();
  }

  template <class Build>
  KnotExpr leaf(std::size_t start, Build&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(start, {}, e.what());
    }
  }

  KnotExpr expression() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier();
    static const std::vector<std::string> kAll = {"unknot", "pretzel", "torus", "twist", "matrix",
                                                  "sum",    "rev",     "inv",   "mirror"};
    if (name == "unknot") return KnotExpr::unknot();
    if (name == "pretzel") {
      expect('(');
      std::vector<long> params{small_integer()};
      while (peek(',')) {
        ++pos_;
        params.push_back(small_integer());
      }
      expect(')');
      return leaf(start, [&] { return KnotExpr::pretzel(params); });
    }
    if (name == "torus") {
      expect('(');
      skip_ws();
      const std::size_t first = pos_;
      if (small_integer() != 2) fail_at(first, {"2"}, "only torus(2, q) knots are supported");
      expect(',');
      const long q = small_integer();
      expect(')');
      return leaf(start, [&] { return KnotExpr::torus2(q); });
    }
    if (name == "twist") {
      expect('(');
      const long m = small_integer();
      expect(')');
      return leaf(start, [&] { return KnotExpr::twist(m); });
    }
    if (name == "matrix") {
      expect('(');
      IntMatrix m = matrix_literal();
      expect(')');
      return leaf(start, [&] { return KnotExpr::literal(m); });
    }
    if (name == "sum") {
      expect('(');
      KnotExpr lhs = expression();
      expect(',');
      KnotExpr rhs = expression();
      expect(')');
      return KnotExpr::sum(std::move(lhs), std::move(rhs));
    }
    if (name == "rev" || name == "inv" || name == "mirror") {
      expect('(');
      KnotExpr arg = expression();
      expect(')');
      if (name == "rev") return KnotExpr::reverse(std::move(arg));
      if (name == "inv") return KnotExpr::inverse(std::move(arg));
      return KnotExpr::mirror(std::move(arg));
    }
    fail_at(start, kAll, name.empty() ? "expected a knot expression" : "unknown constructor '" + name + "'");
  }

  IntMatrix matrix_literal() {
    skip_ws();
    const std::size_t start = pos_;
    expect('[');
    std::vector<std::vector<Integer>> rows;
    if (!peek(']')) {
      do {
        if (!rows.empty()) ++pos_;
        expect('[');
        std::vector<Integer> row;
        if (!peek(']')) {
          row.push_back(big_integer());
          while (peek(',')) {
            ++pos_;
            row.push_back(big_integer());
          }
        }
        expect(']');
        rows.push_back(std::move(row));
      } while (peek(','));
    }
    expect(']');
    const std::size_t n = rows.size();
    for (const auto& r : rows)
      if (r.size() != n) fail_at(start, {}, "matrix literal must be square");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline KnotExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace knotcord
