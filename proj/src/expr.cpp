#include "expr.hpp"

#include <cctype>

namespace cu2 {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expression run() {
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail({"+", "-", "#", "end of input"});
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string got = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
    std::string msg = "parse error at offset " + std::to_string(pos_) + ": unexpected '" +
                      got + "', expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) {
        msg += " | ";
      }
      msg += expected[i];
    }
    throw ParseError(msg, pos_, std::move(expected));
  }

  Expression parse_expr() {
    Expression e;
    e.terms.push_back(parse_term());
    while (true) {
      if (consume('+')) {
        e.terms.push_back(parse_term());
      } else if (consume('-')) {
        Expression::Term t = parse_term();
        t.coeff = -t.coeff;
        e.terms.push_back(std::move(t));
      } else {
        break;
      }
    }
    return e;
  }

  Expression::Term parse_term() {
    Expression::Term term;
    if (auto c = try_coeff()) {
      term.coeff = *c;
    }
    term.factors.push_back(parse_atom());
    while (consume('#')) {
      term.factors.push_back(parse_atom());
    }
    return term;
  }

  // A coefficient is a rational or a "(re, im)" tuple. "(" is shared with
  // parenthesized subexpressions, so tuples are committed to only after
  // the comma.
  std::optional<Scalar> try_coeff() {
    skip_ws();
    const std::size_t saved = pos_;
    if (peek() == '(') {
      ++pos_;
      auto re = try_rational();
      if (re && consume(',')) {
        auto im = try_rational();
        if (!im) {
          fail({"rational"});
        }
        if (!consume(')')) {
          fail({")"});
        }
        return Scalar(*re, *im);
      }
      pos_ = saved;
      return std::nullopt;
    }
    if (auto re = try_rational()) {
      return Scalar(*re, 0);
    }
    return std::nullopt;
  }

  std::optional<mpq_class> try_rational() {
    skip_ws();
    const std::size_t saved = pos_;
    std::string digits;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      digits.push_back('-');
      ++pos_;
    }
    std::size_t numer_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      ++pos_;
    }
    if (pos_ == numer_start) {
      pos_ = saved;
      return std::nullopt;
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      digits.push_back('/');
      ++pos_;
      std::size_t denom_start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        ++pos_;
      }
      if (pos_ == denom_start) {
        fail({"digits"});
      }
    }
    return Scalar::rational_from_string(digits);
  }

  AlgElement parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      fail({"e", "s1", "s2", "s1*", "s2*", "("});
    }
    const char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      return delta(CuElement::identity());
    }
    if (c == 's') {
      ++pos_;
      if (pos_ >= text_.size() || (text_[pos_] != '1' && text_[pos_] != '2')) {
        fail({"s1", "s2"});
      }
      const Letter l = text_[pos_] == '1' ? Letter{1} : Letter{2};
      ++pos_;
      // longest match: a following '*' makes the adjoint generator
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '*') {
          fail({"+", "-", "#", "end of input"});
        }
        return delta(CuElement::gen_star(l));
      }
      return delta(CuElement::gen(l));
    }
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      if (!consume(')')) {
        fail({")"});
      }
      return inner.lower();
    }
    fail({"e", "s1", "s2", "s1*", "s2*", "("});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgElement Expression::lower() const {
  AlgElement out;
  for (const Term& term : terms) {
    AlgElement product = delta(CuElement::identity()).scaled(term.coeff);
    for (const AlgElement& factor : term.factors) {
      product = sharp(product, factor);
    }
    out = out + product;
  }
  return out;
}

Expression parse(const std::string& text) {
  return Parser(text).run();
}

AlgElement parse_element(const std::string& text) {
  return parse(text).lower();
}

namespace {

std::string format_rational(const mpq_class& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) {
    s += "/" + q.get_den().get_str();
  }
  return s;
}

std::string format_monomial(const CuElement& t) {
  if (t.is_identity()) {
    return "e";
  }
  std::string s;
  for (Letter l : t.left()) {
    if (!s.empty()) {
      s += "#";
    }
    s += l == 1 ? "s1" : "s2";
  }
  // s_j* = s_{j_b}* ... s_{j_1}*, so the adjoint letters print reversed
  const Word rev = reversed(t.right());
  for (Letter l : rev) {
    if (!s.empty()) {
      s += "#";
    }
    s += l == 1 ? "s1*" : "s2*";
  }
  return s;
}

}  // namespace

std::string format_element(const AlgElement& f) {
  if (f.is_zero()) {
    return "0 e";
  }
  std::string out;
  bool first = true;
  for (const auto& [t, c] : f.terms()) {
    Scalar coeff = c;
    if (first) {
      first = false;
    } else if (coeff.is_real() && sgn(coeff.re) < 0) {
      out += " - ";
      coeff = -coeff;
    } else {
      out += " + ";
    }
    std::string c_str;
    if (!coeff.is_real()) {
      c_str = "(" + format_rational(coeff.re) + ", " + format_rational(coeff.im) + ") ";
    } else if (coeff.re != 1) {
      c_str = format_rational(coeff.re) + " ";
    }
    out += c_str + format_monomial(t);
  }
  return out;
}

}  // namespace cu2
