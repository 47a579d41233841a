#include "veronese/parse.hpp"

#include <cctype>
#include <sstream>

namespace veronese {

namespace {

class Parser {
public:
  Parser(std::string_view text, Ring ring, Field field) : text_(text), ring_(ring), field_(field) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (skip_ws(); !at_end(); skip_ws()) {
      char c = peek();
      if (c != '+' && c != '-') {
        if (c == '/') throw ParseError("division is not allowed", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ring_, field_, std::move(terms));
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Term term(bool negative) {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    Term t{Monomial{}, negative ? -1 : 1};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= coefficient();
    } else {
      factor(t.monomial);
    }
    for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
      ++pos_;
      factor(t.monomial);
    }
    return t;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Rational coefficient() {
    mpz_class num = integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t where = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("division is not allowed", where);
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", where);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  void factor(Monomial& m) {
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || peek() != 'x') throw ParseError("expected a variable", pos_);
    ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    const auto names = variable_names(ring_);
    std::size_t index = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) index = i;
    if (index == names.size())
      throw ParseError("unknown variable " + std::string(name) + " for the " +
                           std::string(ring_name(ring_)) + " ring",
                       start);
    unsigned long exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t where = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("malformed exponent", where);
      mpz_class e = integer();
      if (e <= 0 || e > 1000) throw ParseError("malformed exponent", where);
      exponent = e.get_ui();
    }
    if (m.exps[index] + exponent > 1000) throw ParseError("exponent too large", start);
    m.exps[index] += static_cast<std::uint16_t>(exponent);
  }

  std::string_view text_;
  Ring ring_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, Ring ring, Field field) {
  return Parser(text, ring, field).parse();
}

std::string strip_comments(std::string_view text) {
  std::ostringstream out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    out << line << '\n';
    start = end + 1;
  }
  return out.str();
}

}  // namespace veronese
