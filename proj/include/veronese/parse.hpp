#ifndef VERONESE_PARSE_HPP
#define VERONESE_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "veronese/polynomial.hpp"

namespace veronese {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses the textual polynomial grammar
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' posint)?
///   coeff  := integer | integer '/' posint
///
/// Whitespace is ignored. Coefficients are reduced into `field`.
Polynomial parse_poly(std::string_view text, Ring ring, Field field);

/// Curve file contents: a single polynomial, '#' starts a line comment.
std::string strip_comments(std::string_view text);

}  // namespace veronese

#endif
