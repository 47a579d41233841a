#ifndef VERONESE_TESTS_SUPPORT_HPP
#define VERONESE_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include "veronese/parse.hpp"
#include "veronese/polynomial.hpp"

namespace veronese::testing {

inline Polynomial ambient(const std::string& text, Field field = Field::rationals()) {
  return parse_poly(text, Ring::Ambient, field);
}

inline Polynomial curve(const std::string& text, Field field = Field::rationals()) {
  return parse_poly(text, Ring::Curve, field);
}

/// Up to `terms` random monomials of total degree at most `max_degree`
/// (exactly `degree` when homogeneous), integer coefficients in [-5, 5].
inline Polynomial random_poly(std::mt19937_64& rng, Ring ring, Field field, int max_degree, int terms,
                              bool homogeneous = false) {
  std::vector<Term> out;
  const std::size_t vars = arity(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int degree = homogeneous ? max_degree : static_cast<int>(rng() % (max_degree + 1));
    for (int k = 0; k < degree; ++k) ++m.exps[rng() % vars];
    out.push_back({m, Rational(static_cast<long>(rng() % 11) - 5)});
  }
  return Polynomial::from_terms(ring, field, std::move(out));
}

}  // namespace veronese::testing

#endif
