#ifndef VERONESE_TEMPLATES_HPP
#define VERONESE_TEMPLATES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "veronese/lift_expr.hpp"

namespace veronese {

/// Curve-independent differentials d_1..d_n written over the lift symbols.
struct TemplateComplex {
  std::vector<std::string> symbols;
  std::vector<LiftMatrix> differentials;  // differentials[i - 1] is d_i
  std::vector<std::size_t> veronese_ranks;  // per module E_0..E_n

  const LiftMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
  LiftMatrix& d(std::size_t i) { return differentials.at(i - 1); }
};

/// Parses "x11*hI + x01*hII - hIII" style text: ambient monomials times at
/// most one symbol per term.
LiftExpr parse_lift_expr(std::string_view text, const std::vector<std::string>& symbols, Field field);

LiftMatrix compose(const LiftMatrix& a, const LiftMatrix& b);

/// Candidate entry tables before repair (block forms for even degree, the V,
/// Y, L, K, J', J lists for odd degree).
TemplateComplex candidate_veronese_templates(Field field = Field::rationals());
TemplateComplex candidate_even_templates(Field field = Field::rationals());
TemplateComplex candidate_odd_templates(Field field = Field::rationals());

/// The candidate tables with the corrections forced by d_{i-1} d_i = 0 applied.
TemplateComplex veronese_templates(Field field = Field::rationals());
TemplateComplex even_templates(Field field = Field::rationals());
TemplateComplex odd_templates(Field field = Field::rationals());

class RepairError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RepairedEntry {
  std::size_t differential;
  std::size_t row;
  std::size_t col;
  LiftExpr before;
  LiftExpr after;
};

/// For every column of d_2, d_3, ... (in order) whose product with the
/// already-checked d_{i-1} is nonzero, re-solves the coefficients of the
/// candidate terms in the Veronese rows so that the product vanishes. The
/// unknowns are one scalar per candidate (row, monomial, symbol) term; the
/// linear system is solved through the syzygy oracle. Throws RepairError when
/// the correction is not unique or does not exist.
std::vector<RepairedEntry> repair_templates(TemplateComplex& complex);

/// First (differential i, row, col) where d_i d_{i+1} is nonzero.
struct TemplateResidual {
  std::size_t index;
  std::size_t row;
  std::size_t col;
  LiftExpr value;
};
std::optional<TemplateResidual> template_residual(const TemplateComplex& complex);

}  // namespace veronese

#endif
