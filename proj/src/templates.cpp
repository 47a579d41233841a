#include "veronese/templates.hpp"

#include <algorithm>
#include <cctype>

#include "veronese/errors.hpp"
#include "veronese/parse.hpp"
#include "veronese/syzygy.hpp"
#include "veronese/veronese_map.hpp"

namespace veronese {

namespace {

const std::vector<std::string> kEvenSymbols{"F"};
const std::vector<std::string> kOddSymbols{"hI", "hII", "hIII", "hIV"};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

LiftExpr zero_expr(Field field) { return LiftExpr(Polynomial(Ring::Ambient, field)); }

void place(LiftMatrix& target, std::size_t row0, std::size_t col0, const Matrix<Polynomial>& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) target(row0 + r, col0 + c) = LiftExpr(block(r, c));
}

void place_diagonal(LiftMatrix& target, std::size_t row0, std::size_t col0, std::size_t n, const LiftExpr& value) {
  for (std::size_t i = 0; i < n; ++i) target(row0 + i, col0 + i) = value;
}

// Writes the given column texts (each a list of entries top to bottom).
void place_columns(LiftMatrix& target, std::size_t row0, std::size_t col0,
                   std::initializer_list<std::initializer_list<const char*>> columns,
                   const std::vector<std::string>& symbols, Field field) {
  std::size_t c = col0;
  for (const auto& column : columns) {
    std::size_t r = row0;
    for (const char* cell : column) target(r++, c) = parse_lift_expr(cell, symbols, field);
    ++c;
  }
}

}  // namespace

LiftExpr parse_lift_expr(std::string_view text, const std::vector<std::string>& symbols, Field field) {
  LiftExpr total = zero_expr(field);
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string term = trim(text.substr(start, end - start));
    if (term.empty()) return;
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term = trim(std::string_view(term).substr(1));
    }
    std::string rest;
    std::optional<std::size_t> symbol;
    std::size_t pos = 0;
    while (pos <= term.size()) {
      std::size_t star = term.find('*', pos);
      if (star == std::string::npos) star = term.size();
      std::string factor = trim(std::string_view(term).substr(pos, star - pos));
      auto it = std::find(symbols.begin(), symbols.end(), factor);
      if (it != symbols.end()) {
        if (symbol) throw ParseError("two lift symbols in one term", start);
        symbol = static_cast<std::size_t>(it - symbols.begin());
      } else {
        rest += rest.empty() ? factor : "*" + factor;
      }
      pos = star + 1;
    }
    Polynomial coeff = parse_poly(rest.empty() ? "1" : rest, Ring::Ambient, field);
    if (negative) coeff = -coeff;
    if (symbol)
      total = total + LiftExpr(coeff) * LiftExpr::symbol(Ring::Ambient, field, symbols.size(), *symbol);
    else
      total = total + LiftExpr(coeff);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && !trim(text.substr(start, i - start)).empty()) {
      flush(i);
      start = i;
    }
  }
  flush(text.size());
  return total;
}

LiftMatrix compose(const LiftMatrix& a, const LiftMatrix& b) {
  if (a.rows() == 0 || b.cols() == 0) throw std::invalid_argument("empty template matrix");
  return multiply(a, b, LiftExpr(Polynomial(a(0, 0).pure().ring(), a(0, 0).pure().field())));
}

TemplateComplex candidate_veronese_templates(Field field) {
  TemplateComplex t;
  t.veronese_ranks = {1, 6, 8, 3};
  for (const auto& m : {veronese_m1(field), veronese_m2(field), veronese_m3(field)}) {
    LiftMatrix lm = lift_matrix(m.rows(), m.cols(), Ring::Ambient, field);
    place(lm, 0, 0, m);
    t.differentials.push_back(std::move(lm));
  }
  return t;
}

TemplateComplex candidate_even_templates(Field field) {
  TemplateComplex t;
  t.symbols = kEvenSymbols;
  t.veronese_ranks = {1, 6, 8, 3, 0};
  const LiftExpr F = LiftExpr::symbol(Ring::Ambient, field, 1, 0);
  const auto m1 = veronese_m1(field), m2 = veronese_m2(field), m3 = veronese_m3(field);

  LiftMatrix d1 = lift_matrix(1, 7, Ring::Ambient, field);
  place(d1, 0, 0, m1);
  d1(0, 6) = F;

  // [[M2, -F I6], [0, M1]]
  LiftMatrix d2 = lift_matrix(7, 14, Ring::Ambient, field);
  place(d2, 0, 0, m2);
  place_diagonal(d2, 0, 8, 6, -F);
  place(d2, 6, 8, m1);

  // [[M3, -F I8], [0, M2]]
  LiftMatrix d3 = lift_matrix(14, 11, Ring::Ambient, field);
  place(d3, 0, 0, m3);
  place_diagonal(d3, 0, 3, 8, -F);
  place(d3, 8, 3, m2);

  // [[-F I3], [M3]]
  LiftMatrix d4 = lift_matrix(11, 3, Ring::Ambient, field);
  place_diagonal(d4, 0, 0, 3, -F);
  place(d4, 3, 0, m3);

  t.differentials = {d1, d2, d3, d4};
  return t;
}

TemplateComplex candidate_odd_templates(Field field) {
  TemplateComplex t;
  t.symbols = kOddSymbols;
  t.veronese_ranks = {1, 6, 8, 3, 0};
  const auto& s = t.symbols;
  const auto m1 = veronese_m1(field), m2 = veronese_m2(field), m3 = veronese_m3(field);

  LiftMatrix d1 = lift_matrix(1, 9, Ring::Ambient, field);
  place(d1, 0, 0, m1);
  place_columns(d1, 0, 6,
                {{"x00*x12*hI + x00*hII + x01*hIII + x02*hIV"},
                 {"x11*x02*hI + x01*hII + x11*hIII + x12*hIV"},
                 {"x22*x01*hI + x02*hII + x12*hIII + x22*hIV"}},
                s, field);

  // [[M2, V], [0, Y]]; the last three entries of V_k are Y_00, Y_01, Y_10,
  // Y_11, Y_12, Y_20, Y_21, Y_22 (Y_02 = Y_11 - Y_20 is left out).
  LiftMatrix d2 = lift_matrix(9, 16, Ring::Ambient, field);
  place(d2, 0, 0, m2);
  place_columns(d2, 0, 8,
                {{"0", "0", "-x00*hI", "0", "hIV", "hIII", "x01", "-x00", "0"},
                 {"0", "0", "hIV", "0", "-x11*hI", "-hII", "x11", "-x01", "0"},
                 {"0", "x00*hI", "0", "hIV", "hIII", "0", "x02", "0", "-x00"},
                 {"x00*hI", "hIV", "0", "0", "-hII", "-x22*hI", "x12", "0", "-x01"},
                 {"0", "-hIII", "0", "-hII", "-x22*hI", "0", "x22", "0", "-x02"},
                 {"0", "hIV", "hIII", "x11*hI", "0", "-x22*hI", "0", "x02", "-x01"},
                 {"hIV", "x11*hI", "-hII", "0", "0", "0", "0", "x12", "-x11"},
                 {"-hIII", "-hII", "x22*hI", "0", "0", "0", "0", "x22", "-x12"}},
                s, field);

  // [[M3, K], [0, L]]; the last eight entries of K_l are L_l.
  LiftMatrix d3 = lift_matrix(16, 9, Ring::Ambient, field);
  place(d3, 0, 0, m3);
  place_columns(
      d3, 0, 3,
      {{"0", "0", "0", "x00*hI", "0", "0", "-hIV", "hIII",  //
        "x02", "0", "-x01", "0", "0", "x00", "0", "0"},
       {"0", "0", "x00*hI", "0", "-hIII", "-hIV", "x11*hI", "hII",  //
        "x12", "x02", "-x11", "-x01", "0", "x01", "x00", "0"},
       {"-x00*hI", "-hIV", "0", "-hIII", "0", "hIII", "hII", "x22*hI",  //
        "x22", "0", "-x12", "x02", "-x01", "0", "0", "x00"},
       {"0", "0", "-hIV", "-x11*hI", "hII", "x11*hI", "0", "0",  //
        "0", "x12", "0", "-x11", "0", "0", "x01", "0"},
       {"-hIV", "-x11*hI", "hIII", "hII", "-x22*hI", "0", "0", "0",  //
        "0", "x22", "0", "0", "-x11", "-x12", "x02", "x01"},
       {"hIII", "hII", "0", "0", "0", "-x22*hI", "0", "0",  //
        "0", "0", "0", "x22", "-x12", "-x22", "0", "x02"}},
      s, field);

  // J = [three h-combinations ; J']
  LiftMatrix d4 = lift_matrix(9, 1, Ring::Ambient, field);
  place_columns(d4, 0, 0,
                {{"-x00*x12*hI - x00*hII - x01*hIII - x02*hIV",  //
                  "-x11*x02*hI + x01*hII + x11*hIII + x12*hIV",  //
                  "-x01*x22*hI - x02*hII - x12*hIII - x22*hIV",  //
                  "x12^2 - x11*x22", "-x02*x12 + x01*x22", "x11*x02 - x01*x12", "x02^2 - x00*x22",
                  "-x01*x02 + x00*x12", "x01^2 - x00*x11"}},
                s, field);

  t.differentials = {d1, d2, d3, d4};
  return t;
}

TemplateComplex veronese_templates(Field field) { return candidate_veronese_templates(field); }

TemplateComplex even_templates(Field field) {
  TemplateComplex t = candidate_even_templates(field);
  // H_i = [F e_i ; W_i]: the top-right block of d_3 is +F I8.
  place_diagonal(t.d(3), 0, 3, 8, LiftExpr::symbol(Ring::Ambient, field, 1, 0));
  return t;
}

TemplateComplex odd_templates(Field field) {
  TemplateComplex t = candidate_odd_templates(field);
  // K_1, entry 8
  t.d(3)(7, 3) = parse_lift_expr("-hIII", t.symbols, field);
  // J, entry 2
  t.d(4)(1, 0) = parse_lift_expr("x11*x02*hI + x01*hII + x11*hIII + x12*hIV", t.symbols, field);
  return t;
}

std::optional<TemplateResidual> template_residual(const TemplateComplex& complex) {
  for (std::size_t i = 1; i < complex.differentials.size(); ++i) {
    LiftMatrix product = compose(complex.d(i), complex.d(i + 1));
    for (std::size_t r = 0; r < product.rows(); ++r)
      for (std::size_t c = 0; c < product.cols(); ++c)
        if (!product(r, c).is_zero()) return TemplateResidual{i, r, c, product(r, c)};
  }
  return std::nullopt;
}

namespace {

struct CandidateTerm {
  std::size_t row;
  Monomial monomial;
  Rational coeff;
};

std::vector<LiftExpr> times_column(const LiftMatrix& m, const std::vector<LiftExpr>& v) {
  std::vector<LiftExpr> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    LiftExpr acc = zero_expr(m(0, 0).pure().field());
    for (std::size_t k = 0; k < m.cols(); ++k) acc = acc + m(r, k) * v[k];
    out.push_back(acc);
  }
  return out;
}

bool all_zero(const std::vector<LiftExpr>& v) {
  return std::all_of(v.begin(), v.end(), [](const LiftExpr& e) { return e.is_zero(); });
}

PolyVector part_of(const std::vector<LiftExpr>& v, std::size_t part) {
  PolyVector out;
  for (const auto& e : v)
    out.push_back(part < e.part_count() ? e.part(part) : Polynomial(Ring::Ambient, e.pure().field()));
  return out;
}

// Solves sum_t lambda_t g_t = -rhs for one symbol part; returns the new
// coefficients of the candidate terms.
std::vector<Rational> solve_part(const std::vector<PolyVector>& gens, const PolyVector& rhs,
                                 const std::vector<CandidateTerm>& candidate) {
  const bool homogeneous =
      std::all_of(rhs.begin(), rhs.end(), [](const Polynomial& p) { return p.is_zero(); });
  std::vector<PolyVector> system = gens;
  if (!homogeneous) system.push_back(rhs);
  const std::vector<int> twists(rhs.size(), 0);
  const int degree = module_degree(system.front(), twists);
  for (const auto& g : system)
    if (module_degree(g, twists) != degree) throw RepairError("candidate terms have inconsistent degrees");
  auto basis = module_syzygy_oracle(system, twists, degree);

  auto scalar = [](const Polynomial& p) -> Rational { return p.is_zero() ? Rational(0) : p.leading_term().coeff; };
  const Field field = rhs.front().field();
  std::vector<Rational> lambda(gens.size(), 0);
  if (!homogeneous) {
    if (basis.size() != 1 || scalar(basis[0].back()) == 0)
      throw RepairError("no unique correction supported on the candidate terms");
    Rational last = scalar(basis[0].back());
    for (std::size_t t = 0; t < gens.size(); ++t) lambda[t] = field.mul(scalar(basis[0][t]), field.inv(last));
    return lambda;
  }
  if (basis.empty()) return lambda;
  if (basis.size() > 1) throw RepairError("correction on the candidate terms is not unique");
  // scale so the first term the solution uses keeps its candidate coefficient
  for (std::size_t t = 0; t < gens.size(); ++t) {
    Rational v = scalar(basis[0][t]);
    if (v != 0) {
      Rational scale = field.mul(candidate[t].coeff, field.inv(v));
      for (std::size_t u = 0; u < gens.size(); ++u) lambda[u] = field.mul(scalar(basis[0][u]), scale);
      return lambda;
    }
  }
  return lambda;
}

}  // namespace

std::vector<RepairedEntry> repair_templates(TemplateComplex& complex) {
  std::vector<RepairedEntry> log;
  const std::size_t parts = complex.symbols.size() + 1;
  for (std::size_t i = 2; i <= complex.differentials.size(); ++i) {
    const LiftMatrix& prev = complex.d(i - 1);
    LiftMatrix& current = complex.d(i);
    const std::size_t top = complex.veronese_ranks.at(i - 1);
    const Field field = prev(0, 0).pure().field();
    for (std::size_t c = 0; c < current.cols(); ++c) {
      std::vector<LiftExpr> column = current.column(c);
      if (all_zero(times_column(prev, column))) continue;

      std::vector<LiftExpr> fixed = column;
      for (std::size_t r = 0; r < top; ++r) fixed[r] = zero_expr(field);
      const std::vector<LiftExpr> fixed_residual = times_column(prev, fixed);

      std::vector<LiftExpr> repaired = fixed;
      for (std::size_t part = 0; part < parts; ++part) {
        std::vector<CandidateTerm> candidate;
        for (std::size_t r = 0; r < top; ++r) {
          if (part >= column[r].part_count()) continue;
          for (const auto& t : column[r].part(part).terms()) candidate.push_back({r, t.monomial, t.coeff});
        }
        PolyVector rhs = part_of(fixed_residual, part);
        // residual of this part with the candidate coefficients
        std::vector<LiftExpr> candidate_only(column.size(), zero_expr(field));
        for (std::size_t r = 0; r < top; ++r) candidate_only[r] = column[r];
        PolyVector current_residual = part_of(times_column(prev, candidate_only), part);
        for (std::size_t r = 0; r < rhs.size(); ++r) current_residual[r] = current_residual[r] + rhs[r];
        const bool part_ok = std::all_of(current_residual.begin(), current_residual.end(),
                                         [](const Polynomial& p) { return p.is_zero(); });

        std::vector<Rational> lambda;
        if (part_ok) {
          for (const auto& t : candidate) lambda.push_back(t.coeff);
        } else {
          if (candidate.empty()) throw RepairError("column has no candidate terms to correct");
          std::vector<PolyVector> gens;
          for (const auto& t : candidate) {
            for (std::size_t k = 0; k < prev.rows(); ++k)
              if (!prev(k, t.row).is_pure()) throw RepairError("candidate term multiplies a symbolic column");
            PolyVector g;
            for (std::size_t k = 0; k < prev.rows(); ++k) g.push_back(prev(k, t.row).pure().times_monomial(t.monomial));
            gens.push_back(std::move(g));
          }
          lambda = solve_part(gens, rhs, candidate);
        }
        for (std::size_t t = 0; t < candidate.size(); ++t) {
          Polynomial term = Polynomial::monomial(Ring::Ambient, field, candidate[t].monomial, lambda[t]);
          LiftExpr piece = part == 0 ? LiftExpr(term)
                                     : LiftExpr(term) * LiftExpr::symbol(Ring::Ambient, field,
                                                                         complex.symbols.size(), part - 1);
          repaired[candidate[t].row] = repaired[candidate[t].row] + piece;
        }
      }
      if (!all_zero(times_column(prev, repaired))) throw RepairError("correction did not annihilate the column");
      for (std::size_t r = 0; r < top; ++r) {
        if (repaired[r] == column[r]) continue;
        log.push_back({i, r, c, column[r], repaired[r]});
        current(r, c) = repaired[r];
      }
    }
  }
  return log;
}

}  // namespace veronese
