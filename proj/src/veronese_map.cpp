#include "veronese/veronese_map.hpp"

#include <map>

#include "veronese/parse.hpp"

namespace veronese {

namespace {

Matrix<Polynomial> from_table(std::size_t rows, std::size_t cols, std::initializer_list<const char*> cells,
                              Field field) {
  Matrix<Polynomial> m(rows, cols, Polynomial(Ring::Ambient, field));
  auto it = cells.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_poly(*it++, Ring::Ambient, field);
  return m;
}

}  // namespace

Polynomial theta(const Polynomial& g) {
  if (g.ring() != Ring::Ambient) throw RingMismatch("theta expects a polynomial in the ambient ring");
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) {
    const auto& a = t.monomial.exps;  // x00 x01 x02 x11 x12 x22
    Monomial m;
    m.exps[0] = static_cast<std::uint16_t>(2 * a[0] + a[1] + a[2]);
    m.exps[1] = static_cast<std::uint16_t>(a[1] + 2 * a[3] + a[4]);
    m.exps[2] = static_cast<std::uint16_t>(a[2] + a[4] + 2 * a[5]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(Ring::Curve, g.field(), std::move(terms));
}

const Polynomial& MinorSet::operator[](std::string_view label) const {
  for (std::size_t i = 0; i < kMinorLabels.size(); ++i)
    if (kMinorLabels[i] == label) return deltas[i];
  throw std::out_of_range("unknown minor label");
}

MinorSet minors(Field field) {
  auto p = [&](const char* text) { return parse_poly(text, Ring::Ambient, field); };
  return {{p("x11*x22 - x12^2"), p("x01*x22 - x12*x02"), p("x01*x12 - x02*x11"), p("x00*x22 - x02^2"),
           p("x00*x12 - x02*x01"), p("x00*x11 - x01^2")}};
}

Matrix<Polynomial> veronese_m1(Field field) {
  Matrix<Polynomial> m(1, 6, Polynomial(Ring::Ambient, field));
  auto deltas = minors(field);
  for (std::size_t i = 0; i < 6; ++i) m(0, i) = deltas[i];
  return m;
}

// Columns are the linear syzygies W_1..W_8 of the minors.
Matrix<Polynomial> veronese_m2(Field field) {
  return from_table(6, 8,
                    {"x02",  "0",    "x01",  "0",    "0",    "x00",  "0",    "0",
                     "-x12", "x02",  "-x11", "x01",  "0",    "0",    "x00",  "0",
                     "x22",  "0",    "x12",  "x02",  "x01",  "x02",  "0",    "x00",
                     "0",    "-x12", "0",    "-x11", "0",    "-x11", "-x01", "0",
                     "0",    "x22",  "0",    "0",    "-x11", "x12",  "x02",  "-x01",
                     "0",    "0",    "0",    "x22",  "x12",  "0",    "0",    "x02"},
                    field);
}

Matrix<Polynomial> veronese_m3(Field field) {
  return from_table(8, 3,
                    {"x01",  "x00",  "0",
                     "-x11", "-x01", "0",
                     "-x02", "0",    "x00",
                     "x12",  "x02",  "0",
                     "-x22", "0",    "x02",
                     "0",    "-x02", "-x01",
                     "0",    "x12",  "x11",
                     "0",    "-x22", "-x12"},
                    field);
}

ResolutionComplex veronese_complex(Field field) {
  ResolutionComplex c;
  c.field = field;
  c.modules = {{{0}}, {std::vector<int>(6, 2)}, {std::vector<int>(8, 3)}, {std::vector<int>(3, 4)}};
  c.veronese_ranks = {1, 6, 8, 3};
  std::array<Matrix<Polynomial>, 3> ds{veronese_m1(field), veronese_m2(field), veronese_m3(field)};
  for (std::size_t i = 0; i < 3; ++i) {
    c.differentials.push_back({c.modules[i + 1], c.modules[i], ds[i]});
    c.differentials.back().validate();
  }
  return c;
}

}  // namespace veronese
