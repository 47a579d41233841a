#include "veronese/resolution.hpp"

#include <array>

#include "veronese/errors.hpp"
#include "veronese/veronese_map.hpp"

namespace veronese {

namespace {

Matrix<Polynomial> instantiate(const LiftMatrix& m, std::span<const Polynomial> values) {
  Matrix<Polynomial> out(m.rows(), m.cols(), Polynomial(Ring::Ambient, m(0, 0).pure().field()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).instantiate(values);
  return out;
}

GradedFreeModule module(std::initializer_list<std::pair<int, int>> blocks) {
  GradedFreeModule out;
  for (auto [twist, count] : blocks) out.twists.insert(out.twists.end(), count, twist);
  return out;
}

ResolutionComplex assemble(const TemplateComplex& t, std::span<const Polynomial> values,
                           std::vector<GradedFreeModule> modules, CurveProvenance provenance) {
  ResolutionComplex c;
  c.field = provenance.f.field();
  c.modules = std::move(modules);
  c.veronese_ranks = t.veronese_ranks;
  for (std::size_t i = 1; i <= t.differentials.size(); ++i) {
    GradedMatrix d{c.modules[i], c.modules[i - 1], instantiate(t.d(i), values)};
    d.validate();
    c.differentials.push_back(std::move(d));
  }
  c.validate_shapes();
  c.curve = std::move(provenance);
  return c;
}

std::string label(std::string_view stem, std::string_view index) { return std::string(stem) + "_" + std::string(index); }

std::vector<Polynomial> slice(const GradedMatrix& d, std::size_t col, std::size_t row0, std::size_t row1) {
  std::vector<Polynomial> out;
  for (std::size_t r = row0; r < row1; ++r) out.push_back(d.entries(r, col));
  return out;
}

std::vector<LabeledVector> columns(const GradedMatrix& d, std::size_t col0, std::size_t count, std::size_t row0,
                                   std::size_t row1, std::string_view stem,
                                   std::span<const std::string_view> indices = {}) {
  std::vector<LabeledVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::string index = indices.empty() ? std::to_string(k + 1) : std::string(indices[k]);
    out.push_back({label(stem, index), slice(d, col0 + k, row0, row1)});
  }
  return out;
}

constexpr std::array<std::string_view, 8> kYLabels{"00", "01", "10", "11", "12", "20", "21", "22"};

}  // namespace

ResolutionComplex build_even(const Polynomial& f, bool assume_irreducible) {
  const int d = curve_degree(f);
  if (d % 2 != 0) throw PreconditionError("build_even needs even degree, got " + std::to_string(d));
  if (d < 2) throw PreconditionError("curve degree must be at least 2");
  const int m = d / 2;
  EvenLift lift = lift_even(f);
  std::array<Polynomial, 1> values{lift.F};
  return assemble(even_templates(f.field()), values,
                  {module({{0, 1}}), module({{2, 6}, {m, 1}}), module({{3, 8}, {m + 2, 6}}),
                   module({{4, 3}, {m + 3, 8}}), module({{m + 4, 3}})},
                  CurveProvenance{f, d, Parity::Even, lift, assume_irreducible});
}

ResolutionComplex build_odd(const Polynomial& f, bool assume_irreducible) {
  const int d = curve_degree(f);
  if (d % 2 == 0) throw PreconditionError("build_odd needs odd degree, got " + std::to_string(d));
  if (d < 3) throw PreconditionError("curve degree must be at least 2");
  const int m = (d + 1) / 2;
  OddLift lift = lift_odd(f);
  return assemble(odd_templates(f.field()), lift.h,
                  {module({{0, 1}}), module({{2, 6}, {m, 3}}), module({{3, 8}, {m + 1, 8}}),
                   module({{4, 3}, {m + 2, 6}}), module({{m + 4, 1}})},
                  CurveProvenance{f, d, Parity::Odd, lift, assume_irreducible});
}

ResolutionComplex build_resolution(const Polynomial& f, bool assume_irreducible) {
  const int d = curve_degree(f);
  if (d < 2) throw PreconditionError("curve degree must be at least 2, got " + std::to_string(d));
  return d % 2 == 0 ? build_even(f, assume_irreducible) : build_odd(f, assume_irreducible);
}

TemplateComplex templates_for(const ResolutionComplex& c) {
  if (!c.curve) return veronese_templates(c.field);
  return c.curve->parity == Parity::Even ? even_templates(c.field) : odd_templates(c.field);
}

Block parse_block(std::string_view name) {
  static const std::array<std::pair<std::string_view, Block>, 10> names{{{"U", Block::U},
                                                                          {"Wprime", Block::Wprime},
                                                                          {"H", Block::H},
                                                                          {"Gprime", Block::Gprime},
                                                                          {"V", Block::V},
                                                                          {"Y", Block::Y},
                                                                          {"K", Block::K},
                                                                          {"L", Block::L},
                                                                          {"J", Block::J},
                                                                          {"Jprime", Block::Jprime}}};
  for (auto [text, b] : names)
    if (text == name) return b;
  throw PreconditionError("unknown block name " + std::string(name));
}

std::vector<LabeledVector> block(const ResolutionComplex& c, Block name) {
  if (!c.curve) throw PreconditionError("block families exist only for curve resolutions");
  const bool even = c.curve->parity == Parity::Even;
  const bool even_block = name == Block::U || name == Block::Wprime || name == Block::H || name == Block::Gprime;
  if (even != even_block) throw PreconditionError("block family does not exist for this parity");

  switch (name) {
    case Block::U: return columns(c.d(2), 8, 6, 0, 7, "U", kMinorLabels);
    case Block::Wprime: return columns(c.d(2), 0, 8, 0, 7, "W'");
    case Block::H: return columns(c.d(3), 3, 8, 0, 14, "H");
    case Block::Gprime: return columns(c.d(3), 0, 3, 0, 14, "G'");
    case Block::V: return columns(c.d(2), 8, 8, 0, 9, "V");
    case Block::Y: return columns(c.d(2), 8, 8, 6, 9, "Y", kYLabels);
    case Block::K: return columns(c.d(3), 3, 6, 0, 16, "K");
    case Block::L: return columns(c.d(3), 3, 6, 8, 16, "L");
    case Block::J: return {{"J", slice(c.d(4), 0, 0, 9)}};
    case Block::Jprime: return {{"J'", slice(c.d(4), 0, 3, 9)}};
  }
  throw PreconditionError("unknown block");
}

}  // namespace veronese
