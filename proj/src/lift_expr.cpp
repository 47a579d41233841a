#include "veronese/lift_expr.hpp"

#include <algorithm>

namespace veronese {

LiftExpr LiftExpr::symbol(Ring ring, Field field, std::size_t symbol_count, std::size_t k) {
  if (k >= symbol_count) throw std::out_of_range("symbol index out of range");
  std::vector<Polynomial> parts(symbol_count + 1, Polynomial(ring, field));
  parts[k + 1] = Polynomial::constant(ring, field, 1);
  return LiftExpr(std::move(parts));
}

const Polynomial& LiftExpr::part(std::size_t k) const { return parts_.at(k); }

bool LiftExpr::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool LiftExpr::is_pure() const {
  return std::all_of(parts_.begin() + 1, parts_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

LiftExpr LiftExpr::widened(std::size_t symbol_count) const {
  if (symbol_count < this->symbol_count()) throw std::logic_error("cannot narrow a lift expression");
  std::vector<Polynomial> parts = parts_;
  parts.resize(symbol_count + 1, Polynomial(pure().ring(), pure().field()));
  return LiftExpr(std::move(parts));
}

Polynomial LiftExpr::instantiate(std::span<const Polynomial> values) const {
  if (values.size() < symbol_count()) throw std::invalid_argument("missing values for lift symbols");
  Polynomial out = pure();
  for (std::size_t k = 1; k < parts_.size(); ++k)
    if (!parts_[k].is_zero()) out += parts_[k] * values[k - 1];
  return out;
}

std::string LiftExpr::render(std::span<const std::string> symbol_names) const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k].is_zero()) continue;
    std::string piece = veronese::render(parts_[k]);
    if (k > 0) {
      if (piece == "1")
        piece = symbol_names[k - 1];
      else if (piece == "-1")
        piece = "-" + symbol_names[k - 1];
      else
        piece = "(" + piece + ")*" + symbol_names[k - 1];
    }
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out.empty() ? "0" : out;
}

LiftExpr LiftExpr::operator-() const {
  std::vector<Polynomial> parts;
  for (const auto& p : parts_) parts.push_back(-p);
  return LiftExpr(std::move(parts));
}

LiftExpr operator+(const LiftExpr& a, const LiftExpr& b) {
  std::size_t n = std::max(a.symbol_count(), b.symbol_count());
  LiftExpr wa = a.widened(n), wb = b.widened(n);
  for (std::size_t k = 0; k <= n; ++k) wa.parts_[k] += wb.parts_[k];
  return wa;
}

LiftExpr operator-(const LiftExpr& a, const LiftExpr& b) { return a + (-b); }

LiftExpr operator*(const LiftExpr& a, const LiftExpr& b) {
  if (!a.is_pure() && !b.is_pure()) throw std::logic_error("product of two symbolic lift expressions");
  const LiftExpr& scalar = a.is_pure() ? a : b;
  const LiftExpr& other = a.is_pure() ? b : a;
  std::vector<Polynomial> parts;
  for (const auto& p : other.parts_) parts.push_back(scalar.pure() * p);
  return LiftExpr(std::move(parts));
}

bool LiftExpr::operator==(const LiftExpr& other) const {
  std::size_t n = std::max(symbol_count(), other.symbol_count());
  return widened(n).parts_ == other.widened(n).parts_;
}

LiftMatrix lift_matrix(std::size_t rows, std::size_t cols, Ring ring, Field field) {
  return LiftMatrix(rows, cols, LiftExpr(Polynomial(ring, field)));
}

}  // namespace veronese
