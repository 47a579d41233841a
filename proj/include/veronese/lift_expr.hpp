#ifndef VERONESE_LIFT_EXPR_HPP
#define VERONESE_LIFT_EXPR_HPP

#include <span>
#include <string>
#include <vector>

#include "veronese/matrix.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

/// Matrix entry that is linear in a fixed list of lift symbols
/// (F for even curves; h_I..h_IV for odd curves):
///
///   pure + sum_k coeff_k * symbol_k,   every coefficient an ambient polynomial.
///
/// Differentials written this way are independent of the curve, so composition
/// identities checked on them hold for every f.
class LiftExpr {
public:
  /// Symbol-free expression.
  LiftExpr(const Polynomial& pure) : parts_{pure} {}  // NOLINT(google-explicit-constructor)

  static LiftExpr symbol(Ring ring, Field field, std::size_t symbol_count, std::size_t k);

  std::size_t symbol_count() const { return parts_.size() - 1; }
  /// Part 0 is the pure polynomial, part k >= 1 the coefficient of symbol k - 1.
  const Polynomial& part(std::size_t k) const;
  const Polynomial& pure() const { return parts_.front(); }
  std::size_t part_count() const { return parts_.size(); }

  bool is_zero() const;
  bool is_pure() const;

  Polynomial instantiate(std::span<const Polynomial> values) const;
  std::string render(std::span<const std::string> symbol_names) const;

  LiftExpr operator-() const;
  friend LiftExpr operator+(const LiftExpr& a, const LiftExpr& b);
  friend LiftExpr operator-(const LiftExpr& a, const LiftExpr& b);
  /// At most one factor may carry symbols.
  friend LiftExpr operator*(const LiftExpr& a, const LiftExpr& b);

  bool operator==(const LiftExpr& other) const;

private:
  explicit LiftExpr(std::vector<Polynomial> parts) : parts_(std::move(parts)) {}
  LiftExpr widened(std::size_t symbol_count) const;

  std::vector<Polynomial> parts_;
};

using LiftMatrix = Matrix<LiftExpr>;

LiftMatrix lift_matrix(std::size_t rows, std::size_t cols, Ring ring, Field field);

}  // namespace veronese

#endif
