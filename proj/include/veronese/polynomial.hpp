#ifndef VERONESE_POLYNOMIAL_HPP
#define VERONESE_POLYNOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veronese/field.hpp"

namespace veronese {

/// The two polynomial rings of the project: the plane k[x0,x1,x2] and the
/// coordinate ring S = k[x00,x01,x02,x11,x12,x22] of P^5. Variable order is
/// fixed; canonical printing and monomial bases depend on it.
enum class Ring { Curve, Ambient };

inline constexpr std::size_t kMaxArity = 6;

std::size_t arity(Ring ring);
std::span<const std::string_view> variable_names(Ring ring);
std::string_view ring_name(Ring ring);

class RingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector. Slots past the ring arity stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxArity> exps{};

  int degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for `*this` as the divisor of `other`.
  Monomial quotient_of(const Monomial& other) const;
  std::uint64_t key() const;

  bool operator==(const Monomial&) const = default;
};

/// Graded reverse lexicographic comparison.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return std::hash<std::uint64_t>{}(m.key()); }
};

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// Degree reported for the zero polynomial (homogeneous of every degree).
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

/// Sparse polynomial with exact coefficients. Terms are kept in descending
/// grevlex order with no zero coefficients.
class Polynomial {
public:
  Polynomial(Ring ring, Field field) : ring_(ring), field_(field) {}

  static Polynomial constant(Ring ring, Field field, const Rational& c);
  static Polynomial variable(Ring ring, Field field, std::size_t index);
  static Polynomial monomial(Ring ring, Field field, const Monomial& m, const Rational& c = 1);
  /// Combines repeated monomials, reduces into the field and drops zeros.
  static Polynomial from_terms(Ring ring, Field field, std::vector<Term> terms);

  Ring ring() const { return ring_; }
  const Field& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True for a nonzero polynomial whose only monomial is 1.
  bool is_nonzero_constant() const;

  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }

  /// n if every monomial has total degree n; kZeroPolynomialDegree for zero;
  /// nullopt when the polynomial is not homogeneous.
  std::optional<int> homogeneous_degree() const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  bool operator==(const Polynomial& other) const = default;

private:
  Ring ring_;
  Field field_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// Canonical text form: descending grevlex, exponent 1 and coefficient 1
/// suppressed (except for the constant term).
std::string render(const Polynomial& p);

/// All monomials of total degree n, in descending grevlex order.
std::vector<Monomial> graded_basis(Ring ring, int n);

/// Coefficients of p against graded_basis(p.ring(), n).
std::vector<Rational> coeff_vector(const Polynomial& p, int n);

/// Monomial basis of one graded piece with position lookup.
class GradedBasis {
public:
  GradedBasis(Ring ring, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& monomials() const { return basis_; }
  std::size_t index_of(const Monomial& m) const;

private:
  int degree_;
  std::vector<Monomial> basis_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single polynomial under grevlex; the remainder
/// is zero exactly when divisor divides dividend.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace veronese

#endif
