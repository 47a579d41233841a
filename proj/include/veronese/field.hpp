#ifndef VERONESE_FIELD_HPP
#define VERONESE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace veronese {

using Rational = mpq_class;

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Coefficient field: exact rationals, or integers modulo a prime p < 2^31.
///
/// Elements of both fields are carried as Rational values; for a prime field
/// the canonical representative is an integer in [0, p).
class Field {
public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view descriptor);

  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string descriptor() const;

  Rational normalize(const Rational& value) const;
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  Rational inv(const Rational& a) const;

  bool operator==(const Field&) const = default;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Image of a rational number in F_p; throws FieldError when p divides the
/// denominator.
std::uint32_t residue(const Rational& value, std::uint32_t p);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace veronese

#endif
