#include "veronese/field.hpp"

#include <charconv>

namespace veronese {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw FieldError("not a usable prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "q" || descriptor == "Q") return rationals();
  if (descriptor.starts_with("fp:")) {
    std::string_view digits = descriptor.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw FieldError("malformed field descriptor: " + std::string(descriptor));
    if (p >= (1ull << 31)) throw FieldError("prime too large: " + std::string(digits));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw FieldError("unknown field descriptor: " + std::string(descriptor));
}

std::string Field::descriptor() const {
  return p_ == 0 ? std::string("q") : "fp:" + std::to_string(p_);
}

Rational Field::normalize(const Rational& value) const {
  if (p_ == 0) {
    Rational out = value;
    out.canonicalize();
    return out;
  }
  return Rational(residue(value, p_));
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero");
  if (p_ == 0) return 1 / a;
  return Rational(inverse_mod(residue(a, p_), p_));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r == 0) throw FieldError("zero has no inverse");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t residue(const Rational& value, std::uint32_t p) {
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den == 0)
    throw FieldError("denominator of " + value.get_str() + " vanishes mod " + std::to_string(p));
  std::uint64_t n = num.get_ui();
  std::uint64_t d = inverse_mod(static_cast<std::uint32_t>(den.get_ui()), p);
  return static_cast<std::uint32_t>(n * d % p);
}

}  // namespace veronese
