#ifndef VERONESE_RANDOM_CURVE_HPP
#define VERONESE_RANDOM_CURVE_HPP

#include <cstdint>

#include "veronese/polynomial.hpp"

namespace veronese {

/// Dense homogeneous degree-d curve polynomial with integer coefficients in
/// [-9, 9], drawn from mt19937_64(seed). The coefficients of x0^d, x1^d and
/// x2^d are never zero. Throws PreconditionError for d < 2.
Polynomial random_curve(int d, std::uint64_t seed, Field field = Field::rationals());

}  // namespace veronese

#endif
