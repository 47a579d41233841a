#ifndef VERONESE_LIFT_HPP
#define VERONESE_LIFT_HPP

#include <array>

#include "veronese/errors.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

enum class Parity { Even, Odd };

Parity parity_of(int degree);

/// f split by the parity pattern of its exponents (i, j, k).
///
/// Even degree: I all even; II i even; III j even; IV k even (the other two odd).
/// Odd degree:  I all odd;  II i odd;  III j odd;  IV k odd (the other two even).
struct ParityParts {
  std::array<Polynomial, 4> parts;

  const Polynomial& operator[](std::size_t i) const { return parts[i]; }
};

ParityParts parity_split(const Polynomial& f, Parity parity);

/// Preimage F of an even-degree f = 2m under theta; homogeneous of degree m.
struct EvenLift {
  Polynomial F;
};

/// For odd d = 2m - 1: the partial lifts h_I..h_IV and F_0, F_1, F_2 with
/// theta(F_n) = x_n * f, where
///   F_0 = x00*x12*h_I + x00*h_II + x01*h_III + x02*h_IV
///   F_1 = x11*x02*h_I + x01*h_II + x11*h_III + x12*h_IV
///   F_2 = x22*x01*h_I + x02*h_II + x12*h_III + x22*h_IV
struct OddLift {
  std::array<Polynomial, 4> h;
  std::array<Polynomial, 3> F;
};

EvenLift lift_even(const Polynomial& f);
OddLift lift_odd(const Polynomial& f);

/// Homogeneous degree of a curve polynomial; throws PreconditionError for an
/// inhomogeneous or zero input, or the wrong ring.
int curve_degree(const Polynomial& f);

}  // namespace veronese

#endif
