#ifndef VERONESE_VERONESE_MAP_HPP
#define VERONESE_VERONESE_MAP_HPP

#include <array>
#include <string_view>

#include "veronese/complex.hpp"
#include "veronese/matrix.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

/// theta : S -> k[x0, x1, x2], x_ij -> x_i * x_j.
Polynomial theta(const Polynomial& g);

/// Index order of the minors and of the ambient variables: 00, 01, 02, 11, 12, 22.
inline constexpr std::array<std::string_view, 6> kMinorLabels{"00", "01", "02", "11", "12", "22"};

/// The six 2x2 minors of the symmetric matrix (x_ij), cutting out the
/// Veronese surface.
struct MinorSet {
  std::array<Polynomial, 6> deltas;

  const Polynomial& operator[](std::size_t i) const { return deltas[i]; }
  /// Lookup by label "00", "01", ...
  const Polynomial& operator[](std::string_view label) const;
};

MinorSet minors(Field field = Field::rationals());

/// 1 x 6 row of minors.
Matrix<Polynomial> veronese_m1(Field field = Field::rationals());
/// 6 x 8 linear first syzygies of the minors; column k is W_k.
Matrix<Polynomial> veronese_m2(Field field = Field::rationals());
/// 8 x 3 linear second syzygies; column k is G_k.
Matrix<Polynomial> veronese_m3(Field field = Field::rationals());

/// 0 <- S <- S(-2)^6 <- S(-3)^8 <- S(-4)^3 <- 0 resolving the Veronese surface.
ResolutionComplex veronese_complex(Field field = Field::rationals());

}  // namespace veronese

#endif
