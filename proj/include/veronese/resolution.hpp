#ifndef VERONESE_RESOLUTION_HPP
#define VERONESE_RESOLUTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "veronese/complex.hpp"
#include "veronese/templates.hpp"

namespace veronese {

/// Resolution of the image of an even-degree curve f (d = 2m, m >= 1):
///
///   E_1 = S(-2)^6 + S(-m),      d_1 = [M1 | F]
///   E_2 = S(-3)^8 + S(-m-2)^6,  d_2 = [[M2, -F I6], [0, M1]]
///   E_3 = S(-4)^3 + S(-m-3)^8,  d_3 = [[M3,  F I8], [0, M2]]
///   E_4 = S(-m-4)^3,            d_4 = [[-F I3], [M3]]
ResolutionComplex build_even(const Polynomial& f, bool assume_irreducible = true);

/// Resolution of the image of an odd-degree curve f (d = 2m - 1, m >= 2):
///
///   E_1 = S(-2)^6 + S(-m)^3,    d_1 = [M1 | F0 F1 F2]
///   E_2 = S(-3)^8 + S(-m-1)^8,  d_2 = [[M2, V], [0, Y]]
///   E_3 = S(-4)^3 + S(-m-2)^6,  d_3 = [[M3, K], [0, L]]
///   E_4 = S(-m-4),              d_4 = [J]
ResolutionComplex build_odd(const Polynomial& f, bool assume_irreducible = true);

/// Dispatches on the parity of deg f; throws PreconditionError for d < 2.
ResolutionComplex build_resolution(const Polynomial& f, bool assume_irreducible = true);

/// Frozen templates of the complex's parity (or of the bare Veronese complex).
TemplateComplex templates_for(const ResolutionComplex& c);

enum class Block { U, Wprime, H, Gprime, V, Y, K, L, J, Jprime };

/// Parses "U", "Wprime", "H", "Gprime", "V", "Y", "K", "L", "J", "Jprime".
Block parse_block(std::string_view name);

struct LabeledVector {
  std::string label;
  std::vector<Polynomial> entries;
};

/// Named vector families, sliced from the stored differentials.
///   even: U_ij (curve columns of d_2), W'_k (Veronese columns of d_2),
///         H_k (curve columns of d_3), G'_k (Veronese columns of d_3)
///   odd:  V_k (curve columns of d_2), Y_lk (their last three rows),
///         K_l (curve columns of d_3), L_l (their last eight rows),
///         J (d_4), J' (its last six rows)
/// Throws PreconditionError when the family does not exist for the parity.
std::vector<LabeledVector> block(const ResolutionComplex& c, Block name);

}  // namespace veronese

#endif
