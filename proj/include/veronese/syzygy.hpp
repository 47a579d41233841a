#ifndef VERONESE_SYZYGY_HPP
#define VERONESE_SYZYGY_HPP

#include <span>
#include <vector>

#include "veronese/polynomial.hpp"

namespace veronese {

using PolyVector = std::vector<Polynomial>;

/// Degree of a homogeneous vector in the free module with the given row
/// twists: deg(entry_r) + twist_r, common to all nonzero entries. Throws
/// PreconditionError for a zero or inhomogeneous vector.
int module_degree(const PolyVector& v, std::span<const int> row_twists);

/// Basis of the degree-n syzygies of `gens`: coefficient vectors
/// (c_1, ..., c_r) with deg c_k = n - deg g_k and sum_k c_k g_k = 0, computed
/// as the exact nullspace of the degree-n Macaulay matrix over the
/// generators' field. Generators are vectors in the free module with the
/// given row twists.
std::vector<PolyVector> module_syzygy_oracle(std::span<const PolyVector> gens, std::span<const int> row_twists,
                                             int n);

/// Same, for a list of homogeneous polynomials.
std::vector<PolyVector> syzygy_oracle(std::span<const Polynomial> gens, int n);

}  // namespace veronese

#endif
