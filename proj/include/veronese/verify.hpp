#ifndef VERONESE_VERIFY_HPP
#define VERONESE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veronese/complex.hpp"
#include "veronese/field.hpp"

namespace veronese {

/// Offending entry: (d_index, row, col) of d_i itself, or of the product
/// d_i d_{i+1} for the complex check.
struct Witness {
  std::size_t index;
  std::size_t row;
  std::size_t col;
  Polynomial value;
};

struct CheckResult {
  bool pass = true;
  std::optional<Witness> witness;
  std::string message;
};

/// d_i d_{i+1} == 0 for every i.
CheckResult check_complex(const ResolutionComplex& c);
/// No differential entry is a nonzero constant.
CheckResult check_minimal(const ResolutionComplex& c);
/// theta(g) is divisible by f for every entry g of d_1 (zero when there is no curve).
CheckResult theta_vanishing_check(const ResolutionComplex& c);

BettiTable betti_table(const ResolutionComplex& c);

/// sum_i (-1)^i dim (E_i)_n.
std::int64_t hilbert_from_resolution(const ResolutionComplex& c, int n);
/// dim of the degree-2n piece of k[x0, x1, x2]/(f) for deg f = d.
std::int64_t hilbert_oracle(int d, int n);
/// Hilbert function the complex should resolve: the curve oracle, or
/// C(2n + 2, 2) for the bare Veronese surface.
std::int64_t expected_hilbert(const ResolutionComplex& c, int n);

/// A copy of the complex with every coefficient reduced into `field`.
ResolutionComplex reduce_to(const ResolutionComplex& c, Field field);

/// NotComplex: ker d_i contains the image of d_{i+1} up to dimension, but
/// part of that image leaves ker d_i.
enum class Verdict { Exact, Homology, NotComplex };

/// One (position i, degree n) slice. composition_rank is the rank of
/// d_i d_{i+1} in degree n, so the image of d_{i+1} meets ker d_i in
/// rank_next - composition_rank dimensions and
///   homology = kernel - (rank_next - composition_rank).
struct ExactnessCell {
  std::size_t position;
  int degree;
  std::uint64_t dim;
  std::uint64_t rank;
  std::uint64_t kernel;
  std::uint64_t rank_next;
  std::uint64_t composition_rank;
  Verdict verdict;
  std::uint64_t homology;
};

/// rank d_1 at degree n against dim S_n - expected_hilbert(n).
struct IdealCheck {
  int degree;
  std::uint64_t image_dim;
  std::uint64_t expected;
  bool pass;
};

struct ExactnessReport {
  std::uint32_t prime;
  int n_max;
  std::vector<ExactnessCell> cells;  // ordered by (position, degree)
  std::vector<IdealCheck> ideal;

  bool exact() const;
  /// First failing cell or ideal check, described in one line.
  std::optional<std::string> first_failure() const;
};

/// Degree-wise exactness at E_1 .. E_n for 0 <= n <= n_max by ranks over
/// F_prime. Throws PreconditionError when prime <= d, when prime is not
/// prime, when the complex lives over a different prime field, or when
/// n_max is below the largest twist.
ExactnessReport graded_exactness(const ResolutionComplex& c, int n_max,
                                 std::uint32_t prime = Field::kDefaultPrime);

/// Span of d_2's columns in degree n against the oracle syzygies of d_1's
/// entries (ranks over F_prime).
struct SpanComparison {
  int degree;
  std::uint64_t oracle_dim;
  std::uint64_t image_dim;
  std::uint64_t stacked_rank;
  bool pass() const { return oracle_dim == image_dim && stacked_rank == image_dim; }
};
SpanComparison compare_with_oracle(const ResolutionComplex& c, int n, std::uint32_t prime = Field::kDefaultPrime);

/// m + 6 for a curve resolution, 8 for the bare Veronese complex.
int default_degree_bound(const ResolutionComplex& c);

}  // namespace veronese

#endif
