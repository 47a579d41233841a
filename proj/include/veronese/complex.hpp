#ifndef VERONESE_COMPLEX_HPP
#define VERONESE_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "veronese/lift.hpp"
#include "veronese/matrix.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

/// Direct sum of twists S(-a_0) + S(-a_1) + ... over the ambient ring.
struct GradedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  /// Dimension of the degree-n piece: sum_j C(n - a_j + 5, 5).
  std::uint64_t graded_dimension(int n) const;

  bool operator==(const GradedFreeModule&) const = default;
};

/// Differential between graded free modules; entry (r, c) is zero or
/// homogeneous of degree source.twists[c] - target.twists[r].
struct GradedMatrix {
  GradedFreeModule source;
  GradedFreeModule target;
  Matrix<Polynomial> entries;

  /// Throws std::invalid_argument on a shape or degree violation.
  void validate() const;

  bool operator==(const GradedMatrix&) const = default;
};

struct CurveProvenance {
  Polynomial f;
  int degree;
  Parity parity;
  std::variant<EvenLift, OddLift> lift;
  bool irreducibility_attested = false;
};

/// E_0 = S <- E_1 <- ... <- E_n with d_i : E_i -> E_{i-1}.
///
/// Summands of each E_i are stored Veronese block first and curve block
/// second; veronese_ranks[i] is the size of the Veronese block of E_i.
struct ResolutionComplex {
  Field field = Field::rationals();
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMatrix> differentials;  // differentials[i - 1] is d_i
  std::vector<std::size_t> veronese_ranks;
  std::optional<CurveProvenance> curve;

  std::size_t length() const { return differentials.size(); }
  const GradedMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
  GradedMatrix& d(std::size_t i) { return differentials.at(i - 1); }

  /// Throws std::invalid_argument unless modules and differentials chain.
  void validate_shapes() const;
};

/// (homological index i, internal degree j) -> number of S(-j) summands of E_i.
class BettiTable {
public:
  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const std::pair<int, int>, int>> entries) : entries_(entries) {}

  void add(int i, int j, int count = 1);
  int at(int i, int j) const;
  int rank(int i) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  /// Usual diagram: row r lists the entries with j - i = r.
  std::string diagram() const;
  std::string to_string() const;

  bool operator==(const BettiTable&) const = default;

private:
  std::map<std::pair<int, int>, int> entries_;
};

}  // namespace veronese

#endif
