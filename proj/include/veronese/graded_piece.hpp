#ifndef VERONESE_GRADED_PIECE_HPP
#define VERONESE_GRADED_PIECE_HPP

#include <map>
#include <memory>
#include <vector>

#include "veronese/linalg.hpp"
#include "veronese/matrix.hpp"
#include "veronese/polynomial.hpp"

namespace veronese {

/// Coordinates of the degree-n piece of a graded free module
/// S(-a_0) + ... + S(-a_{r-1}) over `ring`: one block per summand holding the
/// monomials of degree n - a_j in basis order. Blocks follow summand order,
/// or reverse summand order when `reversed` is set.
class PieceCoordinates {
public:
  PieceCoordinates(Ring ring, const std::vector<int>& twists, int n, bool reversed = false);

  std::size_t size() const { return size_; }
  std::size_t generator_count() const { return offsets_.size(); }
  std::size_t offset(std::size_t generator) const { return offsets_[generator]; }
  /// Monomial basis of the block for `generator` (empty when n < a_j).
  const std::vector<Monomial>& monomials(std::size_t generator) const;
  std::size_t index(std::size_t generator, const Monomial& m) const;

private:
  Ring ring_;
  int n_;
  std::vector<int> twists_;
  std::vector<std::size_t> offsets_;
  std::vector<std::shared_ptr<const GradedBasis>> bases_;
  std::size_t size_ = 0;
};

/// Images of the basis of the source piece, as sparse coordinate vectors in
/// `target`. Column order: source summand, then monomial basis order.
template <class Ops>
std::vector<SparseVector<Ops>> piece_columns(const Matrix<Polynomial>& entries, Ring ring,
                                             const std::vector<int>& source_twists, const PieceCoordinates& target,
                                             int n, const Ops& ops) {
  std::vector<SparseVector<Ops>> columns;
  std::map<int, std::vector<Monomial>> source_bases;
  // entry terms converted once
  std::vector<std::vector<std::pair<Monomial, typename Ops::Elem>>> converted(entries.rows() * entries.cols());
  for (std::size_t r = 0; r < entries.rows(); ++r)
    for (std::size_t c = 0; c < entries.cols(); ++c)
      for (const auto& t : entries(r, c).terms())
        converted[r * entries.cols() + c].emplace_back(t.monomial, ops.from_rational(t.coeff));

  for (std::size_t c = 0; c < entries.cols(); ++c) {
    int deg = n - source_twists[c];
    if (deg < 0) continue;
    auto [it, inserted] = source_bases.try_emplace(deg);
    if (inserted) it->second = graded_basis(ring, deg);
    for (const Monomial& mu : it->second) {
      SparseVector<Ops> column;
      for (std::size_t r = 0; r < entries.rows(); ++r)
        for (const auto& [m, v] : converted[r * entries.cols() + c])
          column.emplace_back(static_cast<std::uint32_t>(target.index(r, m * mu)), v);
      std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      columns.push_back(std::move(column));
    }
  }
  return columns;
}

template <class Ops>
std::size_t rank_of(const std::vector<SparseVector<Ops>>& vectors, std::size_t dimension, const Ops& ops) {
  Echelon<Ops> echelon(ops, dimension);
  for (const auto& v : vectors) echelon.insert(v);
  return echelon.rank();
}

}  // namespace veronese

#endif
