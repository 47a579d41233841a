#include "veronese/graded_piece.hpp"

namespace veronese {

PieceCoordinates::PieceCoordinates(Ring ring, const std::vector<int>& twists, int n, bool reversed)
    : ring_(ring), n_(n), twists_(twists), offsets_(twists.size(), 0), bases_(twists.size()) {
  std::map<int, std::shared_ptr<const GradedBasis>> cache;
  for (std::size_t j = 0; j < twists.size(); ++j) {
    int deg = n - twists[j];
    auto& slot = cache[deg];
    if (!slot) slot = std::make_shared<const GradedBasis>(ring, deg);
    bases_[j] = slot;
  }
  for (std::size_t step = 0; step < twists.size(); ++step) {
    std::size_t j = reversed ? twists.size() - 1 - step : step;
    offsets_[j] = size_;
    size_ += bases_[j]->size();
  }
}

const std::vector<Monomial>& PieceCoordinates::monomials(std::size_t generator) const {
  return bases_.at(generator)->monomials();
}

std::size_t PieceCoordinates::index(std::size_t generator, const Monomial& m) const {
  return offsets_.at(generator) + bases_[generator]->index_of(m);
}

}  // namespace veronese
