#include "veronese/complex.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace veronese {

std::uint64_t GradedFreeModule::graded_dimension(int n) const {
  std::uint64_t total = 0;
  for (int a : twists)
    if (n >= a) total += binomial(n - a + 5, 5);
  return total;
}

void GradedMatrix::validate() const {
  if (entries.rows() != target.rank() || entries.cols() != source.rank())
    throw std::invalid_argument("differential shape does not match its modules");
  for (std::size_t r = 0; r < entries.rows(); ++r) {
    for (std::size_t c = 0; c < entries.cols(); ++c) {
      const Polynomial& e = entries(r, c);
      if (e.ring() != Ring::Ambient) throw std::invalid_argument("differential entry outside the ambient ring");
      auto deg = e.homogeneous_degree();
      int expected = source.twists[c] - target.twists[r];
      if (!deg || (*deg != kZeroPolynomialDegree && *deg != expected))
        throw std::invalid_argument("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") is not homogeneous of degree " + std::to_string(expected));
    }
  }
}

void ResolutionComplex::validate_shapes() const {
  if (modules.size() != differentials.size() + 1) throw std::invalid_argument("module count must be length + 1");
  if (modules.empty() || modules[0].twists != std::vector<int>{0})
    throw std::invalid_argument("E_0 must be S");
  for (std::size_t i = 1; i <= length(); ++i) {
    const GradedMatrix& di = d(i);
    if (di.source != modules[i] || di.target != modules[i - 1])
      throw std::invalid_argument("d_" + std::to_string(i) + " does not map E_" + std::to_string(i) + " to E_" +
                                  std::to_string(i - 1));
    if (di.entries.rows() != di.target.rank() || di.entries.cols() != di.source.rank())
      throw std::invalid_argument("d_" + std::to_string(i) + " has the wrong shape");
  }
}

void BettiTable::add(int i, int j, int count) {
  if (count <= 0) return;
  entries_[{i, j}] += count;
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::rank(int i) const {
  int total = 0;
  for (const auto& [key, count] : entries_)
    if (key.first == i) total += count;
  return total;
}

std::string BettiTable::diagram() const {
  if (entries_.empty()) return "";
  int max_i = 0, min_r = 0, max_r = 0;
  bool first = true;
  for (const auto& [key, count] : entries_) {
    int r = key.second - key.first;
    max_i = std::max(max_i, key.first);
    if (first) min_r = max_r = r;
    min_r = std::min(min_r, r);
    max_r = std::max(max_r, r);
    first = false;
  }
  std::ostringstream out;
  out << std::setw(6) << ' ';
  for (int i = 0; i <= max_i; ++i) out << std::setw(5) << i;
  out << "\ntotal:";
  for (int i = 0; i <= max_i; ++i) out << std::setw(5) << rank(i);
  out << '\n';
  for (int r = min_r; r <= max_r; ++r) {
    out << std::setw(5) << r << ':';
    for (int i = 0; i <= max_i; ++i) {
      int v = at(i, i + r);
      if (v == 0)
        out << std::setw(5) << '.';
      else
        out << std::setw(5) << v;
    }
    out << '\n';
  }
  return out.str();
}

std::string BettiTable::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [key, count] : entries_) {
    if (!first) out << ", ";
    out << '(' << key.first << ',' << key.second << "):" << count;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace veronese
