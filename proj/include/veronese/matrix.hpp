#ifndef VERONESE_MATRIX_HPP
#define VERONESE_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace veronese {

/// Dense row-major matrix of ring elements.
template <class T>
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
  return out;
}

}  // namespace veronese

#endif
