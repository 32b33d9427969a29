#ifndef IVQROF_MATRIX_HPP_
#define IVQROF_MATRIX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ivqrof/number.hpp"

namespace ivqrof {

// dense row-major matrix
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

enum class Polarity { benefit, cost };

std::string to_string(Polarity p);

// m alternatives x n attributes
struct DecisionMatrix {
  Matrix<IVqROFN> cells;
  std::vector<Polarity> polarity;

  DecisionMatrix() = default;
  // all attributes benefit-type
  explicit DecisionMatrix(Matrix<IVqROFN> c);
  DecisionMatrix(Matrix<IVqROFN> c, std::vector<Polarity> pol);

  std::size_t rows() const noexcept { return cells.rows(); }
  std::size_t cols() const noexcept { return cells.cols(); }
  const IVqROFN& operator()(std::size_t i, std::size_t j) const { return cells(i, j); }
  IVqROFN& operator()(std::size_t i, std::size_t j) { return cells(i, j); }

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;
};

// builds a matrix from nested rows; throws shape_error when ragged
Matrix<IVqROFN> make_matrix(const std::vector<std::vector<IVqROFN>>& rows);

}  // namespace ivqrof

#endif
