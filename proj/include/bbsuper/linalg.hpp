#pragma once

#include <vector>

#include "bbsuper/datum.hpp"
#include "bbsuper/poly.hpp"

namespace bbsuper {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Rank over Q by Gaussian elimination.
std::size_t rank(Matrix<Rational> m);

/// Rank over the fraction field Q(t) by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(Matrix<Poly> m);

/// Rank over Q(t). A specialization at an integer point bounds the rank from
/// below, so full rank there is conclusive; otherwise falls back to Bareiss.
std::size_t symbolic_rank(const Matrix<Poly>& m);

}  // namespace bbsuper
