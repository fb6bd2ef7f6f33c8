// Copyright 2026 The Skipless Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKIPLESS_MATRIX_HPP_
#define SKIPLESS_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "skipless/field.hpp"

namespace skipless {

// Dense row-major matrix over GF(2^w).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<FieldElement>& entries() const { return entries_; }

  Matrix transpose() const;
  // The rows listed in `which`, in that order.
  Matrix select_rows(const std::vector<std::size_t>& which) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

// Throws kShapeMismatch when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b, const GaloisField& field);

// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t mat_rank(Matrix m, const GaloisField& field);

// Solves a * x = b for square a. Throws kShapeMismatch on incompatible shapes
// and kSingularMatrix when a is not invertible.
Matrix mat_solve(const Matrix& a, const Matrix& b, const GaloisField& field);

}  // namespace skipless

#endif  // SKIPLESS_MATRIX_HPP_
