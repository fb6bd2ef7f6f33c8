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

#include "skipless/matrix.hpp"

#include <string>
#include <utility>

#include "skipless/error.hpp"

namespace skipless {
namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

// row[target] -= factor * row[source], starting at column `from`.
void eliminate(Matrix& m, std::size_t target, std::size_t source,
               FieldElement factor, std::size_t from, const GaloisField& f) {
  for (std::size_t c = from; c < m.cols(); ++c) {
    m.at(target, c) = m.at(target, c) + f.mul(factor, m.at(source, c));
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const {
  Matrix out(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(which[i], c);
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, const GaloisField& field) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot multiply " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const FieldElement x = a.at(r, t);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out.at(r, c) = out.at(r, c) + field.mul(x, b.at(t, c));
      }
    }
  }
  return out;
}

std::size_t mat_rank(Matrix m, const GaloisField& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    swap_rows(m, rank, pivot);
    const FieldElement inv = field.inv(m.at(rank, col));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      eliminate(m, r, rank, field.mul(m.at(r, col), inv), col, field);
    }
    ++rank;
  }
  return rank;
}

Matrix mat_solve(const Matrix& a, const Matrix& b, const GaloisField& field) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorCode::kShapeMismatch, "mat_solve needs a square system");
  }
  Matrix lhs = a;
  Matrix rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lhs.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw Error(ErrorCode::kSingularMatrix,
                  "no pivot in column " + std::to_string(col));
    }
    swap_rows(lhs, col, pivot);
    swap_rows(rhs, col, pivot);
    const FieldElement inv = field.inv(lhs.at(col, col));
    for (std::size_t c = col; c < n; ++c) lhs.at(col, c) = field.mul(lhs.at(col, c), inv);
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs.at(col, c) = field.mul(rhs.at(col, c), inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || lhs.at(r, col).is_zero()) continue;
      const FieldElement factor = lhs.at(r, col);
      eliminate(lhs, r, col, factor, col, field);
      eliminate(rhs, r, col, factor, 0, field);
    }
  }
  return rhs;
}

}  // namespace skipless
