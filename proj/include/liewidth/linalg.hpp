/*
   Copyright 2026 The liewidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIEWIDTH_LINALG_HPP
#define LIEWIDTH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "liewidth/rational.hpp"

namespace liewidth {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

std::size_t rank(Matrix m);

struct LinearSolve {
  std::optional<std::vector<Rational>> solution;  // free unknowns set to zero
  std::size_t rank = 0;                           // rank of the coefficient matrix
  std::size_t augmented_rank = 0;                 // rank of [A | b]
};

/// Solves A x = b exactly by Gauss-Jordan elimination.
LinearSolve solve(const Matrix& a, const std::vector<Rational>& b);

}  // namespace liewidth

#endif  // LIEWIDTH_LINALG_HPP
