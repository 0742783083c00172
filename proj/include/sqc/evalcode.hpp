// Copyright 2026 The squarecodes Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sqc/expsets.hpp"
#include "sqc/gf.hpp"
#include "sqc/limits.hpp"
#include "sqc/witness.hpp"

namespace sqc {

/// Row-major matrix over F_q whose rows are codewords of length n = q^m,
/// coordinates in enumerate_points order.
class GeneratorMatrix {
 public:
  GeneratorMatrix(FieldPtr field, std::size_t m, std::size_t rows, std::size_t cols);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  Elem at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  void append_row(std::span<const Elem> values);
  void truncate(std::size_t rows);

 private:
  FieldPtr field_;
  std::size_t m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Row per monomial of A (A's order), column per point. Requires A reduced.
GeneratorMatrix generator_matrix(const MonomialSet& a, const Limits& limits = {});

/// Reduced row echelon form in place; zero rows are dropped. Returns the rank.
std::size_t row_reduce(GeneratorMatrix& g);

std::size_t rank(const GeneratorMatrix& g);

/// Throws DimensionMismatch unless both share the field and length.
bool row_space_equal(const GeneratorMatrix& g1, const GeneratorMatrix& g2);

/// Basis of the span of all products g_i * g_j, i <= j.
GeneratorMatrix schur_square_matrix(const GeneratorMatrix& g, const Limits& limits = {});

/// Keeps only the columns whose point has a nonzero coordinate on every
/// listed axis.
GeneratorMatrix puncture_axes(const GeneratorMatrix& g, std::span<const std::size_t> axes);

enum class DistanceMethod {
  automatic,  // codewords when the class count fits the budget, else supports
  codewords,  // one codeword per projective message class
  supports,   // smallest linearly dependent column set of a parity-check matrix
};

/// Exact minimum Hamming weight of the nonzero codewords in the row space
/// of g. Throws BudgetExceeded past limits.max_classes and EmptySet for the
/// zero code. The result does not depend on limits.threads.
std::uint64_t min_distance_exhaustive(const GeneratorMatrix& g, const Limits& limits = {},
                                      DistanceMethod method = DistanceMethod::automatic);

/// Evaluation of a polynomial at every point of F_q^m.
std::vector<Elem> evaluate(const SparsePoly& f, const Field& field, std::size_t m, const Limits& limits = {});

/// Expands the witness, checks its support lies in A (SupportOutsideA
/// otherwise) and returns the Hamming weight of its evaluation.
std::uint64_t weight_of_witness(const DistanceCertificate& cert, const MonomialSet& a, const Limits& limits = {});

/// One row per line, space-separated element indices.
void write_matrix(std::ostream& out, const GeneratorMatrix& g);

}  // namespace sqc
