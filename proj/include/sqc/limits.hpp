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

namespace sqc {

/// Work caps for the enumerating routines. Exceeding one raises
/// ErrorKind::BudgetExceeded instead of running unbounded.
struct Limits {
  /// Maximum q^m for point enumeration and lattice-box scans.
  std::uint64_t max_points = std::uint64_t{1} << 22;
  /// Maximum k * n entries in a materialized generator matrix.
  std::uint64_t max_matrix_cells = std::uint64_t{1} << 26;
  /// Maximum number of projective message classes (or column subsets) the
  /// exhaustive distance search may visit.
  std::uint64_t max_classes = 10'000'000;
  /// Worker threads for the exhaustive search; 0 picks hardware concurrency.
  unsigned threads = 0;
};

inline constexpr unsigned kMaxVariables = 8;

}  // namespace sqc
