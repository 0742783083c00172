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

#include "sqc/evalcode.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <thread>

#include "sqc/error.hpp"
#include "sqc/kernels.hpp"

namespace sqc {

const char* to_string(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::box:
      return "box";
    case CertificateKind::divisor:
      return "divisor";
    case CertificateKind::shifted:
      return "shifted";
    case CertificateKind::none:
      return "none";
  }
  return "none";
}

GeneratorMatrix::GeneratorMatrix(FieldPtr field, std::size_t m, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), m_(m), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void GeneratorMatrix::append_row(std::span<const Elem> values) {
  require(values.size() == cols_, ErrorKind::DimensionMismatch, "row length differs from matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void GeneratorMatrix::truncate(std::size_t rows) {
  if (rows >= rows_) return;
  rows_ = rows;
  data_.resize(rows_ * cols_);
}

namespace {

// x^k for every x in F_q, k fixed.
std::vector<Elem> power_column(const Field& field, std::uint32_t k) {
  std::vector<Elem> out(field.q());
  for (std::uint32_t x = 0; x < field.q(); ++x) out[x] = field.pow(static_cast<Elem>(x), k);
  return out;
}

// Monomial X^a evaluated at every point, accumulated as coeff * X^a into out.
void accumulate_monomial(const Field& field, const PointList& points, const ExpVec& a, Elem coeff,
                         std::span<Elem> out) {
  const std::size_t m = points.dimension();
  std::vector<std::vector<Elem>> cols;
  cols.reserve(m);
  for (std::size_t i = 0; i < m; ++i) cols.push_back(power_column(field, a[i]));
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto pt = points[j];
    Elem v = coeff;
    for (std::size_t i = 0; i < m && v != 0; ++i) v = field.mul(v, cols[i][pt[i]]);
    out[j] = field.add(out[j], v);
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

unsigned worker_count(const Limits& limits) {
  unsigned t = limits.threads != 0 ? limits.threads : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

}  // namespace

GeneratorMatrix generator_matrix(const MonomialSet& a, const Limits& limits) {
  require(a.reduced(), ErrorKind::NotReduced, "generator_matrix needs a reduced set");
  auto field = Field::get(a.q());
  const PointList points = enumerate_points(*field, a.m(), limits);
  const std::uint64_t cells = saturating_mul(points.size(), a.size());
  require(cells <= limits.max_matrix_cells, ErrorKind::BudgetExceeded,
          "generator matrix with " + std::to_string(cells) + " entries exceeds cap");
  GeneratorMatrix g(field, a.m(), a.size(), points.size());
  for (std::size_t r = 0; r < a.size(); ++r) accumulate_monomial(*field, points, a[r], 1, g.row(r));
  return g;
}

std::size_t row_reduce(GeneratorMatrix& g) {
  const Field& field = g.field();
  std::vector<Elem> tmp(g.cols());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < g.cols() && rank < g.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < g.rows() && g.at(pivot, col) == 0) ++pivot;
    if (pivot == g.rows()) continue;
    if (pivot != rank) std::swap_ranges(g.row(pivot).begin(), g.row(pivot).end(), g.row(rank).begin());
    auto prow = g.row(rank);
    const Elem scale = field.inv(prow[col]);
    kernels::scale(field, scale, prow.data(), prow.data(), prow.size());
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (r == rank) continue;
      const Elem c = g.at(r, col);
      if (c == 0) continue;
      kernels::axpy(field, field.neg(c), g.row(r).data(), prow.data(), tmp.data(), g.cols());
    }
    ++rank;
  }
  g.truncate(rank);
  return rank;
}

std::size_t rank(const GeneratorMatrix& g) {
  GeneratorMatrix copy = g;
  return row_reduce(copy);
}

bool row_space_equal(const GeneratorMatrix& g1, const GeneratorMatrix& g2) {
  require(g1.field().q() == g2.field().q() && g1.cols() == g2.cols(), ErrorKind::DimensionMismatch,
          "row spaces over different fields or lengths");
  GeneratorMatrix stacked = g1;
  for (std::size_t r = 0; r < g2.rows(); ++r) stacked.append_row(g2.row(r));
  const std::size_t r1 = rank(g1);
  const std::size_t r2 = rank(g2);
  return r1 == r2 && row_reduce(stacked) == r1;
}

GeneratorMatrix schur_square_matrix(const GeneratorMatrix& g, const Limits& limits) {
  const std::uint64_t pairs = saturating_mul(g.rows(), g.rows() + 1) / 2;
  require(saturating_mul(pairs, g.cols()) <= limits.max_matrix_cells, ErrorKind::BudgetExceeded,
          std::to_string(pairs) + " product rows exceed the matrix cap");
  const Field& field = g.field();
  GeneratorMatrix out(g.field_ptr(), g.m(), 0, g.cols());
  std::vector<Elem> prod(g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      const auto a = g.row(i);
      const auto b = g.row(j);
      for (std::size_t c = 0; c < g.cols(); ++c) prod[c] = field.mul(a[c], b[c]);
      out.append_row(prod);
    }
  }
  row_reduce(out);
  return out;
}

GeneratorMatrix puncture_axes(const GeneratorMatrix& g, std::span<const std::size_t> axes) {
  const PointList points(g.field().q(), g.m(), g.cols());
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto pt = points[j];
    if (std::all_of(axes.begin(), axes.end(), [&](std::size_t ax) { return pt[ax] != 0; })) keep.push_back(j);
  }
  GeneratorMatrix out(g.field_ptr(), g.m(), g.rows(), keep.size());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out.at(r, c) = g.at(r, keep[c]);
  return out;
}

namespace {

// Codeword enumeration. For each leading position l the messages
// e_l + sum_{i>l} c_i g_i are walked in p-ary modular Gray code order over
// the e(k-1-l) base-p digits of (c_{l+1}, ..., c_{k-1}), so consecutive
// codewords differ by one precomputed row basis_k * g_i.
class CodewordSearch {
 public:
  CodewordSearch(const GeneratorMatrix& basis, unsigned threads)
      : g_(basis), field_(basis.field()), threads_(threads), width_((basis.cols() + 15) / 16 * 16) {}

  std::uint64_t run() {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t lead = 0; lead < g_.rows(); ++lead) best = std::min(best, run_lead(lead));
    return best;
  }

 private:
  std::uint64_t run_lead(std::size_t lead) {
    const std::size_t e = field_.e();
    const std::size_t digits = e * (g_.rows() - 1 - lead);
    deltas_.assign(digits * width_, 0);
    for (std::size_t d = 0; d < digits; ++d) {
      const std::size_t i = lead + 1 + d / e;
      const Elem b = field_.basis(static_cast<std::uint32_t>(d % e));
      kernels::scale(field_, b, deltas_.data() + d * width_, g_.row(i).data(), g_.cols());
    }
    std::uint64_t total = 1;
    for (std::size_t d = 0; d < digits; ++d) total *= field_.p();

    const std::uint64_t chunks = std::min<std::uint64_t>(threads_, std::max<std::uint64_t>(1, total / 4096));
    std::vector<std::uint64_t> results(chunks, std::numeric_limits<std::uint64_t>::max());
    auto work = [&](std::uint64_t c) {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      results[c] = walk(lead, digits, begin, end);
    };
    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
      for (auto& t : pool) t.join();
    }
    return *std::min_element(results.begin(), results.end());
  }

  // Minimum weight over Gray indices [begin, end).
  std::uint64_t walk(std::size_t lead, std::size_t digits, std::uint64_t begin, std::uint64_t end) const {
    const std::uint32_t p = field_.p();
    const auto ctx = kernels::AddContext::of(field_);
    const auto& kern = kernels::active();
    std::vector<Elem> word(width_, 0);
    std::vector<Elem> tmp(width_, 0);
    std::copy(g_.row(lead).begin(), g_.row(lead).end(), word.begin());

    // Gray digits of begin: g_k = (t_k - t_{k+1}) mod p.
    std::uint64_t t = begin;
    std::uint32_t cur = static_cast<std::uint32_t>(t % p);
    for (std::size_t d = 0; d < digits; ++d) {
      t /= p;
      const std::uint32_t next = static_cast<std::uint32_t>(t % p);
      const std::uint32_t gd = (cur + p - next) % p;
      if (gd != 0) {
        kernels::scale(field_, static_cast<Elem>(gd), tmp.data(), deltas_.data() + d * width_, width_);
        kern.add(ctx, word.data(), tmp.data(), width_);
      }
      cur = next;
    }

    std::uint64_t best = kern.weight(word.data(), width_);
    for (std::uint64_t step = begin + 1; step < end; ++step) {
      std::uint64_t s = step;
      std::size_t pos = 0;
      if (p == 2) {
        pos = static_cast<std::size_t>(__builtin_ctzll(s));
      } else {
        while (s % p == 0) {
          s /= p;
          ++pos;
        }
      }
      const std::uint64_t w = kern.add_weight(ctx, word.data(), deltas_.data() + pos * width_, width_);
      if (w < best) best = w;
    }
    return best;
  }

  const GeneratorMatrix& g_;
  const Field& field_;
  unsigned threads_;
  std::size_t width_;
  std::vector<Elem> deltas_;
};

// Smallest set of linearly dependent columns of a parity-check matrix,
// found by iterative deepening over column subsets in lexicographic order.
class SupportSearch {
 public:
  SupportSearch(const GeneratorMatrix& rref, std::uint64_t budget) : field_(rref.field()), budget_(budget) {
    const std::size_t k = rref.rows();
    const std::size_t n = rref.cols();
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < k; ++r) {
      std::size_t c = 0;
      while (rref.at(r, c) == 0) ++c;
      pivots.push_back(c);
      is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    checks_ = free_cols.size();
    // Column j of H as a vector of length n - k. Check row t (free column f):
    // c_f - sum_r G[r][f] c_{pivot r} = 0.
    columns_.assign(n, std::vector<Elem>(checks_, 0));
    for (std::size_t t = 0; t < checks_; ++t) {
      const std::size_t f = free_cols[t];
      columns_[f][t] = 1;
      for (std::size_t r = 0; r < k; ++r) columns_[pivots[r]][t] = field_.neg(rref.at(r, f));
    }
  }

  std::uint64_t run() {
    const std::size_t n = columns_.size();
    for (std::size_t w = 1; w <= n; ++w) {
      basis_.clear();
      if (search(0, w)) return w;
    }
    fail(ErrorKind::InternalError, "no dependent column set found");
  }

 private:
  struct Reduced {
    std::size_t pivot;
    std::vector<Elem> v;  // v[pivot] == 1
  };

  // Reduces col against the current basis; returns true if it vanishes.
  bool reduce(std::vector<Elem>& col) const {
    for (const auto& b : basis_) {
      const Elem c = col[b.pivot];
      if (c == 0) continue;
      const Elem f = field_.neg(c);
      for (std::size_t t = 0; t < checks_; ++t) col[t] = field_.add(col[t], field_.mul(f, b.v[t]));
    }
    return std::all_of(col.begin(), col.end(), [](Elem x) { return x == 0; });
  }

  bool search(std::size_t start, std::size_t remaining) {
    const std::size_t n = columns_.size();
    for (std::size_t c = start; c + remaining <= n; ++c) {
      if (++visited_ > budget_)
        fail(ErrorKind::BudgetExceeded, "column subset search exceeded " + std::to_string(budget_) + " nodes");
      std::vector<Elem> col = columns_[c];
      if (reduce(col)) {
        if (remaining == 1) return true;
        continue;  // a smaller dependent set exists; already excluded by deepening
      }
      if (remaining == 1) continue;
      std::size_t piv = 0;
      while (col[piv] == 0) ++piv;
      const Elem s = field_.inv(col[piv]);
      for (auto& x : col) x = field_.mul(x, s);
      basis_.push_back({piv, std::move(col)});
      const bool found = search(c + 1, remaining - 1);
      basis_.pop_back();
      if (found) return true;
    }
    return false;
  }

  const Field& field_;
  std::uint64_t budget_;
  std::size_t checks_ = 0;
  std::vector<std::vector<Elem>> columns_;
  std::vector<Reduced> basis_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t min_distance_exhaustive(const GeneratorMatrix& g, const Limits& limits, DistanceMethod method) {
  GeneratorMatrix basis = g;
  const std::size_t k = row_reduce(basis);
  require(k > 0, ErrorKind::EmptySet, "the zero code has no minimum distance");

  const std::uint64_t q = basis.field().q();
  // (q^k - 1)/(q - 1) = 1 + q + ... + q^{k-1}, saturating.
  std::uint64_t classes = 0, term = 1;
  for (std::size_t i = 0; i < k; ++i) {
    classes = std::min(std::numeric_limits<std::uint64_t>::max() - term, classes) + term;
    term = saturating_mul(term, q);
  }

  if (method == DistanceMethod::automatic)
    method = classes <= limits.max_classes ? DistanceMethod::codewords : DistanceMethod::supports;

  if (method == DistanceMethod::codewords) {
    require(classes <= limits.max_classes, ErrorKind::BudgetExceeded,
            std::to_string(classes) + " message classes exceed budget " + std::to_string(limits.max_classes));
    return CodewordSearch(basis, worker_count(limits)).run();
  }
  return SupportSearch(basis, limits.max_classes).run();
}

std::vector<Elem> evaluate(const SparsePoly& f, const Field& field, std::size_t m, const Limits& limits) {
  const PointList points = enumerate_points(field, m, limits);
  std::vector<Elem> out(points.size(), 0);
  for (const auto& [a, c] : f) accumulate_monomial(field, points, a, c, out);
  return out;
}

SparsePoly expand_witness(const DistanceCertificate& cert, const Field& field) {
  require(cert.q == field.q(), ErrorKind::MismatchedFields, "certificate field differs");
  const std::size_t m = cert.shift.size();
  std::map<ExpVec, Elem> poly{{cert.shift, 1}};
  auto multiply = [&](const std::vector<std::pair<ExpVec, Elem>>& factor) {
    std::map<ExpVec, Elem> next;
    for (const auto& [a, ca] : poly)
      for (const auto& [b, cb] : factor) {
        Elem& slot = next[a + b];
        slot = field.add(slot, field.mul(ca, cb));
      }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly = std::move(next);
  };
  for (const auto& af : cert.factors) {
    require(af.axis < m, ErrorKind::InvalidArgument, "witness factor on axis outside [0, m)");
    auto unit = [&](std::uint32_t power) {
      ExpVec v(m);
      v[af.axis] = power;
      return v;
    };
    for (Elem r : af.roots) multiply({{unit(1), 1}, {unit(0), field.neg(r)}});
    for (const auto& b : af.binomials) multiply({{unit(b.hi), 1}, {unit(b.lo), field.neg(b.c)}});
  }
  return {poly.begin(), poly.end()};
}

std::uint64_t weight_of_witness(const DistanceCertificate& cert, const MonomialSet& a, const Limits& limits) {
  require(cert.q == a.q() && cert.shift.size() == a.m(), ErrorKind::MismatchedAmbient,
          "certificate and set live over different (q, m)");
  auto field = Field::get(a.q());
  const SparsePoly f = expand_witness(cert, *field);
  for (const auto& [e, c] : f)
    require(a.contains(e), ErrorKind::SupportOutsideA, "witness monomial " + e.to_string() + " is not in A");
  const auto word = evaluate(f, *field, a.m(), limits);
  return kernels::active().weight(word.data(), word.size());
}

void write_matrix(std::ostream& out, const GeneratorMatrix& g) {
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out << ' ';
      out << g.at(r, c);
    }
    out << '\n';
  }
}

}  // namespace sqc
