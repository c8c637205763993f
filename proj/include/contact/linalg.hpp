#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace contact {

/// Sparse row: (column, value) pairs with strictly increasing columns and no zeros.
template <typename Scalar>
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incremental row echelon form over an exact field.
///
/// Rows are inserted one at a time and reduced against the stored pivots; a
/// stored row always has leading coefficient 1 at its pivot column. Nothing
/// is rounded, so rank and nullspace are exact for exact scalar types.
template <typename Scalar>
class SparseEchelon {
 public:
  explicit SparseEchelon(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(SparseRow<Scalar> row) {
    reduce(row);
    if (row.empty()) return false;
    const Scalar lead = row.front().second;
    for (auto& entry : row) entry.second /= lead;
    const int pivot = row.front().first;
    pivots_.emplace(pivot, std::move(row));
    return true;
  }

  /// True if the row lies in the span of the inserted rows.
  bool contains(SparseRow<Scalar> row) const {
    reduce(row);
    return row.empty();
  }

  /// Basis of {x : row . x = 0 for every inserted row}, one sparse vector per free column.
  std::vector<SparseRow<Scalar>> nullspace() const {
    std::vector<SparseRow<Scalar>> basis;
    std::vector<Scalar> x(static_cast<std::size_t>(columns_));
    for (int free = 0; free < columns_; ++free) {
      if (pivots_.count(free) != 0) continue;
      std::fill(x.begin(), x.end(), Scalar(0));
      x[static_cast<std::size_t>(free)] = Scalar(1);
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        if (it->first > free) continue;  // solves to zero: only columns >= free are nonzero so far
        Scalar value(0);
        for (auto e = std::next(it->second.begin()); e != it->second.end(); ++e) {
          const Scalar& xc = x[static_cast<std::size_t>(e->first)];
          if (xc != Scalar(0)) value -= e->second * xc;
        }
        x[static_cast<std::size_t>(it->first)] = value;
      }
      SparseRow<Scalar> v;
      for (int c = 0; c < columns_; ++c) {
        if (x[static_cast<std::size_t>(c)] != Scalar(0)) v.emplace_back(c, x[static_cast<std::size_t>(c)]);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void reduce(SparseRow<Scalar>& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return;
      const Scalar factor = row.front().second;
      row = axpy(row, it->second, factor);
    }
  }

  // row - factor * pivot, merged by column
  static SparseRow<Scalar> axpy(const SparseRow<Scalar>& row, const SparseRow<Scalar>& pivot, const Scalar& factor) {
    SparseRow<Scalar> out;
    out.reserve(row.size() + pivot.size());
    auto r = row.begin();
    auto p = pivot.begin();
    while (r != row.end() || p != pivot.end()) {
      if (p == pivot.end() || (r != row.end() && r->first < p->first)) {
        out.push_back(*r++);
      } else if (r == row.end() || p->first < r->first) {
        out.emplace_back(p->first, -(factor * p->second));
        ++p;
      } else {
        Scalar v = r->second - factor * p->second;
        if (v != Scalar(0)) out.emplace_back(r->first, std::move(v));
        ++r;
        ++p;
      }
    }
    return out;
  }

  int columns_;
  std::map<int, SparseRow<Scalar>> pivots_;
};

template <typename Derived>
SparseRow<typename Derived::Scalar> sparse_row(const Eigen::MatrixBase<Derived>& row) {
  using Scalar = typename Derived::Scalar;
  SparseRow<Scalar> out;
  for (Eigen::Index c = 0; c < row.size(); ++c) {
    if (row(c) != Scalar(0)) out.emplace_back(static_cast<int>(c), row(c));
  }
  return out;
}

/// Exact rank of a dense matrix.
template <typename Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& m) {
  SparseEchelon<typename Derived::Scalar> echelon(static_cast<int>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) echelon.insert(sparse_row(m.row(r)));
  return echelon.rank();
}

/// Columns span the exact right nullspace of m.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_nullspace(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  SparseEchelon<Scalar> echelon(static_cast<int>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) echelon.insert(sparse_row(m.row(r)));
  const auto basis = echelon.nullspace();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(m.cols(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (const auto& [c, v] : basis[k]) out(c, static_cast<Eigen::Index>(k)) = v;
  }
  return out;
}

/// Rank of a family of equally-sized matrices viewed as vectors.
template <typename Matrix>
int span_rank(const std::vector<Matrix>& family) {
  if (family.empty()) return 0;
  using Scalar = typename Matrix::Scalar;
  SparseEchelon<Scalar> echelon(static_cast<int>(family.front().size()));
  for (const auto& m : family) {
    SparseRow<Scalar> row;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (m(r, c) != Scalar(0)) row.emplace_back(static_cast<int>(r * m.cols() + c), m(r, c));
      }
    }
    echelon.insert(std::move(row));
  }
  return echelon.rank();
}

}  // namespace contact
