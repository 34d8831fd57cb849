#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "eala/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<eala::Scalar> : GenericNumTraits<eala::Scalar> {
  using Real = eala::Scalar;
  using NonInteger = eala::Scalar;
  using Literal = eala::Scalar;
  using Nested = eala::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace eala {

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using DenseVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<Scalar>;
using Vector = DenseVector<Scalar>;

namespace detail {
template <typename T>
bool is_zero_value(const T& x) {
  return x == T(0);
}
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }
}  // namespace detail

/// Reduced row echelon form over an exact field. Pivots are chosen as the
/// first nonzero entry in row order, so results are reproducible.
template <typename T>
struct RowEchelon {
  DenseMatrix<T> matrix;
  std::vector<Eigen::Index> pivot_columns;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

template <typename T>
RowEchelon<T> row_reduce(DenseMatrix<T> m) {
  RowEchelon<T> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!detail::is_zero_value(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const T inv = T(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c)
      if (!detail::is_zero_value(m(row, c))) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || detail::is_zero_value(m(r, col))) continue;
      const T f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (!detail::is_zero_value(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  return row_reduce<T>(DenseMatrix<T>(m)).rank();
}

/// A solution of a * x = b, free variables set to zero; nullopt if inconsistent.
template <typename T>
std::optional<DenseVector<T>> solve_exact(const DenseMatrix<T>& a, const DenseVector<T>& b) {
  DenseMatrix<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  RowEchelon<T> re = row_reduce<T>(std::move(aug));
  DenseVector<T> x = DenseVector<T>::Constant(a.cols(), T(0));
  for (Eigen::Index r = 0; r < re.rank(); ++r) {
    const Eigen::Index c = re.pivot_columns[static_cast<std::size_t>(r)];
    if (c == a.cols()) return std::nullopt;
    x(c) = re.matrix(r, a.cols());
  }
  return x;
}

/// Incrementally maintained echelon basis of sparse vectors indexed by
/// std::size_t coordinates. Used when the ambient coordinate set grows.
template <typename T>
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, T>;

  /// Reduces v against the stored rows; returns true (and stores the
  /// remainder) if v was independent.
  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    const std::size_t pivot = v.begin()->first;
    const T inv = T(1) / v.begin()->second;
    for (auto& [k, x] : v) x = x * inv;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Row v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Row& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const T f = it->second;
      const std::size_t pivot = it->first;
      for (const auto& [k, x] : row->second) {
        auto [slot, fresh] = v.try_emplace(k, T(0));
        slot->second = slot->second - f * x;
        if (detail::is_zero_value(slot->second)) v.erase(slot);
      }
      it = v.upper_bound(pivot);
    }
  }

  std::map<std::size_t, Row> rows_;
};

}  // namespace eala
