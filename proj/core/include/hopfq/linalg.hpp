#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopfq/series.hpp"

namespace hopfq {

/// Sparse vector: sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;
using Matrix = std::vector<std::vector<Scalar>>;

/// a + c*b on sparse vectors.
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec scale(const SparseVec& a, const Scalar& c);
SparseVec to_sparse(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const SparseVec& v, std::size_t dim);

/// Incremental row echelon form over Scalar. Pivots are always units, so
/// for hbar-series scalars only rows with an invertible entry can be added.
/// Each stored row remembers which inserted rows it combines, so membership
/// queries can return an explicit combination.
class RowEchelon {
 public:
  /// Inserts a row and returns true if it increased the rank. The row is
  /// identified by `tag` in later combinations.
  bool insert(const SparseVec& row, std::uint32_t tag);

  /// Reduces v against the stored rows. On return, `combination` (if given)
  /// holds coefficients c_t with v - remainder = sum c_t * row_t.
  SparseVec reduce(SparseVec v, SparseVec* combination = nullptr) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::optional<SparseVec> solve(const SparseVec& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::vector<std::uint32_t> pivots() const;

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  std::map<std::uint32_t, Row> rows_;  // pivot column -> row with pivot 1
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols);
/// Some x with m x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
std::optional<Matrix> inverse(const Matrix& m);
Matrix identity_matrix(std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace hopfq
