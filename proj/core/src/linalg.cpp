#include "hopfq/linalg.hpp"

#include "hopfq/error.hpp"

namespace hopfq {

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (c.is_zero() || b.empty()) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const SparseVec& a, const Scalar& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) {
    Scalar p = v * c;
    if (!p.is_zero()) out.emplace_back(i, std::move(p));
  }
  return out;
}

SparseVec to_sparse(const std::vector<Scalar>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  }
  return out;
}

std::vector<Scalar> to_dense(const SparseVec& v, std::size_t dim) {
  std::vector<Scalar> out(dim);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

SparseVec RowEchelon::reduce(SparseVec v, SparseVec* combination) const {
  if (combination) combination->clear();
  if (rows_.empty()) return v;
  std::vector<std::pair<const Row*, Scalar>> hits;
  for (const auto& [col, c] : v) {
    auto it = rows_.find(col);
    if (it != rows_.end()) hits.emplace_back(&it->second, c);
  }
  for (const auto& [row, c] : hits) {
    v = axpy(v, -c, row->v);
    if (combination) *combination = axpy(*combination, c, row->combo);
  }
  return v;
}

std::optional<SparseVec> RowEchelon::solve(const SparseVec& v) const {
  SparseVec combo;
  if (!reduce(v, &combo).empty()) return std::nullopt;
  return combo;
}

bool RowEchelon::insert(const SparseVec& row, std::uint32_t tag) {
  SparseVec combo;
  SparseVec r = reduce(row, &combo);
  if (r.empty()) return false;
  // stored combination expresses the reduced row: r = row - sum(...)
  combo = axpy(SparseVec{{tag, Scalar(1)}}, Scalar(-1), combo);
  const std::pair<std::uint32_t, Scalar>* pivot = nullptr;
  for (const auto& e : r) {
    if (e.second.is_unit()) {
      pivot = &e;
      break;
    }
  }
  if (!pivot) raise(ErrorKind::NotInvertible, "row has no invertible entry to pivot on");
  const std::uint32_t col = pivot->first;
  const Scalar inv = series_invert(pivot->second);
  r = scale(r, inv);
  combo = scale(combo, inv);
  for (auto& [pc, other] : rows_) {
    for (const auto& [c, val] : other.v) {
      if (c == col) {
        const Scalar f = val;
        other.v = axpy(other.v, -f, r);
        other.combo = axpy(other.combo, -f, combo);
        break;
      }
      if (c > col) break;
    }
  }
  rows_.emplace(col, Row{std::move(r), std::move(combo)});
  return true;
}

std::vector<std::uint32_t> RowEchelon::pivots() const {
  std::vector<std::uint32_t> out;
  for (const auto& [c, row] : rows_) out.push_back(c);
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = m.size();
    bool nonzero = false;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      nonzero = true;
      if (m[i][c].is_unit()) {
        piv = i;
        break;
      }
    }
    if (piv == m.size()) {
      if (nonzero) raise(ErrorKind::NotInvertible, "column has no invertible pivot");
      continue;
    }
    std::swap(m[piv], m[r]);
    const Scalar inv = series_invert(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) {
      if (!m[r][k].is_zero()) m[r][k] = m[r][k] * inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols) {
  std::vector<std::vector<Scalar>> basis;
  const std::vector<std::size_t> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(cols);
    x[free] = Scalar(1);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const std::vector<std::size_t> piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<Scalar> x(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n);
    aug[i][n + i] = Scalar(1);
  }
  std::vector<std::size_t> piv;
  try {
    piv = rref(aug);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  }
  return out;
}

Matrix identity_matrix(std::size_t n) {
  Matrix out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Scalar(1);
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Matrix out(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

}  // namespace hopfq
