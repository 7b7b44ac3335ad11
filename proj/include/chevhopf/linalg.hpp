#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chevhopf/errors.hpp"

namespace chevhopf {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::InvalidInput, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<F> column(std::size_t c) const {
    std::vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const noexcept { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::InvalidInput, "matrix-vector shape mismatch");
    std::vector<F> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// In-place reduced row echelon form; pivots are normalized to 1.
/// Returns the pivot columns in order.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

/// Basis of the right null space {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "solve: rhs size mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidInput, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const F factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

/// Subspace of F^n held as a reduced echelon basis, so equal subspaces have
/// identical representations.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
    Matrix<F> m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw Error(ErrorCode::InvalidInput, "subspace vector size mismatch");
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    return from_matrix(std::move(m));
  }

  static Subspace whole(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<F>::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  static Subspace from_matrix(Matrix<F> m) {
    Subspace s(m.cols());
    s.pivots_ = row_reduce(m);
    Matrix<F> b(s.pivots_.size(), m.cols());
    for (std::size_t i = 0; i < s.pivots_.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const Matrix<F>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<F> vector(std::size_t i) const { return basis_.row(i); }
  std::vector<std::vector<F>> vectors() const {
    std::vector<std::vector<F>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Coordinates of v in the echelon basis, or nullopt if v is not in the span.
  std::optional<std::vector<F>> coordinates(const std::vector<F>& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::InvalidInput, "subspace membership: size mismatch");
    std::vector<F> coords(dim());
    std::vector<F> rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const F c = rest[pivots_[i]];
      coords[i] = c;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_(i, j).is_zero()) rest[j] -= c * basis_(i, j);
    }
    for (const auto& x : rest)
      if (!x.is_zero()) return std::nullopt;
    return coords;
  }

  bool contains(const std::vector<F>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  Subspace join(const Subspace& other) const {
    auto vs = vectors();
    auto ws = other.vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(ambient_, vs);
  }

  /// Basis of the linear functionals vanishing on this subspace.
  std::vector<std::vector<F>> annihilator() const { return nullspace(basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown basis kept fully reduced at its pivots; cheaper than
/// rebuilding an echelon form after every insertion.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }

  /// Remainder of v after elimination against the current basis.
  std::vector<F> reduce(std::vector<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const F c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    for (const auto& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds v; returns false if it was already in the span.
  bool add(const std::vector<F>& v) {
    if (v.size() != ambient_) throw Error(ErrorCode::InvalidInput, "echelon basis: size mismatch");
    std::vector<F> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const F inv = F(1) / r[p];
    for (auto& x : r)
      if (!x.is_zero()) x = x * inv;
    for (auto& row : rows_) {
      const F c = row[p];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!r[j].is_zero()) row[j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<std::vector<F>>& vectors() const noexcept { return rows_; }
  Subspace<F> subspace() const { return Subspace<F>::span(ambient_, rows_); }

 private:
  std::size_t ambient_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace chevhopf
