#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lieext/error.hpp"
#include "lieext/scalar.hpp"

namespace lieext {

using Vector = std::vector<Scalar>;
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by column, no zeros

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!lieext::is_zero(x)) return false;
  return true;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector add");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sub");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Scalar& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!lieext::is_zero(a[i]) && !lieext::is_zero(b[i])) s += a[i] * b[i];
  return s;
}

inline SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!lieext::is_zero(v[i])) r.emplace_back(i, v[i]);
  return r;
}

inline Vector to_dense(const SparseRow& r, std::size_t n) {
  Vector v = zero_vector(n);
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

// a + s*b
inline SparseRow axpy(const SparseRow& a, const Scalar& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar x = a[i].second + s * b[j].second;
      if (!lieext::is_zero(x)) out.emplace_back(a[i].first, std::move(x));
      ++i, ++j;
    }
  }
  return out;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(Errc::DimensionMismatch, "ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector");
    Vector out = zero_vector(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (lieext::is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!lieext::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (lieext::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!lieext::is_zero(b(k, j))) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!lieext::is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Row echelon basis grown one sparse row at a time. Every stored row has a
// leading 1; only leading terms are eliminated on insert, full reduction is
// deferred to reduced_rows().
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Leaves r with a leading column that is not a pivot (or empty).
  void reduce(SparseRow& r) const {
    while (!r.empty()) {
      auto it = rows_.find(r.front().first);
      if (it == rows_.end()) return;
      Scalar f = -r.front().second;
      r = axpy(r, f, it->second);
    }
  }

  bool contains(SparseRow r) const {
    reduce(r);
    return r.empty();
  }

  bool insert(SparseRow r) {
    reduce(r);
    if (r.empty()) return false;
    Scalar inv = Scalar(1) / r.front().second;
    for (auto& e : r) e.second *= inv;
    std::size_t p = r.front().first;
    rows_.emplace(p, std::move(r));
    return true;
  }

  bool insert(const Vector& v) {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "echelon insert");
    return insert(to_sparse(v));
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& kv : rows_) p.push_back(kv.first);
    return p;
  }

  // Fully reduced rows in increasing pivot order.
  std::vector<SparseRow> reduced_rows() const {
    std::map<std::size_t, SparseRow> done;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseRow row = it->second;
      std::vector<std::pair<std::size_t, Scalar>> hits;
      for (const auto& [c, x] : row)
        if (c != it->first && done.count(c)) hits.emplace_back(c, x);
      for (const auto& [c, x] : hits) row = axpy(row, -x, done.at(c));
      done.emplace(it->first, std::move(row));
    }
    std::vector<SparseRow> out;
    for (auto& kv : done) out.push_back(std::move(kv.second));
    return out;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;
};

struct RrefResult {
  Matrix reduced;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  auto rows = e.reduced_rows();
  RrefResult r{Matrix(rows.size(), m.cols()), e.pivots()};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, x] : rows[i]) r.reduced(i, c) = x;
  return r;
}

inline std::size_t rank(const Matrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(aug);
  if (r.pivots.size() != n || (n > 0 && r.pivots.back() != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// One solution of A x = b (free variables set to zero), if any.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "solve");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto r = rref(aug);
  Vector x = zero_vector(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, a.cols());
  }
  return x;
}

}  // namespace lieext
