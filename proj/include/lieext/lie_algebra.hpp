#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieext/subspace.hpp"

namespace lieext {

struct Term {
  Scalar coeff;
  std::size_t k;
  friend bool operator==(const Term&, const Term&) = default;
};

using Terms = std::vector<Term>;  // sorted by k, nonzero coefficients

// Accumulates brackets before an algebra is frozen. set() takes either
// order of (i,j) and stores the antisymmetric mirror implicitly.
class BracketTable {
 public:
  explicit BracketTable(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(Errc::DimensionMismatch, "bracket index out of range");
    if (i == j) {
      if (!is_zero(c)) throw Error(Errc::BadParams, "diagonal bracket must vanish");
      return;
    }
    Scalar v = c;
    if (i > j) std::swap(i, j), v = -v;
    Scalar& slot = entries_[{i, j}][k];
    slot += v;
  }

  void add(std::size_t i, std::size_t j, const Terms& terms) {
    for (const auto& t : terms) add(i, j, t.k, t.coeff);
  }

  const std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> entries_;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;

  LieAlgebra(std::vector<std::string> labels, const BracketTable& table)
      : dim_(labels.size()), labels_(std::move(labels)), table_(dim_ * dim_) {
    if (table.dim() != dim_) throw Error(Errc::DimensionMismatch, "labels vs bracket table");
    for (const auto& [ij, col] : table.entries()) {
      Terms t;
      for (const auto& [k, c] : col)
        if (!is_zero(c)) t.push_back({c, k});
      if (t.empty()) continue;
      auto [i, j] = ij;
      Terms neg = t;
      for (auto& x : neg) x.coeff = -x.coeff;
      table_[i * dim_ + j] = std::move(t);
      table_[j * dim_ + i] = std::move(neg);
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (labels_[i] == label) return i;
    throw Error(Errc::BadParams, "unknown basis label '" + label + "'");
  }

  const Terms& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vector bracket_basis_vector(std::size_t i, std::size_t j) const {
    Vector v = zero_vector(dim_);
    for (const auto& t : bracket_basis(i, j)) v[t.k] = t.coeff;
    return v;
  }

  // Nonzero brackets with i<j, in lexicographic order.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Terms>> entries() const {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Terms>> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!table_[i * dim_ + j].empty()) out.push_back({{i, j}, table_[i * dim_ + j]});
    return out;
  }

  Vector bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw Error(Errc::DimensionMismatch, "bracket: vector length");
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || is_zero(v[j])) continue;
        const auto& t = bracket_basis(i, j);
        if (t.empty()) continue;
        Scalar uv = u[i] * v[j];
        for (const auto& term : t) out[term.k] += uv * term.coeff;
      }
    }
    return out;
  }

  // Column j holds [x, e_j].
  Matrix ad(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& t : bracket_basis(i, j)) m(t.k, j) += x[i] * t.coeff;
    }
    return m;
  }

  Matrix ad(std::size_t i) const { return ad(unit_vector(dim_, i)); }

  BracketTable to_table() const {
    BracketTable t(dim_);
    for (const auto& [ij, terms] : entries()) t.add(ij.first, ij.second, terms);
    return t;
  }

  friend bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Terms> table_;  // dim*dim, full antisymmetric table
};

inline std::vector<std::string> indexed_labels(const std::string& stem, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

inline std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<JacobiViolation> bad;
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], expanded on the sparse table
  auto accumulate = [&](Vector& r, std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& t : L.bracket_basis(a, b))
      for (const auto& s : L.bracket_basis(t.k, c)) r[s.k] += t.coeff * s.coeff;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = zero_vector(n);
        accumulate(r, i, j, k);
        accumulate(r, j, k, i);
        accumulate(r, k, i, j);
        if (!is_zero(r)) bad.push_back({i, j, k, std::move(r)});
      }
  return bad;
}

inline bool structure_equal(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "structure_equal: dimensions differ");
  return same_structure(a, b);
}

// p's columns are the new basis vectors written in the old basis.
inline LieAlgebra change_basis(const LieAlgebra& L, const Matrix& p, std::vector<std::string> labels = {}) {
  const std::size_t n = L.dim();
  if (p.rows() != n || p.cols() != n) throw Error(Errc::DimensionMismatch, "change_basis: matrix size");
  auto inv = inverse(p);
  if (!inv) throw Error(Errc::Singular, "change_basis: matrix is singular");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
  BracketTable t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector w = inv->apply(L.bracket(cols[i], cols[j]));
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(w[k])) t.add(i, j, k, w[k]);
    }
  return LieAlgebra(labels.empty() ? L.labels() : std::move(labels), t);
}

}  // namespace lieext
