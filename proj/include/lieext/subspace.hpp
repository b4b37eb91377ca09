#pragma once

#include <optional>
#include <vector>

#include "lieext/matrix.hpp"

namespace lieext {

// A subspace of Q^ambient held as its unique RREF basis, so equality of
// subspaces is equality of stored matrices.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Echelon e(ambient);
    for (const auto& v : vectors) e.insert(v);
    return from_echelon(e);
  }

  static Subspace whole(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  static Subspace from_echelon(const Echelon& e) {
    Subspace s(e.cols());
    auto rows = e.reduced_rows();
    s.basis_ = Matrix(rows.size(), e.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, x] : rows[i]) s.basis_(i, c) = x;
    s.pivots_ = e.pivots();
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const { return basis_.row_list(); }

  // With an RREF basis the coordinates can be read off the pivot columns.
  std::optional<Vector> coords(const Vector& v) const {
    if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "member_coords: wrong length");
    Vector c(dim());
    Vector rest = v;
    for (std::size_t r = 0; r < dim(); ++r) {
      c[r] = v[pivots_[r]];
      if (is_zero(c[r])) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_zero(basis_(r, j))) rest[j] -= c[r] * basis_(r, j);
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
  }

  bool contains(const Vector& v) const { return coords(v).has_value(); }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(Errc::AmbientMismatch, "containment");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline std::optional<Vector> member_coords(const Vector& v, const Subspace& s) { return s.coords(v); }

// Right null space of m.
inline Subspace kernel_basis(const Matrix& m) {
  auto r = rref(m);
  std::vector<bool> pivot(m.cols(), false);
  for (auto p : r.pivots) pivot[p] = true;
  std::vector<Vector> ker;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    ker.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), ker);
}

// Same, for systems assembled row by row in sparse form.
inline Subspace kernel_basis(const Echelon& e) {
  auto rows = e.reduced_rows();
  auto piv = e.pivots();
  std::vector<bool> pivot(e.cols(), false);
  for (auto p : piv) pivot[p] = true;
  std::vector<Vector> ker;
  for (std::size_t f = 0; f < e.cols(); ++f) {
    if (pivot[f]) continue;
    Vector v = zero_vector(e.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, x] : rows[i])
        if (c == f) v[piv[i]] = -x;
    ker.push_back(std::move(v));
  }
  return Subspace::span(e.cols(), ker);
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(Errc::AmbientMismatch, "subspace_sum");
  auto v = a.vectors();
  auto w = b.vectors();
  v.insert(v.end(), w.begin(), w.end());
  return Subspace::span(a.ambient(), v);
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(Errc::AmbientMismatch, "subspace_intersect");
  // x in b iff x is orthogonal to null(b.basis); solve for combinations of a's rows.
  Subspace perp = kernel_basis(b.basis());
  Matrix m(perp.dim(), a.dim());
  for (std::size_t s = 0; s < perp.dim(); ++s) {
    Vector w = perp.vector(s);
    for (std::size_t r = 0; r < a.dim(); ++r) m(s, r) = dot(a.vector(r), w);
  }
  Subspace coeffs = kernel_basis(m);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    Vector c = coeffs.vector(i);
    Vector x = zero_vector(a.ambient());
    for (std::size_t r = 0; r < a.dim(); ++r)
      if (!is_zero(c[r])) x = x + c[r] * a.vector(r);
    out.push_back(std::move(x));
  }
  return Subspace::span(a.ambient(), out);
}

struct QuotientSpace {
  Subspace total;
  Subspace sub;
  std::vector<Vector> coset_reps;
  std::size_t dim() const { return coset_reps.size(); }
};

// Greedy extension of sub's basis by total's RREF rows, in order.
inline QuotientSpace quotient_basis(const Subspace& total, const Subspace& sub) {
  if (total.ambient() != sub.ambient()) throw Error(Errc::AmbientMismatch, "quotient_basis");
  if (!total.contains(sub)) throw Error(Errc::NotASubspace, "quotient_basis: sub is not contained in total");
  Echelon e(total.ambient());
  for (std::size_t i = 0; i < sub.dim(); ++i) e.insert(sub.vector(i));
  QuotientSpace q{total, sub, {}};
  for (std::size_t i = 0; i < total.dim(); ++i) {
    Vector v = total.vector(i);
    if (e.insert(v)) q.coset_reps.push_back(std::move(v));
  }
  return q;
}

}  // namespace lieext
