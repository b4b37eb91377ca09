#pragma once

#include <vector>

#include "lieext/lie_algebra.hpp"

namespace lieext {

// Flattened coordinates of antisymmetric forms: pairs (i,j), i<j, in
// lexicographic order.
inline std::size_t pair_count(std::size_t dim) { return dim * (dim - (dim ? 1 : 0)) / 2; }

inline std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) p.emplace_back(i, j);
  return p;
}

class Cocycle {
 public:
  Cocycle() = default;
  explicit Cocycle(std::size_t dim, std::size_t s = 1) : dim_(dim), comps_(s, zero_vector(pair_count(dim))) {}

  static Cocycle from_flat(std::size_t dim, Vector flat) {
    if (flat.size() != pair_count(dim)) throw Error(Errc::DimensionMismatch, "cocycle: flat length");
    Cocycle c(dim, 1);
    c.comps_[0] = std::move(flat);
    return c;
  }

  static Cocycle from_components(std::size_t dim, std::vector<Vector> comps) {
    Cocycle c(dim, comps.size());
    for (std::size_t s = 0; s < comps.size(); ++s) {
      if (comps[s].size() != pair_count(dim)) throw Error(Errc::DimensionMismatch, "cocycle: flat length");
      c.comps_[s] = std::move(comps[s]);
    }
    return c;
  }

  std::size_t dim() const { return dim_; }
  std::size_t components() const { return comps_.size(); }
  const Vector& flat(std::size_t c = 0) const { return comps_.at(c); }

  Scalar at(std::size_t i, std::size_t j, std::size_t c = 0) const {
    if (i == j) return 0;
    if (i < j) return comps_.at(c)[pair_index(dim_, i, j)];
    return -comps_.at(c)[pair_index(dim_, j, i)];
  }

  // psi(e_i, e_j) += v, keeping antisymmetry
  void add(std::size_t i, std::size_t j, const Scalar& v, std::size_t c = 0) {
    if (i >= dim_ || j >= dim_) throw Error(Errc::DimensionMismatch, "cocycle index");
    if (i == j) return;
    if (i < j)
      comps_.at(c)[pair_index(dim_, i, j)] += v;
    else
      comps_.at(c)[pair_index(dim_, j, i)] -= v;
  }

  // psi(u, v) on vectors
  Scalar eval(const Vector& u, const Vector& v, std::size_t c = 0) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (lieext::is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || lieext::is_zero(v[j])) continue;
        Scalar a = at(i, j, c);
        if (!lieext::is_zero(a)) s += u[i] * v[j] * a;
      }
    }
    return s;
  }

  Matrix matrix(std::size_t c = 0) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = at(i, j, c);
    return m;
  }

  bool is_zero() const {
    for (const auto& v : comps_)
      if (!lieext::is_zero(v)) return false;
    return true;
  }

  friend Cocycle operator+(Cocycle a, const Cocycle& b) {
    a.check(b);
    for (std::size_t c = 0; c < a.comps_.size(); ++c) a.comps_[c] = a.comps_[c] + b.comps_[c];
    return a;
  }
  friend Cocycle operator-(Cocycle a, const Cocycle& b) {
    a.check(b);
    for (std::size_t c = 0; c < a.comps_.size(); ++c) a.comps_[c] = a.comps_[c] - b.comps_[c];
    return a;
  }
  friend Cocycle operator*(const Scalar& s, Cocycle a) {
    for (auto& v : a.comps_) v = s * std::move(v);
    return a;
  }
  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.dim_ == b.dim_ && a.comps_ == b.comps_; }

 private:
  void check(const Cocycle& b) const {
    if (dim_ != b.dim_ || comps_.size() != b.comps_.size()) throw Error(Errc::DimensionMismatch, "cocycle arithmetic");
  }
  std::size_t dim_ = 0;
  std::vector<Vector> comps_;
};

// Delta_{i,j}: psi(e_i, e_j) = 1, psi(e_j, e_i) = -1 (0-based indices)
inline Cocycle delta(std::size_t dim, std::size_t i, std::size_t j) {
  Cocycle c(dim);
  c.add(i, j, 1);
  return c;
}

struct WeightAction {
  Vector weights;  // theta(e_i), one scalar per basis element
  bool is_zero() const { return lieext::is_zero(weights); }
  Scalar operator()(const Vector& v) const { return dot(weights, v); }
};

inline WeightAction zero_weight(std::size_t dim) { return {zero_vector(dim)}; }

// Weight acting only on the leading outer generators (x, or x1, x2).
inline WeightAction outer_weight(std::size_t dim, const std::vector<Scalar>& outer) {
  WeightAction w{zero_vector(dim)};
  for (std::size_t i = 0; i < outer.size(); ++i) w.weights.at(i) = outer[i];
  return w;
}

}  // namespace lieext
