#pragma once

#include <string>

#include "lieext/cocycle.hpp"
#include "lieext/series.hpp"

namespace lieext {

namespace detail {

// Rows of the cocycle identity
//   psi(x,[y,z]) + psi(z,[x,y]) + psi(y,[z,x])
//     + theta(x) psi(y,z) + theta(z) psi(x,y) + theta(y) psi(z,x) = 0
// over basis triples, in flattened pair coordinates.
inline Echelon cocycle_system(const LieAlgebra& L, const Vector& theta) {
  const std::size_t d = L.dim();
  Echelon e(pair_count(d));
  std::map<std::size_t, Scalar> row;
  auto put = [&](std::size_t a, std::size_t b, const Scalar& c) {  // c * psi(e_a, e_b)
    if (a == b || is_zero(c)) return;
    if (a < b)
      row[pair_index(d, a, b)] += c;
    else
      row[pair_index(d, b, a)] -= c;
  };
  auto put_bracket = [&](std::size_t a, std::size_t b, std::size_t c) {  // psi(e_a, [e_b, e_c])
    for (const auto& t : L.bracket_basis(b, c)) put(a, t.k, t.coeff);
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = y + 1; z < d; ++z) {
        row.clear();
        put_bracket(x, y, z);
        put_bracket(z, x, y);
        put_bracket(y, z, x);
        put(y, z, theta[x]);
        put(x, y, theta[z]);
        put(z, x, theta[y]);
        SparseRow r;
        for (auto& [c, v] : row)
          if (!is_zero(v)) r.emplace_back(c, v);
        if (!r.empty()) e.insert(std::move(r));
      }
  return e;
}

// df(x,y) = f([x,y]) + theta(y) f(x) - theta(x) f(y), f running over the dual basis
inline Subspace coboundary_span(const LieAlgebra& L, const Vector& theta) {
  const std::size_t d = L.dim();
  Echelon e(pair_count(d));
  for (std::size_t m = 0; m < d; ++m) {
    Vector v = zero_vector(pair_count(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        Scalar s = 0;
        for (const auto& t : L.bracket_basis(i, j))
          if (t.k == m) s += t.coeff;
        if (i == m) s += theta[j];
        if (j == m) s -= theta[i];
        v[pair_index(d, i, j)] = s;
      }
    e.insert(v);
  }
  return Subspace::from_echelon(e);
}

}  // namespace detail

inline Subspace central_cocycles(const LieAlgebra& N) { return kernel_basis(detail::cocycle_system(N, zero_vector(N.dim()))); }

inline Subspace central_coboundaries(const LieAlgebra& N) { return detail::coboundary_span(N, zero_vector(N.dim())); }

inline QuotientSpace central_h2(const LieAlgebra& N) { return quotient_basis(central_cocycles(N), central_coboundaries(N)); }

// theta must vanish on the nilradical and on [L,L].
inline void validate_weight(const LieAlgebra& L, const WeightAction& theta) {
  if (theta.weights.size() != L.dim()) throw Error(Errc::InvalidWeight, "weight vector has wrong length");
  if (theta.is_zero()) return;
  Subspace derived = bracket_span(L, Subspace::whole(L.dim()), Subspace::whole(L.dim()));
  for (const auto& v : derived.vectors())
    if (!is_zero(theta(v))) throw Error(Errc::InvalidWeight, "weight does not vanish on [L,L]");
  Subspace nil = nilradical_solvable(L);
  for (const auto& v : nil.vectors())
    if (!is_zero(theta(v))) throw Error(Errc::InvalidWeight, "weight does not vanish on the nilradical");
}

inline Subspace twisted_cocycles(const LieAlgebra& L, const WeightAction& theta) {
  validate_weight(L, theta);
  return kernel_basis(detail::cocycle_system(L, theta.weights));
}

inline Subspace twisted_coboundaries(const LieAlgebra& L, const WeightAction& theta) {
  validate_weight(L, theta);
  return detail::coboundary_span(L, theta.weights);
}

inline QuotientSpace twisted_h2(const LieAlgebra& L, const WeightAction& theta) {
  return quotient_basis(twisted_cocycles(L, theta), twisted_coboundaries(L, theta));
}

inline bool is_cocycle(const Cocycle& psi, const Subspace& z) {
  for (std::size_t c = 0; c < psi.components(); ++c)
    if (!z.contains(psi.flat(c))) return false;
  return true;
}

// {x : psi_c(x, N) = 0 for every component c}
inline Subspace annihilator(const LieAlgebra& N, const Cocycle& psi) {
  const std::size_t d = N.dim();
  if (psi.dim() != d) throw Error(Errc::DimensionMismatch, "annihilator");
  Echelon e(d);
  for (std::size_t c = 0; c < psi.components(); ++c)
    for (std::size_t j = 0; j < d; ++j) {
      Vector row = zero_vector(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = psi.at(i, j, c);
      e.insert(row);
    }
  return kernel_basis(e);
}

inline bool t1_condition(const LieAlgebra& N, const Cocycle& psi) {
  return subspace_intersect(annihilator(N, psi), center(N)).dim() == 0;
}

// psi^0 in the coordinates of nil's RREF basis
inline Cocycle restrict_to_nilradical(const LieAlgebra& L, const Cocycle& psi, const Subspace& nil) {
  if (psi.dim() != L.dim() || nil.ambient() != L.dim()) throw Error(Errc::DimensionMismatch, "restrict_to_nilradical");
  auto b = nil.vectors();
  Cocycle r(nil.dim(), psi.components());
  for (std::size_t c = 0; c < psi.components(); ++c)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Scalar v = psi.eval(b[i], b[j], c);
        if (!is_zero(v)) r.add(i, j, v, c);
      }
  return r;
}

}  // namespace lieext
