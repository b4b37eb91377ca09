#pragma once

#include <string>
#include <vector>

#include "lieext/lie_algebra.hpp"

namespace lieext {

enum class SeriesKind { Derived, LowerCentral };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;  // terms[0] is L itself
  bool stabilized = false;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
  }
  const Subspace& last() const { return terms.back(); }
};

// span{[u, v] : u in a, v in b}
inline Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  Echelon e(L.dim());
  auto av = a.vectors();
  auto bv = b.vectors();
  for (const auto& u : av)
    for (const auto& v : bv) e.insert(L.bracket(u, v));
  return Subspace::from_echelon(e);
}

namespace detail {
inline SeriesReport run_series(const LieAlgebra& L, SeriesKind kind) {
  SeriesReport r{kind, {Subspace::whole(L.dim())}, false};
  const Subspace all = Subspace::whole(L.dim());
  for (std::size_t it = 0; it <= L.dim() + 1; ++it) {
    const Subspace& prev = r.terms.back();
    Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(L, prev, all) : bracket_span(L, prev, prev);
    if (next == prev) {
      r.stabilized = true;
      break;
    }
    r.terms.push_back(std::move(next));
  }
  return r;
}
}  // namespace detail

inline SeriesReport lower_central_series(const LieAlgebra& L) { return detail::run_series(L, SeriesKind::LowerCentral); }
inline SeriesReport derived_series(const LieAlgebra& L) { return detail::run_series(L, SeriesKind::Derived); }

inline Subspace center(const LieAlgebra& L) {
  // x central iff [x, e_i] = 0 for all i: stack the maps x -> [x, e_i].
  const std::size_t n = L.dim();
  Echelon e(n);
  for (std::size_t i = 0; i < n; ++i) {
    // row (i,k): sum_j x_j c_{j i}^k
    std::vector<Vector> rows(n, zero_vector(n));
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : L.bracket_basis(j, i)) rows[t.k][j] += t.coeff;
    for (auto& r : rows) e.insert(r);
  }
  return kernel_basis(e);
}

inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).last().dim() == 0; }
inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).last().dim() == 0; }

inline bool is_filiform(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (n < 3) return false;
  auto dims = lower_central_series(L).dims();
  // L^1 = L, then dim L^i = n - i for 2 <= i <= n
  if (dims.size() != n) return false;
  for (std::size_t i = 2; i <= n; ++i)
    if (dims[i - 1] != n - i) return false;
  return true;
}

// The subalgebra spanned by s, written in the RREF basis of s.
inline LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& s, std::vector<std::string> labels = {}) {
  const std::size_t m = s.dim();
  auto basis = s.vectors();
  BracketTable t(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto c = s.coords(L.bracket(basis[i], basis[j]));
      if (!c) throw Error(Errc::BadParams, "subalgebra: subspace is not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero((*c)[k])) t.add(i, j, k, (*c)[k]);
    }
  if (labels.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      // reuse the original label when the basis vector is a unit vector
      auto v = basis[i];
      std::size_t nz = 0, at = 0;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) ++nz, at = k;
      labels.push_back(nz == 1 && v[at] == 1 ? L.label(at) : "n" + std::to_string(i + 1));
    }
  }
  return LieAlgebra(std::move(labels), t);
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  auto basis = s.vectors();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Vector e = unit_vector(L.dim(), i);
    for (const auto& v : basis)
      if (!s.contains(L.bracket(e, v))) return false;
  }
  return true;
}

namespace detail {
// {x : tr(ad x . ad(y)^m) = 0, m = 0..dim-1}; contains every ad-nilpotent x.
inline Subspace trace_annihilator(const LieAlgebra& L, const Vector& y) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(i));
  Matrix Y = L.ad(y);
  Matrix P = Matrix::identity(n);
  Matrix rows(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      Scalar tr = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!is_zero(ads[i](a, b)) && !is_zero(P(b, a))) tr += ads[i](a, b) * P(b, a);
      rows(m, i) = tr;
    }
    P = P * Y;
  }
  return kernel_basis(rows);
}
}  // namespace detail

// Nilradical of a solvable algebra. Over C the simultaneous weights of ad
// (Lie's theorem) vanish exactly on the nilradical; the trace conditions
// against a generic y recover those weights, and the candidate is then
// verified to be a nilpotent ideal before it is returned.
inline Subspace nilradical_solvable(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (!is_solvable(L)) throw Error(Errc::NotSolvable, "nilradical_solvable: algebra is not solvable");
  if (is_nilpotent(L)) return Subspace::whole(n);
  Subspace cand = Subspace::whole(n);
  for (std::size_t attempt = 0; attempt < 8; ++attempt) {
    Vector y = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = frac(static_cast<long>((i + 2) * (i + 3 + 5 * attempt) % 97 + 1), static_cast<long>(attempt + 1));
    if (attempt < n) y[attempt % n] += 101;
    cand = subspace_intersect(cand, detail::trace_annihilator(L, y));
    if (is_ideal(L, cand) && is_nilpotent(subalgebra(L, cand))) return cand;
  }
  throw Error(Errc::InternalCheckFailed, "nilradical_solvable: candidate failed the ideal/nilpotency check");
}

enum class FiliformType { TypeNN1, TypeQ };

inline const char* to_string(FiliformType t) { return t == FiliformType::TypeNN1 ? "TypeNN1" : "TypeQ"; }

}  // namespace lieext
