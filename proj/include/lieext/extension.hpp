#pragma once

#include <algorithm>
#include <optional>
#include <regex>

#include "lieext/cohomology.hpp"

namespace lieext {

struct ExtensionSpec {
  LieAlgebra base;
  Cocycle psi;
  std::optional<WeightAction> theta;  // absent means central
};

namespace detail {
// e_{m+1}, e_{m+2}, ... continuing the numbering of the e-labels already present
inline std::vector<std::string> new_labels(const std::vector<std::string>& old, std::size_t count) {
  static const std::regex e_label("e[0-9]+");
  std::size_t es = 0;
  for (const auto& l : old)
    if (std::regex_match(l, e_label)) ++es;
  std::vector<std::string> out;
  for (std::size_t t = 0; t < count; ++t) {
    std::string l = "e" + std::to_string(es + 1 + t);
    while (std::find(old.begin(), old.end(), l) != old.end()) l += "'";
    out.push_back(l);
  }
  return out;
}
}  // namespace detail

// [x+u, y+v] = [x,y] + psi(x,y); the s new generators are appended.
inline LieAlgebra central_extend(const LieAlgebra& N, const Cocycle& psi) {
  if (psi.dim() != N.dim()) throw Error(Errc::DimensionMismatch, "central_extend");
  if (!is_cocycle(psi, central_cocycles(N))) throw Error(Errc::NotACocycle, "central_extend: psi is not a 2-cocycle");
  const std::size_t d = N.dim(), s = psi.components();
  BracketTable t(d + s);
  for (const auto& [ij, terms] : N.entries()) t.add(ij.first, ij.second, terms);
  for (std::size_t c = 0; c < s; ++c)
    for (const auto& [i, j] : pair_list(d)) {
      Scalar v = psi.at(i, j, c);
      if (!is_zero(v)) t.add(i, j, d + c, v);
    }
  auto labels = N.labels();
  auto extra = detail::new_labels(labels, s);
  labels.insert(labels.end(), extra.begin(), extra.end());
  return LieAlgebra(labels, t);
}

// [x+u, y+v] = [x,y] + psi(x,y) + theta(x)v - theta(y)u
inline LieAlgebra solvable_extend(const LieAlgebra& L, const WeightAction& theta, const Cocycle& psi) {
  if (psi.dim() != L.dim() || psi.components() != 1) throw Error(Errc::DimensionMismatch, "solvable_extend");
  if (!is_cocycle(psi, twisted_cocycles(L, theta)))
    throw Error(Errc::NotACocycle, "solvable_extend: psi is not a twisted 2-cocycle");
  const std::size_t d = L.dim();
  BracketTable t(d + 1);
  for (const auto& [ij, terms] : L.entries()) t.add(ij.first, ij.second, terms);
  for (const auto& [i, j] : pair_list(d)) {
    Scalar v = psi.at(i, j);
    if (!is_zero(v)) t.add(i, j, d, v);
  }
  for (std::size_t i = 0; i < d; ++i)
    if (!is_zero(theta.weights[i])) t.add(i, d, d, theta.weights[i]);  // [e_i, e_new] = theta(e_i) e_new
  auto labels = L.labels();
  labels.push_back(detail::new_labels(labels, 1).front());
  LieAlgebra out(labels, t);
  if (!jacobi_violations(out).empty()) throw Error(Errc::InternalCheckFailed, "solvable_extend: result violates Jacobi");
  return out;
}

inline LieAlgebra extend(const ExtensionSpec& spec) {
  if (spec.theta) return solvable_extend(spec.base, *spec.theta, spec.psi);
  return central_extend(spec.base, spec.psi);
}

// Embeds a subspace of L into L (+) span{e_new}.
inline Subspace embed_with_new_line(const Subspace& s, std::size_t d) {
  std::vector<Vector> v;
  for (auto x : s.vectors()) {
    x.push_back(0);
    v.push_back(std::move(x));
  }
  v.push_back(unit_vector(d + 1, d));
  return Subspace::span(d + 1, v);
}

inline bool nilradical_is_central_ext(const LieAlgebra& Ltilde, const LieAlgebra& L, const WeightAction& theta) {
  if (Ltilde.dim() != L.dim() + 1) throw Error(Errc::DimensionMismatch, "nilradical_is_central_ext");
  Subspace nil = nilradical_solvable(L);
  bool ker_contains_nil = true;
  for (const auto& v : nil.vectors())
    if (!is_zero(theta(v))) ker_contains_nil = false;
  bool direct = nilradical_solvable(Ltilde) == embed_with_new_line(nil, L.dim());
  return direct && ker_contains_nil;
}

struct Theorem1Conditions {
  bool cond1 = false;
  bool cond2 = false;
};

// nil must be the nilradical of L; callers looping over many cocycles pass it in once
inline Theorem1Conditions theorem1_conditions(const LieAlgebra& L, const WeightAction& theta, const Cocycle& psi, const Subspace& nil) {
  Theorem1Conditions r;
  r.cond1 = !(psi.is_zero() && theta.is_zero());
  LieAlgebra N = subalgebra(L, nil);
  r.cond2 = t1_condition(N, restrict_to_nilradical(L, psi, nil));
  return r;
}

inline Theorem1Conditions theorem1_conditions(const LieAlgebra& L, const WeightAction& theta, const Cocycle& psi) {
  return theorem1_conditions(L, theta, psi, nilradical_solvable(L));
}

}  // namespace lieext
