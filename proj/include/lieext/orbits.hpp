#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lieext/automorphism.hpp"
#include "lieext/cohomology.hpp"
#include "lieext/extension.hpp"

namespace lieext {

// ---- class and line equality modulo coboundaries

inline bool class_equal(const Cocycle& psi1, const Cocycle& psi2, const Subspace& B) {
  if (psi1.dim() != psi2.dim() || psi1.components() != 1 || psi2.components() != 1) return false;
  return B.contains((psi1 - psi2).flat());
}

inline bool line_equal(const Cocycle& psi1, const Cocycle& psi2, const Subspace& B) {
  if (psi1.dim() != psi2.dim() || psi1.components() != 1 || psi2.components() != 1) return false;
  bool p1 = B.contains(psi1.flat()), p2 = B.contains(psi2.flat());
  if (p2) return p1;
  if (p1) return false;
  auto gens = B.vectors();
  gens.push_back(psi2.flat());
  return Subspace::span(B.ambient(), gens).contains(psi1.flat());
}

// Coefficients c with psi - sum c_i gens_i in B, if they exist. Assumes gens independent modulo B.
inline std::optional<Vector> class_coordinates(const Cocycle& psi, const std::vector<Cocycle>& gens, const Subspace& B) {
  const std::size_t m = pair_count(psi.dim());
  std::vector<Vector> cols;
  for (const auto& g : gens) cols.push_back(g.flat());
  for (const auto& b : B.vectors()) cols.push_back(b);
  if (cols.empty()) return psi.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
  Matrix A = Matrix::from_columns(cols, m);
  if (A.rows() != m) throw Error(Errc::DimensionMismatch, "class_coordinates");
  auto x = solve(A, psi.flat());
  if (!x) return std::nullopt;
  return Vector(x->begin(), x->begin() + static_cast<long>(gens.size()));
}

// sum_{i=2}^{k} (-1)^i Delta(e_i, e_{2k+1-i}); e_i sits at index off + i - 1
inline Cocycle pairing_cocycle(std::size_t dim, std::size_t off, std::size_t k) {
  Cocycle c(dim);
  for (std::size_t i = 2; i <= k; ++i) c.add(off + i - 1, off + 2 * k - i, i % 2 ? Scalar(-1) : Scalar(1));
  return c;
}

// ---- representatives

enum class RepTag { Nabla1, Nabla1PlusK, NablaHalf, TwistedCase };

struct RepId {
  RepTag tag = RepTag::Nabla1;
  std::size_t k = 0;
  Family family = Family::NN1;
  std::string label;
  std::optional<Scalar> param;

  friend bool operator==(const RepId&, const RepId&) = default;
};

// the n_{n,1} representatives carry only a tag and k
inline RepId central_rep(RepTag t, std::size_t k = 0) {
  RepId r;
  r.tag = t;
  r.k = k;
  return r;
}

inline std::string to_string(const RepId& r) {
  switch (r.tag) {
    case RepTag::Nabla1: return "nabla1";
    case RepTag::Nabla1PlusK: return "nabla1+nabla" + std::to_string(r.k);
    case RepTag::NablaHalf: return "nabla_half";
    case RepTag::TwistedCase: break;
  }
  std::string s = to_string(r.family) + "/" + r.label;
  if (r.k) s += ":k=" + std::to_string(r.k);
  if (r.param) s += ":" + to_string(*r.param);
  return s;
}

// nabla_1 = Delta(e_n, e_1), nabla_k = sum_{i=2}^k (-1)^i Delta(e_i, e_{2k+1-i})
inline Cocycle nn1_nabla(std::size_t n, std::size_t j) {
  if (j == 1) return delta(n, n - 1, 0);
  return pairing_cocycle(n, 0, j);
}

inline std::size_t nn1_h2_dim(std::size_t n) { return (n + 1) / 2; }

inline std::vector<Cocycle> nn1_h2_basis(std::size_t n) {
  std::vector<Cocycle> b;
  for (std::size_t j = 1; j <= nn1_h2_dim(n); ++j) b.push_back(nn1_nabla(n, j));
  return b;
}

inline Cocycle nn1_representative(std::size_t n, const RepId& r) {
  switch (r.tag) {
    case RepTag::Nabla1: return nn1_nabla(n, 1);
    case RepTag::Nabla1PlusK: return nn1_nabla(n, 1) + nn1_nabla(n, r.k);
    case RepTag::NablaHalf:
      if (n % 2 == 0) break;
      return nn1_nabla(n, (n + 1) / 2);
    case RepTag::TwistedCase: break;
  }
  throw Error(Errc::BadParams, "no n_{n,1} representative " + to_string(r));
}

// the (n+1)-dimensional algebra the representative's central extension should be
inline CatalogId nn1_extension_target(std::size_t n, const RepId& r) {
  switch (r.tag) {
    case RepTag::Nabla1: return make_id(Family::NN1, n + 1);
    case RepTag::Nabla1PlusK: return make_id(Family::LK, n + 1, {Scalar(static_cast<long>(r.k))});
    case RepTag::NablaHalf: return make_id(Family::Q, n + 1);
    case RepTag::TwistedCase: break;
  }
  throw Error(Errc::BadParams, "no n_{n,1} extension for " + to_string(r));
}

struct Normalization {
  RepId rep;
  AutParams params;
};

namespace detail {

inline AutParams nn1_params(std::size_t n, const std::map<long, Scalar>& a, const std::map<long, Scalar>& b) {
  AutParams p{make_id(Family::NN1, n), {}};
  for (const auto& [i, v] : a)
    if (!is_zero(v) || i == 1) p.values["a" + std::to_string(i)] = v;
  for (const auto& [i, v] : b)
    if (!is_zero(v) || i == 2) p.values["b" + std::to_string(i)] = v;
  return p;
}

inline Scalar get(const std::map<long, Scalar>& m, long i) {
  auto it = m.find(i);
  return it == m.end() ? Scalar(0) : it->second;
}

// b_{2t} recursion that kills alpha_2..alpha_{k-1}; half selects the odd-n variant keyed on alpha_{(n+1)/2}
inline std::map<long, Scalar> nn1_b_recursion(long n, const std::map<long, Scalar>& al, long k, const Scalar& b2, bool half) {
  std::map<long, Scalar> b;
  b[2] = b2;
  const Scalar& ak = al.at(k);
  for (long t = 2; t < k && 2 * t <= n; ++t) {
    Scalar s1 = 0, s2 = 0, s3 = 0;
    if (!half) {
      for (long i = 2; i <= t + 1; ++i) s1 += sign_pow(i) * get(al, k - t - 1 + i) * get(b, i) * get(b, i);
      for (long j = k - t + 2; j <= k - 1; ++j)
        for (long i = 2; i <= j - k + t; ++i) s2 += sign_pow(i) * get(al, j) * get(b, i) * get(b, 2 * (j - k + t + 1) - i);
    } else {
      for (long i = 2; i <= t + 1; ++i) s1 += sign_pow(i) * get(al, (n - 1) / 2 - t + i) * get(b, i) * get(b, i);
      for (long j = (n + 5) / 2 - t; j <= (n - 1) / 2; ++j)
        for (long i = 2; i <= j + t - (n + 1) / 2; ++i) s2 += sign_pow(i) * get(al, j) * get(b, i) * get(b, 2 * (j + t) - n + 1 - i);
    }
    for (long i = 2; i <= t - 1; ++i) s3 += sign_pow(i) * get(b, i + 1) * get(b, 2 * t + 1 - i);
    b[2 * t] = -Scalar(1) / (2 * ak * b2) * (s1 + 2 * s2 - 2 * ak * s3);
  }
  return b;
}

}  // namespace detail

// alpha* coefficients of the pulled-back class, with the bounds exactly as displayed in the n_{n,1} classification proof
// (valid for automorphisms with a_i = 0 for i >= 3; in the even case also a_2 = 0). alpha is 1-based.
inline std::map<long, Scalar> nn1_transformed_coefficients(std::size_t n_, const std::map<long, Scalar>& al, const AutParams& p) {
  const long n = static_cast<long>(n_);
  const bool even = n % 2 == 0;
  const long H = even ? n / 2 : (n + 1) / 2;
  auto val = [&](const std::string& s, const Scalar& dflt) {
    auto it = p.values.find(s);
    return it == p.values.end() ? dflt : it->second;
  };
  Scalar a1 = val("a1", 1), a2 = val("a2", 0);
  std::map<long, Scalar> b;
  for (long i = 2; i <= n; ++i) b[i] = val("b" + std::to_string(i), i == 2 ? Scalar(1) : Scalar(0));
  using detail::get;
  std::map<long, Scalar> out;
  if (even) {
    out[1] = get(al, 1) * pow(a1, n - 1) * b[2];
  } else {
    out[1] = pow(a1, n - 2) * b[2] * (get(al, 1) * a1 - get(al, H) * a2);
    out[H] = get(al, H) * pow(a1, n - 2) * b[2] * b[2];
  }
  const long top = even ? H : (n - 1) / 2;
  for (long k = 2; k <= top; ++k) {
    Scalar s = 0, s2 = 0;
    for (long i = 2; i <= H + 2 - k; ++i) s += detail::sign_pow(i) * get(al, i - 2 + k) * get(b, i) * get(b, i);
    for (long j = k + 1; j <= H; ++j)
      for (long i = 1; i <= j - k; ++i)
        s2 += detail::sign_pow(i + 1) * get(al, j) * get(b, i + 1) * get(b, 2 * j - i - (2 * k - 3));
    out[k] = pow(a1, 2 * k - 3) * (s + 2 * s2);
  }
  return out;
}

// Carries the line <psi> to one of <nabla_1>, <nabla_1 + nabla_k>, <nabla_{(n+1)/2}>.
// The result is checked by pulling back before it is returned.
inline Normalization normalize_nn1_line(std::size_t n_, const Cocycle& psi) {
  const long n = static_cast<long>(n_);
  LieAlgebra N = make_catalog(make_id(Family::NN1, n_));
  if (psi.dim() != n_ || psi.components() != 1) throw Error(Errc::DimensionMismatch, "normalize_nn1_line");
  Subspace Z = central_cocycles(N);
  if (!Z.contains(psi.flat())) throw Error(Errc::NotACocycle, "normalize_nn1_line: psi is not a cocycle of n_{n,1}");
  if (!t1_condition(N, psi)) throw Error(Errc::NotNormalizable, "psi has an annihilator component in the center");
  Subspace B = central_coboundaries(N);
  auto c = class_coordinates(psi, nn1_h2_basis(n_), B);
  if (!c) throw Error(Errc::InternalCheckFailed, "class coordinates of a cocycle not found");
  std::map<long, Scalar> al;
  for (std::size_t j = 0; j < c->size(); ++j) al[static_cast<long>(j) + 1] = (*c)[j];

  const long H = (n + 1) / 2;
  const long top = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  Normalization r;
  std::map<long, Scalar> a{{1, Scalar(1)}};
  if (n % 2 == 1 && !is_zero(al[H])) {
    r.rep = central_rep(RepTag::NablaHalf);
    a[2] = al[1] / al[H];
    r.params = detail::nn1_params(n_, a, detail::nn1_b_recursion(n, al, H, Scalar(1), true));
  } else {
    long k = 0;
    for (long j = top; j >= 2; --j)
      if (!is_zero(al[j])) {
        k = j;
        break;
      }
    if (k == 0) {
      r.rep = central_rep(RepTag::Nabla1);
      r.params = detail::nn1_params(n_, a, {{2, Scalar(1)}});
    } else {
      r.rep = central_rep(RepTag::Nabla1PlusK, static_cast<std::size_t>(k));
      r.params = detail::nn1_params(n_, a, detail::nn1_b_recursion(n, al, k, al[1] / al[k], false));
    }
  }
  Cocycle moved = pullback(N, make_aut(N, r.params), psi);
  if (!line_equal(moved, nn1_representative(n_, r.rep), B))
    throw Error(Errc::InternalCheckFailed, "normalize_nn1_line: pulled-back class is not on " + to_string(r.rep));
  return r;
}

// ---- twisted (solvable) cases

struct NeedsRootExtension {
  std::string constraint;  // e.g. "b1^4 = 3"
  Scalar value;
  unsigned long degree = 0;
};

struct TwistedNormalization {
  RepId rep;
  AutParams params;
  Cocycle representative;
  CatalogId target;
  // columns: basis of the extension in which it matches the target table exactly
  std::optional<Matrix> target_basis;
};

using TwistedOutcome = std::variant<TwistedNormalization, NeedsRootExtension>;

namespace detail {

inline std::size_t e_offset(Family f) { return outer_count(f) - 1; }

inline Scalar outer_value(const CatalogId& id, const WeightAction& th, std::size_t i) {
  if (th.weights.size() != id.n + outer_count(id.family)) throw Error(Errc::DimensionMismatch, "weight size");
  return th.weights[i];
}

// the twisted case a weight falls in, together with the generators of H^2 in that case
struct TwistedSetup {
  std::string label;
  std::size_t k = 0;
  std::vector<Cocycle> gens;
};

inline std::optional<TwistedSetup> twisted_setup(const CatalogId& id, const WeightAction& th) {
  const long n = static_cast<long>(id.n);
  const std::size_t d = id.n + outer_count(id.family);
  const std::size_t off = e_offset(id.family);
  auto e = [&](long i) { return off + static_cast<std::size_t>(i); };
  auto top_pair = [&] { return pairing_cocycle(d, off + 1, static_cast<std::size_t>((n + 1) / 2)); };
  Cocycle dn1 = delta(d, e(n), e(1));
  const bool odd = n % 2 == 1;
  switch (id.family) {
    case Family::S1: {
      const Scalar& beta = id.params[0];
      Scalar g = outer_value(id, th, 0);
      if (odd && g == -1 && beta == frac(3 - n, 2)) return TwistedSetup{"tau2", 0, {delta(d, e(1), 0), top_pair()}};
      if (g == Scalar(1 - n) - beta) {
        Scalar kk = (Scalar(n + 2) - beta) / 2;
        if (kk.get_den() == 1 && kk >= 2 && kk <= Scalar((n + 1) / 2)) {
          std::size_t k = static_cast<std::size_t>(kk.get_num().get_si());
          return TwistedSetup{"case1", k, {dn1, pairing_cocycle(d, off + 1, k)}};
        }
        return TwistedSetup{"s1", 0, {dn1}};
      }
      if (odd && g == Scalar(2 - n) - 2 * beta && beta != 1 && g != -1) return TwistedSetup{"tau1", 0, {top_pair()}};
      return std::nullopt;
    }
    case Family::S2: {
      Scalar g = outer_value(id, th, 0);
      if (g == -1) return TwistedSetup{"gamma-1", 0, {delta(d, e(2), 0), dn1}};
      if (g == -2 && odd) {
        TwistedSetup s{"tau3", 0, {}};
        for (long k = 2; k <= (n + 1) / 2; ++k) s.gens.push_back(pairing_cocycle(d, off + 1, static_cast<std::size_t>(k)));
        return s;
      }
      return std::nullopt;
    }
    case Family::S3:
      if (outer_value(id, th, 0) == -n) return TwistedSetup{"s3", 0, {dn1}};
      return std::nullopt;
    case Family::S4: {
      Scalar g = outer_value(id, th, 0);
      auto alpha = [&](long l) { return (l >= 3 && l <= n - 1) ? id.params[static_cast<std::size_t>(l - 3)] : Scalar(0); };
      if (g == -1) {
        Cocycle second = dn1;
        for (long j = 3; j <= n - 1; ++j)
          if (!is_zero(alpha(n + 2 - j))) second.add(e(j), 0, alpha(n + 2 - j));
        return TwistedSetup{"s4", 0, {delta(d, e(2), 0), second}};
      }
      if (g == -2 && odd) {
        for (long l = 3; l <= n - 1; l += 2)
          if (!is_zero(alpha(l))) return std::nullopt;
        TwistedSetup s{"tau3", 0, {}};
        for (long k = 2; k <= (n + 1) / 2; ++k) s.gens.push_back(pairing_cocycle(d, off + 1, static_cast<std::size_t>(k)));
        return s;
      }
      return std::nullopt;
    }
    case Family::SN2: {
      Scalar a = outer_value(id, th, 0), b = outer_value(id, th, 1);
      if (a == 1 - n && b == -1) return TwistedSetup{"sn2", 0, {dn1}};
      if (odd && a == 2 - n && b == -2) return TwistedSetup{"tau22", 0, {top_pair()}};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// c_{2t} recursion killing every pairing coefficient except the top one (c_2 = 1); delta is 1-based
inline std::map<long, Scalar> pairing_c_recursion(long n, const std::map<long, Scalar>& dl) {
  const long m = (n - 1) / 2;
  std::map<long, Scalar> c{{2, Scalar(1)}};
  const Scalar& dm = dl.at(m);
  for (long t = 2; t <= m; ++t) {
    Scalar s1 = 0, s2 = 0, s3 = 0;
    for (long i = 1; i <= t; ++i) s1 += sign_pow(i + 1) * get(dl, m - t + i) * get(c, i + 1) * get(c, i + 1);
    for (long j = (n + 3) / 2 - t; j <= (n - 3) / 2; ++j)
      for (long i = 2; i <= j + t - m; ++i) s2 += sign_pow(i) * get(dl, j) * get(c, i) * get(c, 2 * (j + t) - n + 3 - i);
    for (long i = 2; i <= t - 1; ++i) s3 += sign_pow(i) * get(c, i + 1) * get(c, 2 * t + 1 - i);
    c[2 * t] = -Scalar(1) / (2 * dm * get(c, 2)) * (s1 + 2 * s2 - 2 * dm * s3);
  }
  return c;
}

inline Matrix tau22_basis(std::size_t n) {
  // (x1 + 2 x2, x2, e_1..e_n, e_{n+1})
  Matrix W = Matrix::identity(n + 3);
  W(1, 0) = 2;
  return W;
}

}  // namespace detail

inline Cocycle twisted_representative(const CatalogId& base, const RepId& r) {
  if (r.tag != RepTag::TwistedCase || r.family != base.family) throw Error(Errc::BadParams, "not a twisted case of " + to_string(base));
  const long n = static_cast<long>(base.n);
  const std::size_t d = base.n + outer_count(base.family);
  const std::size_t off = detail::e_offset(base.family);
  auto e = [&](long i) { return off + static_cast<std::size_t>(i); };
  Cocycle dn1 = delta(d, e(n), e(1));
  Cocycle top = pairing_cocycle(d, off + 1, static_cast<std::size_t>((n + 1) / 2));
  const std::string& l = r.label;
  switch (base.family) {
    case Family::S1:
      if (l == "s1") return dn1;
      if (l == "ltk") return dn1 + pairing_cocycle(d, off + 1, r.k);
      if (l == "tau1") return top;
      if (l == "tau2") return delta(d, e(1), 0) + top;
      break;
    case Family::S2:
      if (l == "s2") return dn1;
      if (l == "s4") return delta(d, e(2), 0) + dn1;
      if (l == "tau3") return top;
      break;
    case Family::S3:
      if (l == "s3") return dn1;
      break;
    case Family::S4:
      if (l == "s4" && r.param) {
        auto setup = detail::twisted_setup(base, outer_weight(d, {Scalar(-1)}));
        return *r.param * setup->gens[0] + setup->gens[1];
      }
      if (l == "tau3") return top;
      break;
    case Family::SN2:
      if (l == "sn2") return dn1;
      if (l == "tau22") return top;
      break;
    default:
      break;
  }
  throw Error(Errc::BadParams, "unknown twisted case " + to_string(r));
}

inline CatalogId twisted_extension_target(const CatalogId& base, const RepId& r) {
  const std::size_t n = base.n;
  const std::string& l = r.label;
  switch (base.family) {
    case Family::S1:
      if (l == "s1") return make_id(Family::S1, n + 1, base.params);
      if (l == "ltk") return make_id(Family::LTILDE_K, n + 1, {Scalar(static_cast<long>(r.k))});
      if (l == "tau1") return make_id(Family::TAU1, n + 1, base.params);
      if (l == "tau2") return make_id(Family::TAU2, n + 1);
      break;
    case Family::S2:
      if (l == "s2") return make_id(Family::S2, n + 1);
      if (l == "s4") {
        std::vector<Scalar> a(n - 2, Scalar(0));
        a.back() = 1;
        return make_id(Family::S4, n + 1, a);
      }
      if (l == "tau3") return make_id(Family::TAU3, n + 1);
      break;
    case Family::S3:
      if (l == "s3") return make_id(Family::S3, n + 1);
      break;
    case Family::S4:
      if (l == "s4" && r.param) {
        std::vector<Scalar> a = base.params;
        a.push_back(*r.param);
        return make_id(Family::S4, n + 1, a);
      }
      if (l == "tau3") {
        std::vector<Scalar> a;
        for (std::size_t i = 4; i + 1 <= n; i += 2) a.push_back(base.params[i - 3]);
        return make_id(Family::TAU3, n + 1, a);
      }
      break;
    case Family::SN2:
      if (l == "sn2") return make_id(Family::SN2, n + 1);
      if (l == "tau22") return make_id(Family::TAU22, n + 1);
      break;
    default:
      break;
  }
  throw Error(Errc::BadParams, "no extension target for " + to_string(r));
}

inline bool twisted_orbit_witness(const CatalogId& base, const RepId& rep, const Cocycle& psi, const WeightAction& theta,
                                  const AutParams& params) {
  LieAlgebra L = make_catalog(base);
  if (!twisted_cocycles(L, theta).contains(psi.flat())) throw Error(Errc::NotACocycle, "twisted_orbit_witness");
  Cocycle moved = pullback(L, make_aut(L, params), psi);
  return line_equal(moved, twisted_representative(base, rep), twisted_coboundaries(L, theta));
}

inline TwistedOutcome solve_twisted_normalization(const CatalogId& base, const Cocycle& psi, const WeightAction& theta) {
  LieAlgebra L = make_catalog(base);
  const long n = static_cast<long>(base.n);
  const std::size_t d = L.dim();
  if (psi.dim() != d || theta.weights.size() != d) throw Error(Errc::DimensionMismatch, "solve_twisted_normalization");
  validate_weight(L, theta);
  if (!twisted_cocycles(L, theta).contains(psi.flat())) throw Error(Errc::NotACocycle, "psi is not a twisted cocycle");
  auto cond = theorem1_conditions(L, theta, psi);
  if (!cond.cond1 || !cond.cond2) throw Error(Errc::NotNormalizable, "extension splits or has an annihilator component");
  auto setup = detail::twisted_setup(base, theta);
  if (!setup) throw Error(Errc::NotNormalizable, "no case of " + to_string(base.family) + " covers this weight");
  Subspace B = twisted_coboundaries(L, theta);
  auto c = class_coordinates(psi, setup->gens, B);
  if (!c) throw Error(Errc::NotNormalizable, "class lies outside the case's cohomology generators");
  std::map<long, Scalar> dl;
  for (std::size_t j = 0; j < c->size(); ++j) dl[static_cast<long>(j) + 1] = (*c)[j];
  auto d1 = [&](long j) { return detail::get(dl, j); };

  TwistedNormalization r;
  r.params = AutParams{base, {}};
  r.rep = RepId{RepTag::TwistedCase, 0, base.family, setup->label, std::nullopt};
  const std::string& l = setup->label;
  if (base.family == Family::S1 && l == "case1") {
    const long k = static_cast<long>(setup->k);
    const long H = (n + 1) / 2;
    if (k == H && n % 2 == 1) {
      if (is_zero(d1(2))) {
        r.rep.label = "s1";
      } else {
        r.rep.label = "tau1";
        if (!is_zero(d1(1))) r.params.values["b2"] = d1(1) / d1(2);
      }
    } else if (is_zero(d1(2))) {
      r.rep.label = "s1";
    } else {
      r.rep.label = "ltk";
      r.rep.k = setup->k;
      r.params.values["c2"] = d1(1) / d1(2);
    }
  } else if (base.family == Family::S1 && l == "tau2") {
    if (is_zero(d1(1))) {
      r.rep.label = "tau1";
    } else {
      // delta_1* = delta_1 b_1, delta_2* = delta_2 c_2^2 b_1^{n-2}
      Scalar ratio = d1(1) / d1(2), root;
      if (!rational_root(ratio, 2, root))
        return NeedsRootExtension{"c2^2 = " + to_string(ratio), ratio, 2};
      r.params.values["c2"] = root;
    }
  } else if (base.family == Family::S2 && l == "gamma-1") {
    if (is_zero(d1(1))) {
      r.rep.label = "s2";
    } else {
      // delta_1* = delta_1 c_2, delta_2* = delta_2 b_1^{n-1} c_2
      Scalar ratio = d1(1) / d1(2), root;
      if (!rational_root(ratio, static_cast<unsigned long>(n - 1), root))
        return NeedsRootExtension{"b1^" + std::to_string(n - 1) + " = " + to_string(ratio), ratio,
                                  static_cast<unsigned long>(n - 1)};
      r.rep.label = "s4";
      r.params.values["b1"] = root;
    }
  } else if ((base.family == Family::S2 || base.family == Family::S4) && l == "tau3") {
    auto cs = detail::pairing_c_recursion(n, dl);
    for (const auto& [i, v] : cs)
      if (i != 2 && !is_zero(v)) r.params.values["c" + std::to_string(i)] = v;
  } else if (base.family == Family::S4 && l == "s4") {
    r.rep.param = d1(1) / d1(2);
  }
  r.representative = twisted_representative(base, r.rep);
  r.target = twisted_extension_target(base, r.rep);
  if (r.target.family == Family::TAU22) r.target_basis = detail::tau22_basis(base.n);
  Cocycle moved = pullback(L, make_aut(L, r.params), psi);
  if (!line_equal(moved, r.representative, B))
    throw Error(Errc::InternalCheckFailed, "solve_twisted_normalization: pulled-back class is not on " + to_string(r.rep));
  return r;
}

}  // namespace lieext
