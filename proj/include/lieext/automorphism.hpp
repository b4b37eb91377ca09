#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "lieext/catalog.hpp"
#include "lieext/cocycle.hpp"

namespace lieext {

struct AutParams {
  CatalogId base;
  std::map<std::string, Scalar> values;  // missing entries: scale parameters 1, the rest 0
};

struct Automorphism {
  Matrix matrix;  // column j is phi(e_j)
  std::optional<AutParams> source;
};

namespace detail {

inline Scalar factorial(std::size_t k) {
  Scalar f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long>(i);
  return f;
}

inline Scalar sign_pow(long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

struct ParamReader {
  const AutParams& p;
  std::set<std::string> allowed;
  std::map<std::string, Scalar> defaults;

  void allow(const std::string& stem, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i <= to; ++i) allowed.insert(stem + std::to_string(i));
  }
  void allow(const std::string& name) { allowed.insert(name); }
  void scale(const std::string& name) {
    allowed.insert(name);
    defaults[name] = 1;
  }
  void check() const {
    for (const auto& [k, v] : p.values)
      if (!allowed.count(k)) throw Error(Errc::BadParams, "automorphism parameter '" + k + "' not used by " + to_string(p.base.family));
  }
  Scalar operator()(const std::string& name) const {
    auto it = p.values.find(name);
    if (it != p.values.end()) return it->second;
    auto d = defaults.find(name);
    return d == defaults.end() ? Scalar(0) : d->second;
  }
  Scalar operator()(const std::string& stem, long i) const {
    std::string name = stem + std::to_string(i);
    if (i < 0 || !allowed.count(name)) return 0;
    return (*this)(name);
  }
};

inline Matrix aut_matrix(const AutParams& p) {
  const CatalogId& id = p.base;
  const std::size_t n = id.n;
  const long N = static_cast<long>(n);
  ParamReader r{p, {}, {}};
  Matrix M;
  switch (id.family) {
    case Family::NN1: {
      // Aut(n_{n,1}): phi(e1) = sum a_i e_i, phi(e2) = sum b_i e_i, phi(e_j) = a1^{j-2} sum b_{i-j+2} e_i
      r.scale("a1"), r.allow("a", 2, n), r.scale("b2"), r.allow("b", 3, n);
      r.check();
      M = Matrix(n, n);
      for (long i = 1; i <= N; ++i) M(i - 1, 0) = r("a", i);
      for (long i = 2; i <= N; ++i) M(i - 1, 1) = r("b", i);
      for (long j = 3; j <= N; ++j)
        for (long i = j; i <= N; ++i) M(i - 1, j - 1) = pow(r("a1"), j - 2) * r("b", i - j + 2);
      break;
    }
    case Family::SN2: {
      r.allow("beta"), r.scale("alpha1"), r.scale("alpha2"), r.allow("b", 2, n);
      r.check();
      const std::size_t d = n + 2;
      auto e = [](long i) { return static_cast<std::size_t>(i + 1); };
      Scalar beta = r("beta"), a1 = r("alpha1"), a2 = r("alpha2");
      M = Matrix(d, d);
      M(0, 0) = 1;
      M(e(1), 0) += beta;
      for (long k = 3; k <= N; ++k) M(e(k), 0) += Scalar(k - 2) * r("b", k) + beta * r("b", k - 1);
      M(1, 1) = 1;
      for (long k = 2; k <= N; ++k) M(e(k), 1) += r("b", k);
      M(e(1), e(1)) += a1;
      for (long k = 3; k <= N; ++k) M(e(k), e(1)) += a1 * r("b", k - 1);
      for (long i = 2; i <= N; ++i) {
        Scalar c = pow(a1, i - 2) * a2;
        M(e(i), e(i)) += c;
        for (long k = 3; k <= N + 2 - i; ++k)
          M(e(i - 2 + k), e(i)) += c * sign_pow(k) * pow(beta, k - 2) / factorial(k - 2);
      }
      break;
    }
    case Family::S1: {
      const Scalar& beta = id.params[0];
      r.allow("a1"), r.allow("a" + std::to_string(n)), r.scale("b1"), r.allow("b", 3, n), r.scale("c2");
      // at beta = 1, e1 and e2 carry the same x-weight and e1 -> e1 + b2 e2 is admissible
      if (beta == 1) r.allow("b2");
      r.check();
      Scalar a1 = r("a1"), b1 = r("b1"), c2 = r("c2");
      if (is_zero(b1)) throw Error(Errc::NotInvertible, "s1 automorphism needs b1 != 0");
      M = Matrix(n + 1, n + 1);
      M(0, 0) = 1;
      M(1, 0) += a1;
      for (long k = 2; k <= N - 1; ++k) M(k, 0) += (beta + Scalar(k - 2)) * r("b", k + 1) / b1;
      M(n, 0) += r("a", N);
      M(1, 1) = b1;
      for (long k = 2; k <= N; ++k) M(k, 1) += r("b", k);
      for (long k = 2; k <= N; ++k) M(k, 2) += c2 * sign_pow(k) * pow(a1, k - 2) / factorial(k - 2);
      for (long i = 3; i <= N; ++i)
        for (long k = i; k <= N; ++k) M(k, i) += pow(b1, i - 2) * c2 * sign_pow(k - i) * pow(a1, k - i) / factorial(k - i);
      break;
    }
    case Family::S2: {
      r.allow("a", 2, n), r.scale("b1"), r.scale("c2"), r.allow("c", 3, n);
      r.check();
      Scalar b1 = r("b1");
      M = Matrix(n + 1, n + 1);
      M(0, 0) = 1;
      for (long k = 2; k <= N; ++k) M(k, 0) += r("a", k);
      M(1, 1) = b1;
      for (long k = 3; k <= N; ++k) M(k, 1) += b1 * r("a", k - 1);
      for (long k = 2; k <= N; ++k) M(k, 2) += r("c", k);
      for (long i = 3; i <= N; ++i)
        for (long k = i; k <= N; ++k) M(k, i) += pow(b1, i - 2) * r("c", k - i + 2);
      break;
    }
    case Family::S3: {
      r.allow("a", 1, n), r.scale("b1"), r.allow("b", 2, n);
      r.check();
      Scalar a1 = r("a1"), b1 = r("b1");
      M = Matrix(n + 1, n + 1);
      M(0, 0) = 1;
      for (long k = 1; k <= N; ++k) M(k, 0) += r("a", k);
      for (long k = 1; k <= N; ++k) M(k, 1) += r("b", k);
      for (long i = 2; i <= N; ++i)
        for (long k = i; k <= N; ++k)
          M(k, i) += pow(b1, i - 1) * sign_pow(k + 2 - i) * pow(a1, k - i) / factorial(k - i);
      break;
    }
    case Family::S4: {
      r.allow("a" + std::to_string(n)), r.allow("b", 3, n), r.scale("c2"), r.allow("c", 3, n);
      r.check();
      auto alpha = [&](long l) { return (l >= 3 && l <= N - 1) ? id.params[l - 3] : Scalar(0); };
      M = Matrix(n + 1, n + 1);
      M(0, 0) = 1;
      for (long k = 2; k <= N - 1; ++k) {
        Scalar s = r("b", k + 1);
        for (long l = 3; l <= k - 1; ++l) s += alpha(l) * r("b", k + 2 - l);
        M(k, 0) += s;
      }
      M(n, 0) += r("a", N);
      M(1, 1) = 1;
      for (long k = 3; k <= N; ++k) M(k, 1) += r("b", k);
      for (long i = 2; i <= N; ++i)
        for (long k = i; k <= N; ++k) M(k, i) += r("c", k + 2 - i);
      break;
    }
    default:
      throw Error(Errc::BadParams, "no automorphism form for family " + to_string(id.family));
  }
  return M;
}

}  // namespace detail

// First basis pair (i,j) with phi[e_i,e_j] != [phi e_i, phi e_j], if any.
inline std::optional<std::pair<std::size_t, std::size_t>> bracket_defect(const LieAlgebra& L, const Matrix& M) {
  const std::size_t d = L.dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < d; ++j) cols.push_back(M.column(j));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (M.apply(L.bracket_basis_vector(i, j)) != L.bracket(cols[i], cols[j])) return std::make_pair(i, j);
  return std::nullopt;
}

inline Automorphism make_automorphism(const LieAlgebra& L, const Matrix& M) {
  if (M.rows() != L.dim() || M.cols() != L.dim()) throw Error(Errc::DimensionMismatch, "automorphism matrix size");
  if (!inverse(M)) throw Error(Errc::NotInvertible, "automorphism matrix is singular");
  if (auto bad = bracket_defect(L, M))
    throw Error(Errc::NotAnAutomorphism,
                "bracket [" + L.label(bad->first) + "," + L.label(bad->second) + "] is not preserved");
  return {M, std::nullopt};
}

inline Automorphism make_aut(const LieAlgebra& L, const AutParams& p) {
  Automorphism a = make_automorphism(L, detail::aut_matrix(p));
  a.source = p;
  return a;
}

// (phi psi)(x, y) = psi(phi x, phi y)
inline Cocycle pullback(const LieAlgebra& L, const Automorphism& phi, const Cocycle& psi) {
  const std::size_t d = L.dim();
  if (psi.dim() != d || phi.matrix.rows() != d) throw Error(Errc::DimensionMismatch, "pullback");
  Cocycle out(d, psi.components());
  for (std::size_t c = 0; c < psi.components(); ++c) {
    Matrix S = phi.matrix.transpose() * psi.matrix(c) * phi.matrix;
    for (const auto& [i, j] : pair_list(d))
      if (!is_zero(S(i, j))) out.add(i, j, S(i, j), c);
  }
  return out;
}

}  // namespace lieext
