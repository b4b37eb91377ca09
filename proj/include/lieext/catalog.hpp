#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lieext/series.hpp"

namespace lieext {

enum class Family { NN1, Q, S1, S2, S3, S4, SN2, TAU1, TAU2, TAU3, TAU22, LK, LTILDE_K };

inline const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names = {
      {Family::NN1, "nn1"},   {Family::Q, "q"},       {Family::S1, "s1"},       {Family::S2, "s2"},
      {Family::S3, "s3"},     {Family::S4, "s4"},     {Family::SN2, "sn2"},     {Family::TAU1, "tau1"},
      {Family::TAU2, "tau2"}, {Family::TAU3, "tau3"}, {Family::TAU22, "tau22"}, {Family::LK, "lk"},
      {Family::LTILDE_K, "ltk"}};
  return names;
}

inline std::string to_string(Family f) {
  for (const auto& [g, s] : family_names())
    if (g == f) return s;
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (const auto& [g, name] : family_names())
    if (name == s) return g;
  throw Error(Errc::ParseError, "unknown family '" + s + "'");
}

// n is the nilradical dimension for every family except LK, where it is the
// dimension of L_k itself.
struct CatalogId {
  Family family = Family::NN1;
  std::size_t n = 0;
  std::vector<Scalar> params;
  friend bool operator==(const CatalogId&, const CatalogId&) = default;
};

inline std::size_t outer_count(Family f) {
  switch (f) {
    case Family::NN1: case Family::Q: case Family::LK: return 0;
    case Family::SN2: case Family::TAU22: return 2;
    default: return 1;
  }
}

inline std::vector<std::string> param_names(Family f, std::size_t n) {
  std::vector<std::string> p;
  switch (f) {
    case Family::S1: p = {"beta"}; break;
    case Family::TAU1: p = {"alpha"}; break;
    case Family::S4:
      for (std::size_t i = 3; i + 1 <= n; ++i) p.push_back("a" + std::to_string(i));
      break;
    case Family::TAU3:
      for (std::size_t i = 4; i + 2 <= n; i += 2) p.push_back("a" + std::to_string(i));
      break;
    case Family::LK: case Family::LTILDE_K: p = {"k"}; break;
    default: break;
  }
  return p;
}

inline std::string to_string(const CatalogId& id) {
  std::string s = to_string(id.family) + ":" + std::to_string(id.n);
  auto names = param_names(id.family, id.n);
  for (std::size_t i = 0; i < names.size() && i < id.params.size(); ++i)
    s += (i == 0 ? ":" : ",") + names[i] + "=" + to_string(id.params[i]);
  return s;
}

inline void validate(const CatalogId& id) {
  auto bad = [&](const std::string& why) { throw Error(Errc::BadParams, to_string(id) + ": " + why); };
  auto names = param_names(id.family, id.n);
  if (id.params.size() != names.size()) bad("expected " + std::to_string(names.size()) + " parameters");
  switch (id.family) {
    case Family::NN1:
      if (id.n < 3) bad("n must be at least 3");
      break;
    case Family::Q: case Family::TAU1: case Family::TAU2: case Family::TAU3: case Family::TAU22:
      if (id.n < 6 || id.n % 2) bad("nilradical dimension must be even and at least 6");
      break;
    case Family::S1: case Family::S2: case Family::S3: case Family::S4: case Family::SN2:
      if (id.n < 4) bad("n must be at least 4");
      break;
    case Family::LK: case Family::LTILDE_K: {
      if (id.n < 5) bad("dimension of L_k must be at least 5");
      const Scalar& k = id.params[0];
      if (k.get_den() != 1 || k < 2 || k > Scalar(static_cast<long>((id.n - 1) / 2)))
        bad("k must be an integer with 2 <= k <= floor((n-1)/2)");
      break;
    }
  }
}

inline CatalogId make_id(Family f, std::size_t n, std::vector<Scalar> params = {}) {
  if (params.empty()) params.assign(param_names(f, n).size(), Scalar(0));
  CatalogId id{f, n, std::move(params)};
  validate(id);
  return id;
}

// "s1:6:beta=3/2", "s4:7:a3=1,a4=0,a5=2", "lk:7:k=2". Omitted alpha-type
// parameters default to zero; unknown names are rejected.
inline CatalogId parse_catalog_id(const std::string& text) {
  auto fail = [&](const std::string& why) { throw Error(Errc::ParseError, "catalog id '" + text + "': " + why); };
  auto c1 = text.find(':');
  if (c1 == std::string::npos) fail("expected family:n[:params]");
  auto c2 = text.find(':', c1 + 1);
  Family f = parse_family(text.substr(0, c1));
  std::string nstr = text.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
  if (nstr.empty() || nstr.find_first_not_of("0123456789") != std::string::npos) fail("bad dimension");
  std::size_t n = std::stoul(nstr);
  auto names = param_names(f, n);
  std::vector<Scalar> params(names.size(), Scalar(0));
  std::vector<bool> seen(names.size(), false);
  if (c2 != std::string::npos) {
    std::stringstream ss(text.substr(c2 + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) fail("parameter '" + item + "' lacks '='");
      std::string key = item.substr(0, eq);
      std::size_t at = names.size();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == key) at = i;
      if (at == names.size()) fail("unknown parameter '" + key + "'");
      if (seen[at]) fail("duplicate parameter '" + key + "'");
      seen[at] = true;
      params[at] = parse_scalar(item.substr(eq + 1));
    }
  }
  bool needs_all = f == Family::S1 || f == Family::TAU1 || f == Family::LK || f == Family::LTILDE_K;
  if (needs_all)
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!seen[i]) fail("missing parameter '" + names[i] + "'");
  CatalogId id{f, n, params};
  validate(id);
  return id;
}

namespace detail {

struct TableBuilder {
  BracketTable t;
  std::size_t off;  // index of e_1
  TableBuilder(std::size_t dim, std::size_t outer) : t(dim), off(outer) {}
  std::size_t e(std::size_t i) const { return off + i - 1; }
  // [a, b] += c * target
  void put(std::size_t a, std::size_t b, std::size_t target, const Scalar& c) {
    if (!is_zero(c)) t.add(a, b, target, c);
  }
  void chain(std::size_t last) {
    for (std::size_t i = 2; i <= last; ++i) put(e(i), e(1), e(i + 1), 1);
  }
  // [e_i, e_{m+1-i}] = (-1)^i e_top for 2 <= i <= upto
  void pairing(std::size_t m, std::size_t upto, std::size_t top) {
    for (std::size_t i = 2; i <= upto; ++i) put(e(i), e(m + 1 - i), e(top), i % 2 ? -1 : 1);
  }
};

inline std::vector<std::string> labels_for(Family f, std::size_t n_e) {
  std::vector<std::string> l;
  switch (outer_count(f)) {
    case 1: l = {"x"}; break;
    case 2: l = f == Family::TAU22 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x1", "x2"}; break;
    default: break;
  }
  auto e = indexed_labels("e", 1, n_e);
  l.insert(l.end(), e.begin(), e.end());
  return l;
}

}  // namespace detail

inline LieAlgebra make_catalog_unchecked(const CatalogId& id) {
  validate(id);
  const std::size_t n = id.n;
  const std::size_t outer = outer_count(id.family);
  detail::TableBuilder b(n + outer, outer);
  const std::size_t x = 0;
  auto S = [](long v) { return Scalar(v); };
  auto L = [](std::size_t v) { return static_cast<long>(v); };
  switch (id.family) {
    case Family::NN1:
      b.chain(n - 1);
      break;
    case Family::Q:
      b.chain(n - 2);
      b.pairing(n, n / 2, n);
      break;
    case Family::LK: {
      std::size_t k = id.params[0].get_num().get_ui();
      b.chain(n - 1);
      b.pairing(2 * k, k, n);
      break;
    }
    case Family::S1: {
      const Scalar& beta = id.params[0];
      b.chain(n - 1);
      b.put(b.e(1), x, b.e(1), 1);
      for (std::size_t i = 2; i <= n; ++i) b.put(b.e(i), x, b.e(i), S(L(i) - 2) + beta);
      break;
    }
    case Family::S2:
      b.chain(n - 1);
      for (std::size_t i = 2; i <= n; ++i) b.put(b.e(i), x, b.e(i), 1);
      break;
    case Family::S3:
      b.chain(n - 1);
      b.put(b.e(1), x, b.e(1), 1);
      b.put(b.e(1), x, b.e(2), 1);
      for (std::size_t i = 2; i <= n; ++i) b.put(b.e(i), x, b.e(i), S(L(i) - 1));
      break;
    case Family::S4: {
      auto alpha = [&](std::size_t j) { return id.params[j - 3]; };  // alpha_3..alpha_{n-1}
      b.chain(n - 1);
      for (std::size_t i = 2; i <= n; ++i) {
        b.put(b.e(i), x, b.e(i), 1);
        for (std::size_t l = i + 2; l <= n; ++l) b.put(b.e(i), x, b.e(l), alpha(l + 1 - i));
      }
      break;
    }
    case Family::SN2: {
      const std::size_t x1 = 0, x2 = 1;
      b.chain(n - 1);
      b.put(b.e(1), x1, b.e(1), 1);
      for (std::size_t i = 3; i <= n; ++i) b.put(b.e(i), x1, b.e(i), S(L(i) - 2));
      for (std::size_t i = 2; i <= n; ++i) b.put(b.e(i), x2, b.e(i), 1);
      break;
    }
    case Family::TAU1: {
      const Scalar& a = id.params[0];
      b.chain(n - 2);
      b.pairing(n, n / 2, n);
      b.put(b.e(1), x, b.e(1), 1);
      for (std::size_t i = 2; i + 1 <= n; ++i) b.put(b.e(i), x, b.e(i), S(L(i) - 2) + a);
      b.put(b.e(n), x, b.e(n), S(L(n) - 3) + 2 * a);
      break;
    }
    case Family::TAU2: {
      b.chain(n - 2);
      b.pairing(n, n / 2, n);
      b.put(b.e(1), x, b.e(1), 1);
      b.put(b.e(1), x, b.e(n), 1);
      for (std::size_t i = 2; i + 1 <= n; ++i) b.put(b.e(i), x, b.e(i), S(L(i) - L(n / 2)));
      b.put(b.e(n), x, b.e(n), 1);
      break;
    }
    case Family::TAU3: {
      // [e_j, x] = e_j + sum_{k>=2} alpha_{2k} e_{j+2k-1}, targets up to e_{n-1}
      auto alpha = [&](std::size_t even) { return id.params[(even - 4) / 2]; };
      b.chain(n - 2);
      b.pairing(n, n / 2, n);
      for (std::size_t j = 2; j + 1 <= n; ++j) {
        b.put(b.e(j), x, b.e(j), 1);
        for (std::size_t k = 2; j + 2 * k - 1 <= n - 1; ++k) b.put(b.e(j), x, b.e(j + 2 * k - 1), alpha(2 * k));
      }
      b.put(b.e(n), x, b.e(n), 2);
      break;
    }
    case Family::TAU22: {
      const std::size_t y = 1;
      b.chain(n - 2);
      b.pairing(n, n / 2, n);
      for (std::size_t i = 1; i + 1 <= n; ++i) b.put(b.e(i), x, b.e(i), S(L(i)));
      b.put(b.e(n), x, b.e(n), S(L(n) + 1));
      for (std::size_t i = 2; i + 1 <= n; ++i) b.put(b.e(i), y, b.e(i), 1);
      b.put(b.e(n), y, b.e(n), 2);
      break;
    }
    case Family::LTILDE_K: {
      // nilradical L_k of dimension n; [e_i, x] = (n-1+i-2k) e_i
      std::size_t k = id.params[0].get_num().get_ui();
      b.chain(n - 1);
      b.pairing(2 * k, k, n);
      b.put(b.e(1), x, b.e(1), 1);
      for (std::size_t i = 2; i <= n; ++i) b.put(b.e(i), x, b.e(i), S(L(n) - 1 + L(i) - 2 * L(k)));
      break;
    }
  }
  return LieAlgebra(detail::labels_for(id.family, n), b.t);
}

inline LieAlgebra make_catalog(const CatalogId& id) {
  LieAlgebra L = make_catalog_unchecked(id);
  auto bad = jacobi_violations(L);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw Error(Errc::JacobiFailure, to_string(id) + ": Jacobi fails on (" + L.label(v.i) + "," + L.label(v.j) + "," +
                                         L.label(v.k) + ")");
  }
  return L;
}

// Subspace spanned by the e_i of a catalog algebra.
inline Subspace e_span(const CatalogId& id) {
  const std::size_t outer = outer_count(id.family);
  const std::size_t d = id.n + outer;
  std::vector<Vector> v;
  for (std::size_t i = outer; i < d; ++i) v.push_back(unit_vector(d, i));
  return Subspace::span(d, v);
}

// Gr(L) from the lower central series, then matched against n_{n,1} and
// Q_n in a basis built from the grading.
inline FiliformType graded_filiform_type(const LieAlgebra& L) {
  if (!is_filiform(L)) throw Error(Errc::NotFiliform, "graded_filiform_type: algebra is not filiform");
  const std::size_t n = L.dim();
  if (n < 4) throw Error(Errc::Unrecognized, "graded_filiform_type: dimension below 4");
  auto terms = lower_central_series(L).terms;  // L^1..L^n (last is 0)
  // adapted basis: greedy representatives of L^i / L^{i+1}
  std::vector<Vector> basis;
  std::vector<std::size_t> degree;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    Echelon e(n);
    for (const auto& v : terms[i + 1].vectors()) e.insert(v);
    auto cands = i == 0 ? Matrix::identity(n).row_list() : terms[i].vectors();
    for (const auto& v : cands)
      if (e.insert(v)) basis.push_back(v), degree.push_back(i + 1);
  }
  Matrix P = Matrix::from_columns(basis, n);
  auto Pinv = inverse(P);
  if (!Pinv) throw Error(Errc::InternalCheckFailed, "adapted basis is singular");
  BracketTable gt(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector w = Pinv->apply(L.bracket(basis[a], basis[b]));
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(w[k]) && degree[k] == degree[a] + degree[b]) gt.add(a, b, k, w[k]);
    }
  LieAlgebra gr(L.labels(), gt);
  // basis[0], basis[1] span V1, basis[2] spans V2, basis[n-2] spans V_{n-2}
  auto kernel_in_v1 = [&](std::size_t yi) -> std::optional<Vector> {
    Vector u0 = unit_vector(n, 0), u1 = unit_vector(n, 1), y = unit_vector(n, yi);
    Vector a = gr.bracket(y, u0), b = gr.bracket(y, u1);
    Matrix m = Matrix::from_columns({a, b}, n);
    Subspace k = kernel_basis(m);
    if (k.dim() != 1) return std::nullopt;
    Vector c = k.vector(0);
    return c[0] * u0 + c[1] * u1;
  };
  auto other_in_v1 = [&](const Vector& v) { return is_zero(v[0]) ? unit_vector(n, 0) : unit_vector(n, 1); };
  auto try_match = [&](const std::vector<Vector>& cols, const LieAlgebra& model) {
    Matrix M = Matrix::from_columns(cols, n);
    if (!inverse(M)) return false;
    return structure_equal(change_basis(gr, M), model);
  };
  auto w = kernel_in_v1(2);    // kills [., V2]: e_2 in both models
  auto v = kernel_in_v1(n - 2);  // kills [., V_{n-2}]
  if (w) {
    Vector e1 = other_in_v1(*w);
    std::vector<Vector> cols = {e1, *w};
    for (std::size_t i = 2; i < n; ++i) cols.push_back(gr.bracket(cols.back(), e1));
    if (try_match(cols, make_catalog(make_id(Family::NN1, n)))) return FiliformType::TypeNN1;
  }
  if (w && v && n % 2 == 0 && n >= 6) {
    std::vector<Vector> cols = {*v, *w};
    for (std::size_t i = 2; i + 1 < n; ++i) cols.push_back(gr.bracket(cols.back(), *v));
    cols.push_back(gr.bracket(*w, cols.back()));
    if (try_match(cols, make_catalog(make_id(Family::Q, n)))) return FiliformType::TypeQ;
  }
  throw Error(Errc::Unrecognized, "graded_filiform_type: Gr(L) matches neither n_{n,1} nor Q_n");
}

}  // namespace lieext
