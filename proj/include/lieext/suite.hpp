#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <random>
#include <thread>

#include "lieext/orbits.hpp"
#include "lieext/report.hpp"

namespace lieext {

using CatalogSource = std::function<LieAlgebra(const CatalogId&)>;

inline const std::vector<std::string>& suite_sections() {
  static const std::vector<std::string> s = {"catalog", "nn1", "q", "sn2", "s1", "s2", "s3", "s4", "diagram"};
  return s;
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::string pad(std::size_t v) { return (v < 10 ? "0" : "") + std::to_string(v); }

inline nlohmann::json jnum(const Scalar& s) { return to_string(s); }

inline nlohmann::json jvec(const std::vector<Scalar>& v) { return to_json(v); }

// One unit of work: records are collected locally, then merged by id.
struct Ctx {
  std::string section;
  std::string prefix;
  std::mt19937_64 rng;
  const CatalogSource* source;
  std::vector<CheckRecord> out;
  std::size_t weight_samples = 10;

  LieAlgebra cat(const CatalogId& id) const { return (*source)(id); }

  void rec(const std::string& name, int criterion, const std::string& anchor, nlohmann::json inputs, nlohmann::json expected,
           nlohmann::json computed, bool pass) {
    CheckRecord r;
    r.id = prefix + "/" + name;
    r.section = section;
    r.anchor = anchor;
    r.inputs = std::move(inputs);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.pass = pass;
    r.criterion = criterion;
    out.push_back(std::move(r));
  }

  void eq(const std::string& name, int criterion, const std::string& anchor, nlohmann::json inputs, const nlohmann::json& expected,
          const nlohmann::json& computed) {
    bool ok = expected == computed;
    rec(name, criterion, anchor, std::move(inputs), expected, computed, ok);
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }
  // weight-style rationals: numerator and denominator in [-9, 9]
  Scalar weight() { return frac(integer(-9, 9), integer(1, 9)); }
  Scalar weight_nonzero() {
    for (;;)
      if (auto s = weight(); !is_zero(s)) return s;
  }
  // small coefficients keep the exact arithmetic cheap
  Scalar small() { return frac(integer(-4, 4), integer(1, 3)); }
  Scalar small_nonzero() {
    for (;;)
      if (auto s = small(); !is_zero(s)) return s;
  }
};

struct Task {
  std::string id;
  std::string section;
  std::function<void(Ctx&)> run;
};

inline Cocycle random_element(Ctx& c, const Subspace& s, std::size_t dim) {
  Vector v = zero_vector(pair_count(dim));
  for (const auto& b : s.vectors())
    if (c.coin()) v = v + c.small() * b;
  return Cocycle::from_flat(dim, v);
}

inline Cocycle combo(const std::vector<Cocycle>& gens, const std::vector<Scalar>& coeffs) {
  Cocycle out(gens.at(0).dim());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_zero(coeffs[i])) out = out + coeffs[i] * gens[i];
  return out;
}

inline Cocycle from_flat_vec(std::size_t dim, const Vector& v) { return Cocycle::from_flat(dim, v); }

// names of listed cocycles missing from a subspace
inline nlohmann::json missing(const std::vector<std::pair<std::string, Cocycle>>& items, const Subspace& s) {
  auto a = nlohmann::json::array();
  for (const auto& [name, psi] : items)
    if (!s.contains(psi.flat())) a.push_back(name);
  return a;
}

// structure_equal after moving to the target's basis when one is supplied
inline bool matches_target(const LieAlgebra& ext, const LieAlgebra& target, const std::optional<Matrix>& basis) {
  if (basis) return structure_equal(change_basis(ext, *basis), target);
  return structure_equal(ext, target);
}

inline std::string pname(const std::string& stem, long i) { return stem + std::to_string(i); }

// Diagonal derivations in the given basis: d_i + d_j = d_k whenever e_k occurs in [e_i, e_j].
inline std::size_t diagonal_derivation_dim(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  Echelon e(d);
  for (const auto& [ij, terms] : L.entries())
    for (const auto& t : terms) {
      Vector r = zero_vector(d);
      r[ij.first] += 1;
      r[ij.second] += 1;
      r[t.k] -= 1;
      e.insert(r);
    }
  return kernel_basis(e).dim();
}

// ---------------------------------------------------------------- catalog

inline std::vector<CatalogId> catalog_ids(Ctx& c, Family f, std::size_t n) {
  std::vector<CatalogId> ids;
  auto names = param_names(f, n);
  switch (f) {
    case Family::Q: case Family::TAU1: case Family::TAU2: case Family::TAU3: case Family::TAU22:
      if (n < 6 || n % 2) return ids;
      break;
    case Family::LK: case Family::LTILDE_K:
      if (n < 5) return ids;
      for (std::size_t k = 2; k <= (n - 1) / 2; ++k) ids.push_back(make_id(f, n, {Scalar(static_cast<long>(k))}));
      return ids;
    default:
      if (n < 4) return ids;
      break;
  }
  if (names.empty()) {
    ids.push_back(make_id(f, n));
    return ids;
  }
  for (int s = 0; s < 3; ++s) {
    std::vector<Scalar> p;
    for (std::size_t i = 0; i < names.size(); ++i) p.push_back(c.weight());
    ids.push_back(make_id(f, n, p));
  }
  return ids;
}

inline void catalog_task(Ctx& c, Family f, std::size_t n) {
  auto ids = catalog_ids(c, f, n);
  for (std::size_t s = 0; s < ids.size(); ++s) {
    const auto& id = ids[s];
    LieAlgebra L = c.cat(id);
    auto bad = jacobi_violations(L);
    nlohmann::json where = nlohmann::json::array();
    if (!bad.empty()) where = {L.label(bad[0].i), L.label(bad[0].j), L.label(bad[0].k)};
    c.rec("jacobi/p" + pad(s), 1, "structure constants of the classified family satisfy the Jacobi identity",
          {{"algebra", to_string(id)}}, 0, bad.size(), bad.empty());
    if (s != 0) continue;
    if (outer_count(f) > 0) {
      bool ok = false;
      nlohmann::json got;
      try {
        Subspace nil = nilradical_solvable(L);
        ok = nil == e_span(id);
        got = nil.dim();
      } catch (const Error& e) {
        got = e.what();
      }
      c.rec("nilradical", 0, "the e_i span the nilradical of the solvable family", {{"algebra", to_string(id)}}, id.n, got, ok);
    }
    if (f == Family::NN1 || f == Family::Q || f == Family::LK) {
      std::string want = f == Family::Q ? "TypeQ" : "TypeNN1";
      std::string got;
      try {
        got = to_string(graded_filiform_type(L));
      } catch (const Error& e) {
        got = e.what();
      }
      c.eq("graded-type", 0, "naturally graded filiform algebras are n_{n,1} or Q_n", {{"algebra", to_string(id)}}, want, got);
    }
  }
}

// ---------------------------------------------------------------- n_{n,1}

inline AutParams random_nn1_aut(Ctx& c, std::size_t n) {
  AutParams p{make_id(Family::NN1, n), {}};
  p.values["a1"] = c.small_nonzero();
  p.values["b2"] = c.small_nonzero();
  for (long i = 2; i <= static_cast<long>(n); ++i)
    if (c.coin()) p.values[pname("a", i)] = c.small();
  for (long i = 3; i <= static_cast<long>(n); ++i)
    if (c.coin()) p.values[pname("b", i)] = c.small();
  return p;
}

// the case split of the classification read off from class coordinates
inline RepId expected_nn1_rep(std::size_t n, const std::vector<Scalar>& al) {
  const std::size_t H = (n + 1) / 2;
  if (n % 2 == 1 && !is_zero(al[H - 1])) return central_rep(RepTag::NablaHalf);
  const std::size_t top = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  for (std::size_t k = top; k >= 2; --k)
    if (!is_zero(al[k - 1])) return central_rep(RepTag::Nabla1PlusK, k);
  return central_rep(RepTag::Nabla1);
}

inline void nn1_dims_task(Ctx& c, std::size_t n) {
  const std::string anchor = "second cohomology of n_{n,1}";
  LieAlgebra N = c.cat(make_id(Family::NN1, n));
  Subspace Z = central_cocycles(N), B = central_coboundaries(N);
  const std::size_t H = (n + 1) / 2;
  nlohmann::json in = {{"n", n}};
  c.eq("z2-dim", 2, anchor + ": dim Z^2 = (n-1) + (floor((n+1)/2) - 1)", in, (n - 1) + (H - 1), Z.dim());
  c.eq("b2-dim", 2, anchor + ": dim B^2 = n-2", in, n - 2, B.dim());
  c.eq("h2-dim", 2, anchor + ": dim H^2 = floor((n+1)/2)", in, H, Z.dim() - B.dim());
  std::vector<std::pair<std::string, Cocycle>> zl, bl;
  for (std::size_t i = 2; i <= n; ++i) zl.push_back({"D(e" + std::to_string(i) + ",e1)", delta(n, i - 1, 0)});
  for (std::size_t k = 2; k <= H; ++k) zl.push_back({"P" + std::to_string(k), pairing_cocycle(n, 0, k)});
  for (std::size_t i = 2; i + 1 <= n; ++i) bl.push_back({"D(e" + std::to_string(i) + ",e1)", delta(n, i - 1, 0)});
  c.eq("z2-listed", 2, anchor + ": listed cocycles lie in Z^2", in, nlohmann::json::array(), missing(zl, Z));
  c.eq("b2-listed", 2, anchor + ": listed coboundaries lie in B^2", in, nlohmann::json::array(), missing(bl, B));
  auto gens = B.vectors();
  for (const auto& g : nn1_h2_basis(n)) gens.push_back(g.flat());
  Subspace spanned = Subspace::span(Z.ambient(), gens);
  c.rec("h2-listed", 2, anchor + ": [D(e_n,e1)] and the pairing classes form a basis of H^2", in, {{"dim", Z.dim()}, {"equals_z2", true}},
        {{"dim", spanned.dim()}, {"equals_z2", spanned == Z}}, spanned == Z && spanned.dim() == B.dim() + H);

  // pullbacks by random automorphisms keep Z^2 and B^2
  bool stable = true, audit = true;
  std::string why;
  for (int t = 0; t < 3; ++t) {
    AutParams p = random_nn1_aut(c, n);
    try {
      Automorphism phi = make_aut(N, p);
      for (const auto& v : Z.vectors())
        if (!Z.contains(pullback(N, phi, from_flat_vec(n, v)).flat())) stable = false;
      for (const auto& v : B.vectors())
        if (!B.contains(pullback(N, phi, from_flat_vec(n, v)).flat())) stable = false;
    } catch (const Error& e) {
      audit = false;
      why = e.what();
    }
  }
  c.rec("aut-audit", 0, "the automorphism group of n_{n,1} preserves the bracket", in, true, audit ? nlohmann::json(true) : nlohmann::json(why), audit);
  c.rec("pullback-stability", 0, "automorphisms act on Z^2 and B^2", in, true, stable, stable && audit);

  // representatives and their central extensions
  std::vector<RepId> reps{central_rep(RepTag::Nabla1)};
  const std::size_t top = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  for (std::size_t k = 2; k <= top; ++k) reps.push_back(central_rep(RepTag::Nabla1PlusK, k));
  if (n % 2 == 1) reps.push_back(central_rep(RepTag::NablaHalf));
  for (const auto& r : reps) {
    Cocycle psi = nn1_representative(n, r);
    CatalogId target = nn1_extension_target(n, r);
    bool ext = structure_equal(central_extend(N, psi), c.cat(target));
    c.rec("rep-extension/" + to_string(r), 5, "central extensions of n_{n,1} are n_{n+1,1}, L_k or Q_{n+1}", {{"n", n}, {"rep", to_string(r)}},
          to_string(target), ext ? to_string(target) : "different table", ext);
    auto norm = normalize_nn1_line(n, psi);
    c.eq("rep-idempotent/" + to_string(r), 0, "normalizing a representative returns it", {{"n", n}, {"rep", to_string(r)}}, to_string(r),
         to_string(norm.rep));
  }
}

inline void nn1_sample_task(Ctx& c, std::size_t n, std::size_t sample) {
  const std::string anchor = "one-dimensional central extensions of n_{n,1}";
  LieAlgebra N = c.cat(make_id(Family::NN1, n));
  Subspace B = central_coboundaries(N);
  const std::size_t H = (n + 1) / 2;
  auto basis = nn1_h2_basis(n);
  std::vector<Scalar> al;
  Cocycle psi;
  for (int tries = 0; tries < 200; ++tries) {
    al.assign(H, Scalar(0));
    for (auto& a : al)
      if (c.coin()) a = c.small_nonzero();
    psi = combo(basis, al) + random_element(c, B, n);
    if (!psi.is_zero() && t1_condition(N, psi)) break;
  }
  nlohmann::json in = {{"n", n}, {"sample", sample}, {"class", jvec(al)}};
  std::string id = "s" + pad(sample);
  RepId want = expected_nn1_rep(n, al);
  Normalization r;
  try {
    r = normalize_nn1_line(n, psi);
  } catch (const Error& e) {
    c.rec(id + "/normalize", 5, anchor + ": every line with trivial annihilator-center intersection normalizes", in, to_string(want), e.what(), false);
    return;
  }
  c.eq(id + "/normalize", 5, anchor + ": the orbit representative follows the largest nonzero class coordinate", in, to_string(want),
       to_string(r.rep));
  bool witness = line_equal(pullback(N, make_aut(N, r.params), psi), nn1_representative(n, r.rep), B);
  c.rec(id + "/witness", 5, anchor + ": the returned automorphism carries the line to the representative", in, true, witness, witness);
  CatalogId target = nn1_extension_target(n, r.rep);
  bool ext = structure_equal(central_extend(N, nn1_representative(n, r.rep)), c.cat(target));
  c.rec(id + "/extension", 5, anchor + ": the extension is the algebra named by the representative", in, to_string(target),
        ext ? to_string(target) : "different table", ext);
  AutParams p = random_nn1_aut(c, n);
  Cocycle moved = pullback(N, make_aut(N, p), psi);
  std::string again;
  try {
    again = to_string(normalize_nn1_line(n, moved).rep);
  } catch (const Error& e) {
    again = e.what();
  }
  c.eq(id + "/invariance", 5, anchor + ": the representative is an invariant of the automorphism orbit", in, to_string(r.rep), again);
}

// displayed coefficient-transformation laws against a direct pullback
inline void nn1_alpha_task(Ctx& c, std::size_t n) {
  LieAlgebra N = c.cat(make_id(Family::NN1, n));
  Subspace B = central_coboundaries(N);
  const std::size_t H = (n + 1) / 2;
  auto basis = nn1_h2_basis(n);
  for (int s = 0; s < 3; ++s) {
    std::vector<Scalar> al(H);
    std::map<long, Scalar> alm;
    for (std::size_t j = 0; j < H; ++j) alm[static_cast<long>(j) + 1] = al[j] = c.small();
    AutParams p{make_id(Family::NN1, n), {}};
    p.values["a1"] = c.small_nonzero();
    if (n % 2 == 1) p.values["a2"] = c.small();
    p.values["b2"] = c.small_nonzero();
    for (long i = 3; i <= static_cast<long>(n); ++i) p.values[pname("b", i)] = c.small();
    auto formula = nn1_transformed_coefficients(n, alm, p);
    Cocycle moved = pullback(N, make_aut(N, p), combo(basis, al));
    auto direct = class_coordinates(moved, basis, B);
    nlohmann::json want = nlohmann::json::array(), got = nlohmann::json::array();
    for (std::size_t j = 1; j <= H; ++j) {
      got.push_back(direct ? to_string((*direct)[j - 1]) : "none");
      auto it = formula.find(static_cast<long>(j));
      want.push_back(it == formula.end() ? "absent" : to_string(it->second));
    }
    nlohmann::json pv = nlohmann::json::object();
    for (const auto& [k, v] : p.values) pv[k] = to_string(v);
    c.eq("alpha-star/t" + pad(static_cast<std::size_t>(s)), 0, "coefficient transformation laws of the n_{n,1} classification",
         {{"n", n}, {"class", jvec(al)}, {"aut", pv}}, got, want);
  }
}

// ---------------------------------------------------------------- Q_{2n}

inline void q_task(Ctx& c, std::size_t m) {
  const std::string anchor = "second cohomology of Q_{2n}";
  const std::size_t h = m / 2;
  LieAlgebra Q = c.cat(make_id(Family::Q, m));
  Subspace Z = central_cocycles(Q), B = central_coboundaries(Q);
  nlohmann::json in = {{"2n", m}};
  c.eq("h2-dim", 3, anchor + ": dim H^2 = n-1", in, h - 1, Z.dim() - B.dim());
  std::vector<std::pair<std::string, Cocycle>> zl, bl, hl;
  for (std::size_t i = 2; i + 1 <= m; ++i) zl.push_back({"D(e" + std::to_string(i) + ",e1)", delta(m, i - 1, 0)});
  for (std::size_t k = 2; k <= h; ++k) zl.push_back({"P" + std::to_string(k), pairing_cocycle(m, 0, k)});
  for (std::size_t i = 2; i + 2 <= m; ++i) bl.push_back({"D(e" + std::to_string(i) + ",e1)", delta(m, i - 1, 0)});
  bl.push_back({"P" + std::to_string(h), pairing_cocycle(m, 0, h)});
  hl.push_back({"D(e" + std::to_string(m - 1) + ",e1)", delta(m, m - 2, 0)});
  for (std::size_t k = 2; k + 1 <= h; ++k) hl.push_back({"P" + std::to_string(k), pairing_cocycle(m, 0, k)});
  c.eq("z2-listed", 3, anchor + ": listed cocycles lie in Z^2", in, nlohmann::json::array(), missing(zl, Z));
  c.eq("b2-listed", 3, anchor + ": listed coboundaries lie in B^2", in, nlohmann::json::array(), missing(bl, B));
  auto gens = B.vectors();
  for (const auto& [name, g] : hl) gens.push_back(g.flat());
  Subspace spanned = Subspace::span(Z.ambient(), gens);
  c.rec("h2-listed", 3, anchor + ": listed classes form a basis of H^2", in, {{"dim", Z.dim()}, {"equals_z2", true}},
        {{"dim", spanned.dim()}, {"equals_z2", spanned == Z}}, spanned == Z && spanned.dim() == B.dim() + h - 1);

  Subspace center_q = center(Q);
  nlohmann::json bad = nlohmann::json::array();
  std::vector<Vector> probe = Z.vectors();
  probe.push_back(random_element(c, Z, m).flat());
  for (std::size_t i = 0; i < probe.size(); ++i) {
    Cocycle psi = from_flat_vec(m, probe[i]);
    bool contains = annihilator(Q, psi).contains(center_q);
    if (!contains || t1_condition(Q, psi)) bad.push_back(i);
  }
  c.eq("split", 4, "every central extension of Q_{2n} is split: each cocycle annihilates the center", in, nlohmann::json::array(), bad);
}

// ---------------------------------------------------------------- s_{n,2}

inline void sn2_task(Ctx& c, std::size_t n) {
  const std::string anchor = "solvable extensions of s_{n,2}";
  const long N = static_cast<long>(n);
  CatalogId id = make_id(Family::SN2, n);
  LieAlgebra L = c.cat(id);
  const std::size_t d = n + 2;
  struct Special {
    std::string name;
    Scalar a, b;
  };
  std::vector<Special> specials{{"w1", Scalar(1 - N), Scalar(-1)}};
  if (n % 2 == 1 && n >= 5) specials.push_back({"w2", Scalar(2 - N), Scalar(-2)});
  for (const auto& s : specials) {
    WeightAction th = outer_weight(d, {s.a, s.b});
    nlohmann::json in = {{"n", n}, {"theta", {jnum(s.a), jnum(s.b)}}};
    Subspace Z = twisted_cocycles(L, th), B = twisted_coboundaries(L, th);
    c.eq(s.name + "/z2-dim", 6, anchor + ": dim Z^2 = n+2 at the special weights", in, n + 2, Z.dim());
    c.eq(s.name + "/b2-dim", 6, anchor + ": dim B^2 = n+1 at the special weights", in, n + 1, B.dim());
    c.eq(s.name + "/h2-dim", 6, anchor + ": dim H^2 = 1 at the special weights", in, 1, Z.dim() - B.dim());
    Cocycle listed = s.name == "w1" ? delta(d, n + 1, 2) : pairing_cocycle(d, 2, (n + 1) / 2);
    bool lin = Z.contains(listed.flat()) && !B.contains(listed.flat());
    c.rec(s.name + "/h2-listed", 0, anchor + ": the listed class spans H^2", in, true, lin, lin);

    Cocycle psi = listed + random_element(c, B, d);
    std::string label;
    bool ext = false, newprod = false, nil = false;
    try {
      auto out = solve_twisted_normalization(id, psi, th);
      auto& r = std::get<TwistedNormalization>(out);
      label = to_string(r.target);
      LieAlgebra E = solvable_extend(L, th, r.representative);
      ext = matches_target(E, c.cat(r.target), r.target_basis);
      nil = nilradical_is_central_ext(E, L, th);
      // new element e_{n+1} sits last
      Vector br = E.bracket_basis_vector(d, 0);
      newprod = br == (Scalar(N - (s.name == "w1" ? 1 : 2)) * unit_vector(d + 1, d));
    } catch (const std::exception& e) {
      label = e.what();
    }
    std::string want = to_string(s.name == "w1" ? make_id(Family::SN2, n + 1) : make_id(Family::TAU22, n + 1));
    c.rec(s.name + "/extension", 7, anchor + ": the extension is s_{n+1,2} or tau_{n+1,2}", in, want, label, ext && label == want);
    c.rec(s.name + "/new-product", 7, anchor + ": [e_{n+1}, x1] in the extension",
          in, s.name == "w1" ? "(n-1) e_{n+1}" : "(n-2) e_{n+1}", newprod ? "as expected" : "different", newprod);
    c.rec(s.name + "/nilradical", 7, anchor + ": the nilradical of the extension is the central extension of n_{n,1}", in, true, nil, nil);
  }
  // generic weights split
  Subspace nil = nilradical_solvable(L);
  for (std::size_t w = 0; w < c.weight_samples; ++w) {
    Scalar a, b;
    do {
      a = c.weight();
      b = c.weight();
    } while ((a == Scalar(1 - N) && b == -1) || (a == Scalar(2 - N) && b == -2));
    WeightAction th = outer_weight(d, {a, b});
    Subspace Z = twisted_cocycles(L, th);
    std::vector<Vector> probe = Z.vectors();
    if (Z.dim()) probe.push_back(random_element(c, Z, d).flat());
    std::size_t hits = 0;
    for (const auto& v : probe)
      if (theorem1_conditions(L, th, from_flat_vec(d, v), nil).cond2) ++hits;
    c.eq("generic/w" + pad(w), 6, anchor + ": at generic weights no cocycle meets the annihilator condition", {{"n", n}, {"theta", {jnum(a), jnum(b)}}},
         0, hits);
  }
  // automorphism audit
  AutParams p{id, {{"beta", c.small()}, {"alpha1", c.small_nonzero()}, {"alpha2", c.small_nonzero()}}};
  for (long k = 2; k <= N; ++k) p.values[pname("b", k)] = c.small();
  std::string got = "ok";
  try {
    make_aut(L, p);
  } catch (const Error& e) {
    got = e.what();
  }
  c.eq("aut-audit", 0, "the automorphism family of s_{n,2} preserves the bracket", {{"n", n}}, "ok", got);
}

// ---------------------------------------------------------------- codimension one

struct CaseRun {
  std::string want;  // expected target
  std::string got;
  bool ok = false;
};

inline CaseRun run_case(Ctx& c, const CatalogId& id, const Cocycle& psi, const WeightAction& th, const CatalogId& want) {
  CaseRun r;
  r.want = to_string(want);
  try {
    LieAlgebra L = c.cat(id);
    Subspace B = twisted_coboundaries(L, th);
    auto out = solve_twisted_normalization(id, psi + random_element(c, B, L.dim()), th);
    if (auto* root = std::get_if<NeedsRootExtension>(&out)) {
      r.got = "needs root: " + root->constraint;
      return r;
    }
    auto& t = std::get<TwistedNormalization>(out);
    r.got = to_string(t.target);
    r.ok = t.target == want && matches_target(solvable_extend(L, th, t.representative), c.cat(t.target), t.target_basis);
    if (t.target == want && !r.ok) r.got += " (table differs)";
  } catch (const std::exception& e) {
    r.got = e.what();
  }
  return r;
}

inline void record_case(Ctx& c, const std::string& name, int crit, const std::string& anchor, nlohmann::json in, const CaseRun& r) {
  c.rec(name, crit, anchor, std::move(in), r.want, r.got, r.ok);
}

inline std::string weight_audit(const LieAlgebra& L, const AutParams& p) {
  try {
    make_aut(L, p);
    return "ok";
  } catch (const Error& e) {
    return e.what();
  }
}

inline void s1_task(Ctx& c, std::size_t n) {
  const std::string anchor = "solvable extensions of s^1_{n,1}(beta)";
  const long N = static_cast<long>(n);
  const std::size_t d = n + 1;
  const bool odd = n % 2 == 1;
  const long H = (N + 1) / 2;
  auto id_for = [&](const Scalar& beta) { return make_id(Family::S1, n, {beta}); };
  auto th_for = [&](const Scalar& g) { return outer_weight(d, {g}); };

  // coboundary dimensions over a sampled grid
  std::vector<Scalar> gammas{Scalar(-1)};
  while (gammas.size() < std::max<std::size_t>(c.weight_samples, 2)) {
    Scalar g = c.weight();
    if (std::find(gammas.begin(), gammas.end(), g) == gammas.end()) gammas.push_back(g);
  }
  std::vector<Scalar> betas;
  while (betas.size() < 5) {
    Scalar b = c.weight();
    bool bad = b == 1 || std::find(betas.begin(), betas.end(), b) != betas.end();
    for (const auto& g : gammas) bad = bad || b == -g;
    if (!bad) betas.push_back(b);
  }
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& b : betas) {
    LieAlgebra L = c.cat(id_for(b));
    for (const auto& g : gammas) {
      std::size_t want = g == -1 ? n - 1 : n;
      std::size_t got = twisted_coboundaries(L, th_for(g)).dim();
      if (got != want) fails.push_back({{"beta", jnum(b)}, {"gamma", jnum(g)}, {"dim", got}});
    }
  }
  c.eq("b2-grid", 8, anchor + ": dim B^2 = n, or n-1 at gamma = -1", {{"n", n}, {"betas", jvec(betas)}, {"gammas", jvec(gammas)}},
       nlohmann::json::array(), fails);
  {
    Scalar b;
    do b = c.weight_nonzero();
    while (b == 1 || b == -1);
    std::size_t got = twisted_coboundaries(c.cat(id_for(b)), th_for(-b)).dim();
    c.eq("b2-beta-plus-gamma-zero", 0, anchor + ": coboundary rank also drops when beta + gamma = 0", {{"n", n}, {"beta", jnum(b)}, {"gamma", jnum(-b)}},
         n - 1, got);
  }

  auto h2 = [&](const Scalar& b, const Scalar& g) {
    LieAlgebra L = c.cat(id_for(b));
    return twisted_cocycles(L, th_for(g)).dim() - twisted_coboundaries(L, th_for(g)).dim();
  };
  auto e = [&](long i) { return static_cast<std::size_t>(i); };
  Cocycle dn1 = delta(d, e(N), e(1));
  Cocycle top = pairing_cocycle(d, 1, static_cast<std::size_t>(H));

  // case 1: beta = n + 2 - 2k, gamma = 1 - n - beta
  for (long k = 2; k <= H; ++k) {
    Scalar beta(N + 2 - 2 * k), gamma = Scalar(1 - N) - beta;
    CatalogId id = id_for(beta);
    WeightAction th = th_for(gamma);
    nlohmann::json in = {{"n", n}, {"beta", jnum(beta)}, {"gamma", jnum(gamma)}, {"k", k}};
    std::string tag = "case1/k" + std::to_string(k);
    c.eq(tag + "/h2-dim", 8, anchor + ": dim H^2 = 2 in the first case", in, 2, h2(beta, gamma));
    Cocycle pk = pairing_cocycle(d, 1, static_cast<std::size_t>(k));
    Scalar d1 = c.small_nonzero(), dk = c.small_nonzero();
    CatalogId want = (k == H && odd) ? make_id(Family::TAU1, n + 1, {beta})
                                     : make_id(Family::LTILDE_K, n + 1, {Scalar(k)});
    in["delta"] = {jnum(d1), jnum(dk)};
    record_case(c, tag + "/extension", 8, anchor + ": the pairing class gives " + std::string(k == H && odd ? "tau^1_{n+1,1}" : "the L~_k family"),
                in, run_case(c, id, d1 * dn1 + dk * pk, th, want));
    record_case(c, tag + "/extension-s1", 8, anchor + ": the class of D(e_n,e1) alone gives s^1_{n+1,1}(beta)", in,
                run_case(c, id, d1 * dn1, th, make_id(Family::S1, n + 1, {beta})));
  }
  // case 2: gamma = 1 - n - beta off the case-1 values
  {
    Scalar beta;
    auto special = [&](const Scalar& b) {
      for (long k = 2; k <= H; ++k)
        if (b == Scalar(N + 2 - 2 * k)) return true;
      return b == Scalar(2 - N) || b == 1 || b == frac(1 - N, 2);
    };
    do beta = c.weight();
    while (special(beta));
    Scalar gamma = Scalar(1 - N) - beta;
    nlohmann::json in = {{"n", n}, {"beta", jnum(beta)}, {"gamma", jnum(gamma)}};
    c.eq("case2/h2-dim", 8, anchor + ": dim H^2 = 1 in the second case", in, 1, h2(beta, gamma));
    record_case(c, "case2/extension", 8, anchor + ": the second case gives s^1_{n+1,1}(beta)", in,
                run_case(c, id_for(beta), c.small_nonzero() * dn1, th_for(gamma), make_id(Family::S1, n + 1, {beta})));
  }
  if (odd) {
    // case 3: gamma = 2 - n - 2 beta
    Scalar beta;
    do beta = c.weight();
    while (beta == 1 || beta == frac(3 - N, 2) || beta == Scalar(N - 2));
    Scalar gamma = Scalar(2 - N) - 2 * beta;
    nlohmann::json in = {{"n", n}, {"beta", jnum(beta)}, {"gamma", jnum(gamma)}};
    c.eq("case3/h2-dim", 8, anchor + ": dim H^2 = 1 in the third case", in, 1, h2(beta, gamma));
    record_case(c, "case3/extension", 8, anchor + ": the third case gives tau^1_{n+1,1}(beta)", in,
                run_case(c, id_for(beta), c.small_nonzero() * top, th_for(gamma), make_id(Family::TAU1, n + 1, {beta})));
    bool full = twisted_cocycles(c.cat(id_for(beta)), th_for(gamma)).contains(top.flat());
    c.rec("case3/full-pairing", 0, anchor + ": the full pairing sum is the cocycle of the third case", in, true, full, full);

    // case 4: gamma = -1, beta = (3 - n)/2
    Scalar b4 = frac(3 - N, 2);
    CatalogId id4 = id_for(b4);
    WeightAction th4 = th_for(-1);
    nlohmann::json in4 = {{"n", n}, {"beta", jnum(b4)}, {"gamma", "-1"}};
    c.eq("case4/h2-dim", 8, anchor + ": dim H^2 = 2 in the fourth case", in4, 2, h2(b4, Scalar(-1)));
    Scalar q = c.small_nonzero(), d2 = c.small_nonzero();
    Cocycle e1x = delta(d, e(1), 0);
    nlohmann::json in4b = in4;
    in4b["delta"] = {jnum(q * q * d2), jnum(d2)};
    record_case(c, "case4/extension", 8, anchor + ": the fourth case gives tau^2_{n+1,1}", in4b,
                run_case(c, id4, q * q * d2 * e1x + d2 * top, th4, make_id(Family::TAU2, n + 1)));
    record_case(c, "case4/extension-tau1", 8, anchor + ": the pairing class alone gives tau^1_{n+1,1}", in4,
                run_case(c, id4, d2 * top, th4, make_id(Family::TAU1, n + 1, {b4})));
    CaseRun root = run_case(c, id4, Scalar(2) * e1x + top, th4, make_id(Family::TAU2, n + 1));
    bool needs = root.got.rfind("needs root", 0) == 0;
    c.rec("case4/non-square", 0, anchor + ": a non-square coefficient ratio needs a quadratic extension of Q", in4, "needs root: c2^2 = 2", root.got,
          needs);
  }
  // automorphism audit: the full family and the parts used by the normal forms
  Scalar beta = c.weight();
  CatalogId id = id_for(beta);
  LieAlgebra L = c.cat(id);
  AutParams full{id, {{"a1", c.small_nonzero()}, {"b1", c.small_nonzero()}, {"c2", c.small_nonzero()}, {pname("a", N), c.small()}}};
  for (long k = 3; k <= N; ++k) full.values[pname("b", k)] = c.small_nonzero();
  AutParams part{id, {{"b1", c.small_nonzero()}, {"c2", c.small_nonzero()}, {pname("a", N), c.small()}}};
  c.eq("aut-audit/full", 0, "the automorphism family of s^1_{n,1}(beta) preserves the bracket", {{"n", n}, {"beta", jnum(beta)}}, "ok",
       weight_audit(L, full));
  c.eq("aut-audit/scalings", 0, "the scaling part of the s^1 automorphism family preserves the bracket", {{"n", n}, {"beta", jnum(beta)}}, "ok",
       weight_audit(L, part));
}

inline void s2_task(Ctx& c, std::size_t n) {
  const std::string anchor = "solvable extensions of s^2_{n,1}";
  const long N = static_cast<long>(n);
  const std::size_t d = n + 1;
  CatalogId id = make_id(Family::S2, n);
  LieAlgebra L = c.cat(id);
  auto e = [&](long i) { return static_cast<std::size_t>(i); };
  {
    WeightAction th = outer_weight(d, {Scalar(-1)});
    Subspace Z = twisted_cocycles(L, th), B = twisted_coboundaries(L, th);
    nlohmann::json in = {{"n", n}, {"gamma", "-1"}};
    c.eq("g-1/h2-dim", 9, anchor + ": dim H^2 = 2 at gamma = -1", in, 2, Z.dim() - B.dim());
    Cocycle a = delta(d, e(2), 0), b = delta(d, e(N), e(1));
    auto gens = B.vectors();
    gens.push_back(a.flat());
    gens.push_back(b.flat());
    bool spans = Subspace::span(Z.ambient(), gens) == Z && Z.contains(a.flat()) && Z.contains(b.flat());
    c.rec("g-1/h2-listed", 0, anchor + ": [D(e2,x)] and [D(e_n,e1)] span H^2 at gamma = -1", in, true, spans, spans);
    record_case(c, "g-1/extension-s2", 9, anchor + ": the class of D(e_n,e1) gives s^2_{n+1,1}", in,
                run_case(c, id, c.small_nonzero() * b, th, make_id(Family::S2, n + 1)));
    Scalar r = c.small_nonzero(), d2 = c.small_nonzero();
    std::vector<Scalar> tail(n - 2, Scalar(0));
    tail.back() = 1;
    nlohmann::json in2 = in;
    in2["delta"] = {jnum(pow(r, N - 1) * d2), jnum(d2)};
    record_case(c, "g-1/extension-s4", 9, anchor + ": a mixed class gives s^4_{n+1,1}(0,...,0,1)", in2,
                run_case(c, id, pow(r, N - 1) * d2 * a + d2 * b, th, make_id(Family::S4, n + 1, tail)));
    CaseRun root = run_case(c, id, Scalar(2) * a + b, th, make_id(Family::S4, n + 1, tail));
    c.rec("g-1/non-root", 0, anchor + ": a ratio without a rational (n-1)-th root needs a field extension", in,
          "needs root: b1^" + std::to_string(N - 1) + " = 2", root.got, root.got.rfind("needs root", 0) == 0);
  }
  if (n % 2 == 1 && n >= 5) {
    WeightAction th = outer_weight(d, {Scalar(-2)});
    Subspace Z = twisted_cocycles(L, th), B = twisted_coboundaries(L, th);
    nlohmann::json in = {{"n", n}, {"gamma", "-2"}};
    c.eq("g-2/h2-dim", 9, anchor + ": dim H^2 = (n-1)/2 at gamma = -2", in, (n - 1) / 2, Z.dim() - B.dim());
    std::vector<Cocycle> pk;
    std::vector<Scalar> dl;
    for (std::size_t k = 2; k <= (n + 1) / 2; ++k) {
      pk.push_back(pairing_cocycle(d, 1, k));
      dl.push_back(c.coin() ? c.small() : Scalar(0));
    }
    dl.back() = c.small_nonzero();
    in["delta"] = jvec(dl);
    record_case(c, "g-2/extension", 9, anchor + ": the pairing classes give tau^3_{n+1,1}(0,...,0)", in,
                run_case(c, id, combo(pk, dl), th, make_id(Family::TAU3, n + 1)));
  }
  // other weights: split
  Subspace nil = nilradical_solvable(L);
  for (std::size_t w = 0; w < c.weight_samples; ++w) {
    Scalar g;
    do g = c.weight();
    while (g == -1 || g == -2);
    WeightAction th = outer_weight(d, {g});
    Subspace Z = twisted_cocycles(L, th);
    std::size_t hits = 0;
    for (const auto& v : Z.vectors())
      if (theorem1_conditions(L, th, from_flat_vec(d, v), nil).cond2) ++hits;
    c.eq("generic/g" + pad(w), 0, anchor + ": other weights give no admissible class", {{"n", n}, {"gamma", jnum(g)}}, 0, hits);
  }
  AutParams p{id, {{"b1", c.small_nonzero()}, {"c2", c.small_nonzero()}}};
  for (long k = 2; k <= N; ++k) p.values[pname("a", k)] = c.small();
  for (long k = 3; k <= N; ++k) p.values[pname("c", k)] = c.small();
  c.eq("aut-audit", 0, "the automorphism family of s^2_{n,1} preserves the bracket", {{"n", n}}, "ok", weight_audit(L, p));
}

inline void s3_task(Ctx& c, std::size_t n) {
  const std::string anchor = "solvable extensions of s^3_{n,1}";
  const long N = static_cast<long>(n);
  const std::size_t d = n + 1;
  CatalogId id = make_id(Family::S3, n);
  LieAlgebra L = c.cat(id);
  WeightAction th = outer_weight(d, {Scalar(-N)});
  Subspace Z = twisted_cocycles(L, th), B = twisted_coboundaries(L, th);
  nlohmann::json in = {{"n", n}, {"gamma", jnum(Scalar(-N))}};
  c.eq("g-n/h2-dim", 10, anchor + ": dim H^2 = 1 at gamma = -n", in, 1, Z.dim() - B.dim());
  record_case(c, "g-n/extension", 10, anchor + ": the extension is s^3_{n+1,1}", in,
              run_case(c, id, c.small_nonzero() * delta(d, n, 1), th, make_id(Family::S3, n + 1)));
  Subspace nil = nilradical_solvable(L);
  for (std::size_t w = 0; w < c.weight_samples; ++w) {
    Scalar g;
    do g = c.weight();
    while (g == -N);
    WeightAction tg = outer_weight(d, {g});
    Subspace Zg = twisted_cocycles(L, tg);
    std::vector<Vector> probe = Zg.vectors();
    if (Zg.dim()) probe.push_back(random_element(c, Zg, d).flat());
    std::size_t hits = 0;
    for (const auto& v : probe)
      if (theorem1_conditions(L, tg, from_flat_vec(d, v), nil).cond2) ++hits;
    c.eq("generic/g" + pad(w), 10, anchor + ": every other weight gives no admissible class", {{"n", n}, {"gamma", jnum(g)}}, 0, hits);
  }
  AutParams full{id, {{"b1", c.small_nonzero()}}};
  for (long k = 1; k <= N; ++k) full.values[pname("a", k)] = c.small_nonzero();
  for (long k = 2; k <= N; ++k) full.values[pname("b", k)] = c.small_nonzero();
  AutParams part{id, {{"b1", c.small_nonzero()}, {"b2", c.small()}, {pname("a", N), c.small()}}};
  c.eq("aut-audit/full", 0, "the automorphism family of s^3_{n,1} preserves the bracket", {{"n", n}}, "ok", weight_audit(L, full));
  c.eq("aut-audit/scalings", 0, "the scaling part of the s^3 automorphism family preserves the bracket", {{"n", n}}, "ok", weight_audit(L, part));
}

inline void s4_task(Ctx& c, std::size_t n, std::size_t sample) {
  const std::string anchor = "solvable extensions of s^4_{n,1}(alpha)";
  const long N = static_cast<long>(n);
  const std::size_t d = n + 1;
  auto e = [&](long i) { return static_cast<std::size_t>(i); };
  std::vector<Scalar> al(n - 3);
  for (auto& a : al) a = c.small_nonzero();
  auto alpha = [&](long l) { return al[static_cast<std::size_t>(l - 3)]; };
  const std::string tag = "a" + pad(sample);
  {
    CatalogId id = make_id(Family::S4, n, al);
    LieAlgebra L = c.cat(id);
    WeightAction th = outer_weight(d, {Scalar(-1)});
    Subspace Z = twisted_cocycles(L, th), B = twisted_coboundaries(L, th);
    nlohmann::json in = {{"n", n}, {"alpha", jvec(al)}, {"gamma", "-1"}};
    c.eq(tag + "/g-1/h2-dim", 11, anchor + ": dim H^2 = 2 at gamma = -1", in, 2, Z.dim() - B.dim());
    c.eq(tag + "/g-1/b2-dim", 0, anchor + ": dim B^2 = n-1 at gamma = -1", in, n - 1, B.dim());
    Cocycle first = delta(d, e(2), 0);
    Cocycle printed = delta(d, e(N), e(1)), fixed = delta(d, e(N), e(1));
    for (long j = 3; j <= N - 1; ++j) {
      printed.add(e(j), 0, -alpha(N + 2 - j));
      fixed.add(e(j), 0, alpha(N + 2 - j));
    }
    auto listed_ok = [&](const Cocycle& second) {
      auto gens = B.vectors();
      gens.push_back(first.flat());
      gens.push_back(second.flat());
      bool in_z = Z.contains(first.flat()) && Z.contains(second.flat());
      return nlohmann::json{{"in_z2", in_z}, {"spans_h2", in_z && Subspace::span(Z.ambient(), gens) == Z}};
    };
    nlohmann::json want = {{"in_z2", true}, {"spans_h2", true}};
    c.eq(tag + "/g-1/h2-listed", 11, anchor + ": H^2 at gamma = -1 is spanned by [D(e2,x)] and [D(e_n,e1) - sum alpha_{n+2-j} D(e_j,x)]", in, want,
         listed_ok(printed));
    c.eq(tag + "/g-1/h2-listed-plus", 0, anchor + ": the same with the sum added, matching the bracket signs of the family", in, want,
         listed_ok(fixed));
    Scalar d1 = c.small_nonzero(), d2 = c.small_nonzero();
    std::vector<Scalar> tail = al;
    tail.push_back(d1 / d2);
    nlohmann::json in2 = in;
    in2["delta"] = {jnum(d1), jnum(d2)};
    record_case(c, tag + "/g-1/extension", 11, anchor + ": the extension is s^4_{n+1,1}(alpha_3,...,alpha_n)", in2,
                run_case(c, id, d1 * first + d2 * fixed, th, make_id(Family::S4, n + 1, tail)));
  }
  if (n % 2 == 1 && n >= 5) {
    std::vector<Scalar> ev = al;
    for (long l = 3; l <= N - 1; l += 2) ev[static_cast<std::size_t>(l - 3)] = 0;
    CatalogId id = make_id(Family::S4, n, ev);
    LieAlgebra L = c.cat(id);
    WeightAction th = outer_weight(d, {Scalar(-2)});
    Subspace Z = twisted_cocycles(L, th), B = twisted_coboundaries(L, th);
    nlohmann::json in = {{"n", n}, {"alpha", jvec(ev)}, {"gamma", "-2"}};
    c.eq(tag + "/g-2/h2-dim", 11, anchor + ": dim H^2 = 1 at gamma = -2 with odd-index alpha zero", in, 1, Z.dim() - B.dim());
    c.eq(tag + "/g-2/b2-dim", 0, anchor + ": dim B^2 = n at gamma = -2", in, n, B.dim());
    std::vector<Cocycle> pk;
    std::vector<Scalar> dl;
    for (std::size_t k = 2; k <= (n + 1) / 2; ++k) {
      pk.push_back(pairing_cocycle(d, 1, k));
      dl.push_back(c.coin() ? c.small() : Scalar(0));
    }
    dl.back() = c.small_nonzero();
    std::vector<Scalar> evens;
    for (long l = 4; l <= N - 1; l += 2) evens.push_back(ev[static_cast<std::size_t>(l - 3)]);
    in["delta"] = jvec(dl);
    record_case(c, tag + "/g-2/extension", 11, anchor + ": the extension is tau^3_{n+1,1}(alpha_4, alpha_6, ...)", in,
                run_case(c, id, combo(pk, dl), th, make_id(Family::TAU3, n + 1, evens)));
  }
  if (sample == 0) {
    CatalogId id = make_id(Family::S4, n, al);
    AutParams p{id, {{"c2", c.small_nonzero()}, {pname("a", N), c.small()}}};
    for (long k = 3; k <= N; ++k) p.values[pname("b", k)] = c.small();
    for (long k = 3; k <= N; ++k) p.values[pname("c", k)] = c.small();
    c.eq("aut-audit", 0, "the automorphism family of s^4_{n,1}(alpha) preserves the bracket", {{"n", n}, {"alpha", jvec(al)}}, "ok",
         weight_audit(c.cat(id), p));
  }
}

// ---------------------------------------------------------------- diagrams

inline void diagram_task(Ctx& c, std::size_t n) {
  const long N = static_cast<long>(n);
  const std::size_t d = n + 2;
  nlohmann::json in = {{"n", n}};
  LieAlgebra nn = c.cat(make_id(Family::NN1, n));
  LieAlgebra sn = c.cat(make_id(Family::SN2, n));
  auto nil_of = [&](const CatalogId& id) { return subalgebra(c.cat(id), e_span(id)); };
  // codimension two: extend then add the torus, or the other way round
  {
    LieAlgebra up = central_extend(nn, nn1_representative(n, central_rep(RepTag::Nabla1)));
    bool left = structure_equal(up, nil_of(make_id(Family::SN2, n + 1)));
    WeightAction th = outer_weight(d, {Scalar(1 - N), Scalar(-1)});
    bool right = structure_equal(solvable_extend(sn, th, delta(d, n + 1, 2)), c.cat(make_id(Family::SN2, n + 1)));
    c.rec("codim2/sn2", 12, "both routes from n_{n,1} end in s_{n+1,2}", in, {{"extend-then-torus", true}, {"torus-then-extend", true}},
          {{"extend-then-torus", left}, {"torus-then-extend", right}}, left && right);
  }
  if (n % 2 == 1) {
    LieAlgebra up = central_extend(nn, nn1_representative(n, central_rep(RepTag::NablaHalf)));
    bool left = structure_equal(up, c.cat(make_id(Family::Q, n + 1))) && structure_equal(up, nil_of(make_id(Family::TAU22, n + 1)));
    WeightAction th = outer_weight(d, {Scalar(2 - N), Scalar(-2)});
    LieAlgebra E = solvable_extend(sn, th, pairing_cocycle(d, 2, (n + 1) / 2));
    bool right = structure_equal(change_basis(E, detail::tau22_basis(n)), c.cat(make_id(Family::TAU22, n + 1)));
    c.rec("codim2/tau22", 12, "both routes from n_{n,1} through Q_{n+1} end in tau_{n+1,2}", in,
          {{"extend-then-torus", true}, {"torus-then-extend", true}}, {{"extend-then-torus", left}, {"torus-then-extend", right}}, left && right);
  }
  // L_k has no codimension-two solvable extension
  for (std::size_t k = 2; k <= n / 2; ++k) {
    CatalogId lk = make_id(Family::LK, n + 1, {Scalar(static_cast<long>(k))});
    std::size_t tor = diagonal_derivation_dim(c.cat(lk));
    c.eq("lk-torus/k" + std::to_string(k), 12, "the diagonal torus of L_k is one-dimensional, so no codimension-two extension", {{"n", n}, {"k", k}},
         1, tor);
  }
  {
    // weight grid on s_{n,2}: no admissible class restricts to an L_k line
    const std::size_t top = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    auto nab = nn1_h2_basis(n);
    Subspace nil = e_span(make_id(Family::SN2, n));
    Subspace nil_sn = nilradical_solvable(sn);
    Subspace Bn = central_coboundaries(nn);
    nlohmann::json hits = nlohmann::json::array();
    std::size_t grid = 0;
    for (long a = -N - 1; a <= 2; ++a)
      for (long b = -3; b <= 2; ++b) {
        ++grid;
        WeightAction th = outer_weight(d, {Scalar(a), Scalar(b)});
        Subspace Z = twisted_cocycles(sn, th);
        std::vector<Vector> probe = Z.vectors();
        if (Z.dim()) probe.push_back(random_element(c, Z, d).flat());
        for (const auto& v : probe) {
          Cocycle psi = from_flat_vec(d, v);
          if (!theorem1_conditions(sn, th, psi, nil_sn).cond2) continue;
          auto co = class_coordinates(restrict_to_nilradical(sn, psi, nil), nab, Bn);
          if (!co) continue;
          for (std::size_t j = 2; j <= top; ++j)
            if (!is_zero((*co)[j - 1])) {
              hits.push_back({{"theta", {a, b}}});
              break;
            }
        }
      }
    c.eq("lk-grid", 12, "no sampled weight on s_{n,2} gives an admissible class whose nilradical is L_k",
         {{"n", n}, {"grid", grid}, {"alpha", {-N - 1, 2}}, {"beta", {-3, 2}}}, nlohmann::json::array(), hits);
  }
  // codimension one: the nilradical of each extension is the central extension the other route predicts
  struct Route {
    std::string name;
    CatalogId solvable;
    CatalogId nil;
  };
  std::vector<Route> routes{{"s1", make_id(Family::S1, n + 1, {c.weight()}), make_id(Family::NN1, n + 1)},
                            {"s2", make_id(Family::S2, n + 1), make_id(Family::NN1, n + 1)},
                            {"s3", make_id(Family::S3, n + 1), make_id(Family::NN1, n + 1)}};
  std::vector<Scalar> al(n - 2);
  for (auto& a : al) a = c.small();
  routes.push_back({"s4", make_id(Family::S4, n + 1, al), make_id(Family::NN1, n + 1)});
  if (n % 2 == 1) {
    std::vector<Scalar> ev;
    for (std::size_t l = 4; l + 2 <= n + 1; l += 2) ev.push_back(c.small());
    routes.push_back({"tau1", make_id(Family::TAU1, n + 1, {c.weight()}), make_id(Family::Q, n + 1)});
    routes.push_back({"tau2", make_id(Family::TAU2, n + 1), make_id(Family::Q, n + 1)});
    routes.push_back({"tau3", make_id(Family::TAU3, n + 1, ev), make_id(Family::Q, n + 1)});
  }
  for (std::size_t k = 2; k <= n / 2; ++k)
    routes.push_back({"ltk" + std::to_string(k), make_id(Family::LTILDE_K, n + 1, {Scalar(static_cast<long>(k))}),
                      make_id(Family::LK, n + 1, {Scalar(static_cast<long>(k))})});
  for (const auto& r : routes) {
    bool ok = false;
    std::string got;
    try {
      LieAlgebra S = c.cat(r.solvable);
      Subspace nil = nilradical_solvable(S);
      ok = nil == e_span(r.solvable) && structure_equal(subalgebra(S, nil), c.cat(r.nil));
      got = ok ? to_string(r.nil) : "different nilradical";
    } catch (const std::exception& e) {
      got = e.what();
    }
    c.rec("codim1/" + r.name, 12, "the codimension-one algebras over the extensions of n_{n,1} have the predicted nilradical",
          {{"n", n}, {"algebra", to_string(r.solvable)}}, to_string(r.nil), got, ok);
  }
}

// ---------------------------------------------------------------- runner

inline std::vector<Task> build_tasks(const SuiteConfig& cfg) {
  std::vector<Task> t;
  auto want = [&](const std::string& s) { return cfg.families.empty() || cfg.families.count(s); };
  auto add = [&](const std::string& section, const std::string& id, std::function<void(Ctx&)> f) { t.push_back({id, section, std::move(f)}); };
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    const std::string nn = "n" + pad(n);
    if (want("catalog"))
      for (const auto& [f, name] : family_names()) add("catalog", "catalog/" + nn + "/" + name, [f = f, n](Ctx& c) { catalog_task(c, f, n); });
    if (want("nn1")) {
      add("nn1", "nn1/" + nn, [n](Ctx& c) { nn1_dims_task(c, n); });
      add("nn1", "nn1/" + nn + "/alpha", [n](Ctx& c) { nn1_alpha_task(c, n); });
      for (std::size_t s = 0; s < cfg.cocycle_samples; ++s)
        add("nn1", "nn1/" + nn + "/norm/" + pad(s), [n, s](Ctx& c) { nn1_sample_task(c, n, s); });
    }
    if (want("q") && n >= 6 && n % 2 == 0) add("q", "q/" + nn, [n](Ctx& c) { q_task(c, n); });
    if (want("sn2")) add("sn2", "sn2/" + nn, [n](Ctx& c) { sn2_task(c, n); });
    if (want("s1") && n >= 5) add("s1", "s1/" + nn, [n](Ctx& c) { s1_task(c, n); });
    if (want("s2")) add("s2", "s2/" + nn, [n](Ctx& c) { s2_task(c, n); });
    if (want("s3")) add("s3", "s3/" + nn, [n](Ctx& c) { s3_task(c, n); });
    if (want("s4"))
      for (std::size_t s = 0; s < 3; ++s) add("s4", "s4/" + nn + "/" + pad(s), [n, s](Ctx& c) { s4_task(c, n, s); });
    if (want("diagram") && n >= 5 && n % 2 == 1) add("diagram", "diagram/" + nn, [n](Ctx& c) { diagram_task(c, n); });
  }
  return t;
}

inline std::string task_prefix(const Task& t) {
  // nn1 sample tasks carry their sample index in the record names instead
  auto p = t.id;
  for (const char* strip : {"/norm/", "/alpha"}) {
    auto at = p.find(strip);
    if (at != std::string::npos) p = p.substr(0, at);
  }
  if (t.section == "s4") p = p.substr(0, p.rfind('/'));
  return p;
}

}  // namespace detail

inline void validate_config(const SuiteConfig& cfg) {
  if (cfg.n_min < 4) throw Error(Errc::BadParams, "n_min must be at least 4");
  if (cfg.n_max < cfg.n_min) throw Error(Errc::BadParams, "n_max is below n_min");
  if (cfg.n_max > 13 && !cfg.allow_large) throw Error(Errc::BadParams, "n_max above 13 needs allow_large");
  for (const auto& f : cfg.families)
    if (std::find(suite_sections().begin(), suite_sections().end(), f) == suite_sections().end())
      throw Error(Errc::BadParams, "unknown section '" + f + "'");
  if (cfg.cocycle_samples == 0) throw Error(Errc::BadParams, "cocycle_samples must be positive");
}

inline Report run_suite(const SuiteConfig& cfg, const CatalogSource& source = make_catalog_unchecked) {
  validate_config(cfg);
  auto tasks = detail::build_tasks(cfg);
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto& t = tasks[i];
      detail::Ctx c{t.section, detail::task_prefix(t), std::mt19937_64(detail::splitmix(cfg.seed ^ detail::fnv1a(t.id))), &source, {}, cfg.weight_samples};
      try {
        t.run(c);
      } catch (const std::exception& e) {
        c.prefix = t.id;
        c.rec("error", 0, "check raised an error", {{"task", t.id}}, "no error", e.what(), false);
      }
      results[i] = std::move(c.out);
    }
  };
  unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  Report r;
  r.config = cfg;
  for (auto& v : results)
    for (auto& rec : v) r.records.push_back(std::move(rec));
  std::sort(r.records.begin(), r.records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return r;
}

}  // namespace lieext
