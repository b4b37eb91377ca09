#include <gtest/gtest.h>

#include <random>

#include "lieext/lieext.hpp"

using namespace lieext;

namespace {

LieAlgebra abelian(std::size_t n) { return LieAlgebra(indexed_labels("e", 1, n), BracketTable(n)); }

LieAlgebra cat(Family f, std::size_t n, std::vector<Scalar> p = {}) { return make_catalog(make_id(f, n, std::move(p))); }

// Delta_{i,j} with 1-based e-indices, shifted past the outer generators
Cocycle D(std::size_t dim, std::size_t off, std::size_t i, std::size_t j) { return delta(dim, off + i - 1, off + j - 1); }

// psi is a twisted cocycle iff L (+) <u> with [x,y] + psi(x,y)u, [x,u] = theta(x)u
// satisfies Jacobi. The u-component of the Jacobi sum is linear in psi, so
// evaluating it on each Delta_{a,b} gives the constraint matrix column by column.
std::size_t cocycle_dim_oracle(const LieAlgebra& L, const Vector& theta) {
  const std::size_t d = L.dim();
  auto pairs = pair_list(d);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y)
      for (std::size_t z = y + 1; z < d; ++z) triples.push_back({x, y, z});
  Matrix m(triples.size(), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    BracketTable t(d + 1);
    for (const auto& [ij, terms] : L.entries()) t.add(ij.first, ij.second, terms);
    t.add(pairs[p].first, pairs[p].second, d, 1);
    for (std::size_t i = 0; i < d; ++i)
      if (!is_zero(theta[i])) t.add(i, d, d, theta[i]);
    LieAlgebra E(indexed_labels("v", 1, d + 1), t);
    for (std::size_t r = 0; r < triples.size(); ++r) {
      Vector a = unit_vector(d + 1, triples[r][0]), b = unit_vector(d + 1, triples[r][1]), c = unit_vector(d + 1, triples[r][2]);
      Vector j = E.bracket(E.bracket(a, b), c) + E.bracket(E.bracket(b, c), a) + E.bracket(E.bracket(c, a), b);
      m(r, p) = j[d];
    }
  }
  return pairs.size() - rank(m);
}

// Coboundaries are the cocycles of extensions isomorphic to the split one:
// rewrite the split extension in the basis e_m + u and read off the u-parts.
Subspace coboundary_oracle(const LieAlgebra& L, const Vector& theta) {
  const std::size_t d = L.dim();
  BracketTable t(d + 1);
  for (const auto& [ij, terms] : L.entries()) t.add(ij.first, ij.second, terms);
  for (std::size_t i = 0; i < d; ++i)
    if (!is_zero(theta[i])) t.add(i, d, d, theta[i]);
  LieAlgebra split(indexed_labels("v", 1, d + 1), t);
  std::vector<Vector> out;
  for (std::size_t m = 0; m < d; ++m) {
    Matrix p = Matrix::identity(d + 1);
    p(d, m) = 1;
    LieAlgebra moved = change_basis(split, p);
    Vector v = zero_vector(pair_count(d));
    for (const auto& [i, j] : pair_list(d)) v[pair_index(d, i, j)] = moved.bracket_basis_vector(i, j)[d];
    out.push_back(v);
  }
  return Subspace::span(pair_count(d), out);
}

void expect_matches_oracle(const LieAlgebra& L, const WeightAction& th, const std::string& what) {
  EXPECT_EQ(twisted_cocycles(L, th).dim(), cocycle_dim_oracle(L, th.weights)) << what;
  EXPECT_EQ(twisted_coboundaries(L, th), coboundary_oracle(L, th.weights)) << what;
}

}  // namespace

TEST(CentralCohomology, N41) {
  LieAlgebra n4 = cat(Family::NN1, 4);
  Subspace Z = central_cocycles(n4), B = central_coboundaries(n4);
  EXPECT_EQ(Z.dim(), 4u);
  EXPECT_EQ(B.dim(), 2u);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {2, 3}}) EXPECT_TRUE(Z.contains(D(4, 0, i, j).flat()));
  EXPECT_TRUE(B.contains(D(4, 0, 2, 1).flat()));
  EXPECT_TRUE(B.contains(D(4, 0, 3, 1).flat()));
  EXPECT_FALSE(B.contains(D(4, 0, 4, 1).flat()));
  auto q = central_h2(n4);
  EXPECT_EQ(q.dim(), 2u);
}

TEST(CentralCohomology, Abelian) {
  for (std::size_t m = 2; m <= 6; ++m) {
    LieAlgebra A = abelian(m);
    EXPECT_EQ(central_cocycles(A).dim(), m * (m - 1) / 2);
    EXPECT_EQ(central_coboundaries(A).dim(), 0u);
  }
  EXPECT_EQ(central_h2(abelian(2)).dim(), 1u);
}

TEST(CentralCohomology, Q6) {
  LieAlgebra q6 = cat(Family::Q, 6);
  EXPECT_EQ(central_cocycles(q6).dim(), 6u);
  EXPECT_EQ(central_coboundaries(q6).dim(), 4u);
  for (std::size_t i = 2; i <= 4; ++i) EXPECT_TRUE(central_coboundaries(q6).contains(D(6, 0, i, 1).flat()));
}

TEST(CentralCohomology, H2Dimensions) {
  for (std::size_t n = 4; n <= 12; ++n) {
    LieAlgebra L = cat(Family::NN1, n);
    auto q = central_h2(L);
    EXPECT_EQ(q.dim(), (n + 1) / 2) << n;
    EXPECT_EQ(q.total.dim(), (n - 1) + (n + 1) / 2 - 1) << n;
    EXPECT_EQ(q.sub.dim(), n - 2) << n;
    for (const auto& g : nn1_h2_basis(n)) EXPECT_TRUE(q.total.contains(g.flat()));
  }
  for (std::size_t m = 3; m <= 6; ++m) EXPECT_EQ(central_h2(cat(Family::Q, 2 * m)).dim(), m - 1) << 2 * m;
}

TEST(CentralCohomology, MatchesOracle) {
  for (std::size_t n = 4; n <= 8; ++n) expect_matches_oracle(cat(Family::NN1, n), zero_weight(n), "nn1");
  expect_matches_oracle(cat(Family::Q, 6), zero_weight(6), "q6");
  expect_matches_oracle(cat(Family::Q, 8), zero_weight(8), "q8");
  expect_matches_oracle(cat(Family::LK, 7, {Scalar(2)}), zero_weight(7), "lk7");
  expect_matches_oracle(abelian(4), zero_weight(4), "abelian");
}

TEST(TwistedCohomology, SN2SpecialWeights) {
  LieAlgebra L = cat(Family::SN2, 5);
  WeightAction w1 = outer_weight(7, {Scalar(-4), Scalar(-1)});
  EXPECT_EQ(twisted_cocycles(L, w1).dim(), 7u);
  EXPECT_EQ(twisted_coboundaries(L, w1).dim(), 6u);
  auto q = twisted_h2(L, w1);
  ASSERT_EQ(q.dim(), 1u);
  EXPECT_TRUE(q.total.contains(D(7, 2, 5, 1).flat()));
  EXPECT_FALSE(q.sub.contains(D(7, 2, 5, 1).flat()));
  WeightAction w2 = outer_weight(7, {Scalar(-3), Scalar(-2)});
  EXPECT_EQ(twisted_cocycles(L, w2).dim(), 7u);
}

TEST(TwistedCohomology, S1CoboundaryDrop) {
  LieAlgebra L = cat(Family::S1, 6, {Scalar(2)});
  EXPECT_EQ(twisted_coboundaries(L, outer_weight(7, {Scalar(-1)})).dim(), 5u);
  EXPECT_EQ(twisted_coboundaries(L, outer_weight(7, {Scalar(3)})).dim(), 6u);
  // beta + gamma = 0 drops one more
  EXPECT_EQ(twisted_coboundaries(L, outer_weight(7, {Scalar(-2)})).dim(), 5u);
}

TEST(TwistedCohomology, S2Dimensions) {
  LieAlgebra L = cat(Family::S2, 5);
  auto q1 = twisted_h2(L, outer_weight(6, {Scalar(-1)}));
  EXPECT_EQ(q1.dim(), 2u);
  EXPECT_TRUE(q1.total.contains(D(6, 1, 3, 1).flat()));
  EXPECT_EQ(twisted_h2(L, outer_weight(6, {Scalar(-2)})).dim(), 2u);
  EXPECT_EQ(twisted_h2(L, outer_weight(6, {Scalar(7)})).dim(), 0u);
}

TEST(TwistedCohomology, GenericS1MatchesOracle) {
  LieAlgebra L = cat(Family::S1, 5, {Scalar(2)});
  WeightAction th = outer_weight(6, {Scalar(5)});
  EXPECT_EQ(twisted_cocycles(L, th).dim(), cocycle_dim_oracle(L, th.weights));
  EXPECT_EQ(twisted_cocycles(L, th).dim(), twisted_coboundaries(L, th).dim());
}

TEST(TwistedCohomology, RandomWeightsMatchOracle) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-8, 8);
  for (std::size_t n = 4; n <= 7; ++n) {
    for (int t = 0; t < 3; ++t) {
      Scalar g = frac(d(rng), 1 + (d(rng) + 8) % 3);
      expect_matches_oracle(cat(Family::S1, n, {frac(d(rng), 2)}), outer_weight(n + 1, {g}), "s1");
      expect_matches_oracle(cat(Family::S2, n), outer_weight(n + 1, {g}), "s2");
      expect_matches_oracle(cat(Family::S3, n), outer_weight(n + 1, {g}), "s3");
      expect_matches_oracle(cat(Family::SN2, n), outer_weight(n + 2, {g, frac(d(rng), 1)}), "sn2");
    }
    expect_matches_oracle(cat(Family::SN2, n), outer_weight(n + 2, {Scalar(1 - static_cast<long>(n)), Scalar(-1)}), "sn2 special");
    expect_matches_oracle(cat(Family::S2, n), outer_weight(n + 1, {Scalar(-1)}), "s2 -1");
    expect_matches_oracle(cat(Family::S3, n), outer_weight(n + 1, {Scalar(-static_cast<long>(n))}), "s3 -n");
  }
}

TEST(TwistedCohomology, CoboundariesAreCocycles) {
  for (std::size_t n = 4; n <= 9; ++n) {
    LieAlgebra L = cat(Family::S4, n, std::vector<Scalar>(n - 3, frac(1, 2)));
    for (long g : {-2, -1, 3}) {
      WeightAction th = outer_weight(n + 1, {Scalar(g)});
      EXPECT_TRUE(twisted_cocycles(L, th).contains(twisted_coboundaries(L, th)));
    }
  }
}

TEST(TwistedCohomology, RejectsBadWeight) {
  LieAlgebra L = cat(Family::S2, 5);
  WeightAction th = zero_weight(6);
  th.weights[2] = 1;  // nonzero on e2
  try {
    twisted_cocycles(L, th);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidWeight);
  }
  EXPECT_THROW(twisted_cocycles(L, zero_weight(5)), Error);
}

TEST(Annihilator, Examples) {
  LieAlgebra n5 = cat(Family::NN1, 5);
  EXPECT_EQ(annihilator(n5, Cocycle(5)), Subspace::whole(5));
  EXPECT_EQ(annihilator(n5, D(5, 0, 5, 1)), Subspace::span(5, {unit_vector(5, 1), unit_vector(5, 2), unit_vector(5, 3)}));
  EXPECT_TRUE(t1_condition(n5, D(5, 0, 5, 1)));
  EXPECT_FALSE(t1_condition(n5, Cocycle(5)));
  for (std::size_t m = 3; m <= 6; ++m) {
    LieAlgebra q = cat(Family::Q, 2 * m);
    Subspace Z = central_cocycles(q);
    for (const auto& v : Z.vectors()) {
      Cocycle psi = Cocycle::from_flat(2 * m, v);
      EXPECT_TRUE(annihilator(q, psi).contains(center(q)));
      EXPECT_FALSE(t1_condition(q, psi));
    }
  }
}

TEST(Restriction, Examples) {
  CatalogId id = make_id(Family::SN2, 5);
  LieAlgebra L = make_catalog(id);
  Subspace nil = nilradical_solvable(L);
  Cocycle outer(7);
  outer.add(0, 3, 1);
  outer.add(1, 5, 2);
  EXPECT_TRUE(restrict_to_nilradical(L, outer, nil).is_zero());
  EXPECT_EQ(restrict_to_nilradical(L, D(7, 2, 5, 1), nil), D(5, 0, 5, 1));
  // s1 case 3 pairing restricts to the pairing on n_{n,1}
  const std::size_t n = 7;
  CatalogId s1 = make_id(Family::S1, n, {Scalar(1)});
  LieAlgebra S = make_catalog(s1);
  Cocycle pair = pairing_cocycle(n + 1, 1, (n + 1) / 2);
  EXPECT_EQ(restrict_to_nilradical(S, pair, nilradical_solvable(S)), pairing_cocycle(n, 0, (n + 1) / 2));
}
