#include <gtest/gtest.h>

#include <random>

#include "lieext/subspace.hpp"

using namespace lieext;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> v;
  std::size_t cols = 0;
  for (auto r : rows) {
    Vector row;
    for (long x : r) row.push_back(Scalar(x));
    cols = row.size();
    v.push_back(row);
  }
  return Matrix::from_rows(v, cols);
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  std::uniform_int_distribution<long> val(-4, 4), z(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) >= zero_bias) m(i, j) = frac(val(rng), 1 + static_cast<long>(z(rng) % 3));
  return m;
}

}  // namespace

TEST(Scalar, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_scalar("3"), Scalar(3));
  EXPECT_EQ(parse_scalar("-3"), Scalar(-3));
  EXPECT_EQ(parse_scalar("+7"), Scalar(7));
  EXPECT_EQ(parse_scalar("6/4"), frac(3, 2));
  EXPECT_EQ(to_string(parse_scalar("-10/4")), "-5/2");
}

TEST(Scalar, ParseRejectsFloatsAndJunk) {
  for (const char* bad : {"", "0.5", "1e3", "1/0", " 1", "1/", "/2", "1/2/3", "abc", "-"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << bad;
    }
  }
}

TEST(Scalar, FracIsCanonical) {
  Scalar a = frac(4, -6);
  EXPECT_EQ(a.get_num(), -2);
  EXPECT_EQ(a.get_den(), 3);
  EXPECT_EQ(a, frac(-2, 3));
  EXPECT_THROW(frac(1, 0), std::domain_error);
}

TEST(Scalar, PowAndRoots) {
  EXPECT_EQ(pow(frac(2, 3), 3), frac(8, 27));
  EXPECT_EQ(pow(frac(2, 3), -2), frac(9, 4));
  EXPECT_EQ(pow(Scalar(5), 0), Scalar(1));
  Scalar r;
  ASSERT_TRUE(rational_root(Scalar(16), 4, r));
  EXPECT_EQ(r, Scalar(2));
  ASSERT_TRUE(rational_root(frac(-8, 27), 3, r));
  EXPECT_EQ(r, frac(-2, 3));
  EXPECT_FALSE(rational_root(Scalar(3), 4, r));
  EXPECT_FALSE(rational_root(Scalar(-4), 2, r));
}

TEST(Rref, DependentRows) {
  auto r = rref(mat({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(r.reduced.row(0), vec({1, 2}));
  EXPECT_EQ(r.reduced.rows(), 1u);
}

TEST(Rref, IdentityAndFullRank) {
  auto r = rref(Matrix::identity(3));
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  auto s = rref(mat({{1, 1}, {1, -1}}));
  EXPECT_EQ(s.reduced, Matrix::identity(2));
  EXPECT_EQ(s.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix(2, 3)), Subspace::whole(3));
  Subspace k = kernel_basis(mat({{1, 0, 0}}));
  EXPECT_EQ(k, Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})}));
  Subspace k2 = kernel_basis(mat({{1, 1, 1}, {0, 1, 2}}));
  EXPECT_EQ(k2, Subspace::span(3, {vec({1, -2, 1})}));
}

TEST(Kernel, SparseAndDenseAgree) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(rng, 4, 6, 5);
    Echelon e(6);
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    EXPECT_EQ(kernel_basis(m), kernel_basis(e));
  }
}

TEST(Intersect, Examples) {
  Subspace a = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Subspace b = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(subspace_intersect(a, b), Subspace::span(3, {vec({0, 1, 0})}));
  EXPECT_EQ(subspace_intersect(a, a), a);
  Subspace c = Subspace::span(3, {vec({1, 1, 0})});
  EXPECT_EQ(subspace_intersect(c, a), c);
  EXPECT_THROW(subspace_intersect(a, Subspace(4)), Error);
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_basis(Subspace::whole(3), Subspace(3)).dim(), 3u);
  EXPECT_EQ(quotient_basis(Subspace::whole(3), Subspace::whole(3)).dim(), 0u);
  Subspace line = Subspace::span(3, {vec({1, 1, 0})});
  EXPECT_THROW(quotient_basis(line, Subspace::whole(3)), Error);
}

TEST(MemberCoords, Examples) {
  Subspace s = Subspace::span(3, {vec({1, 0, 2}), vec({0, 1, -1})});
  auto z = member_coords(zero_vector(3), s);
  ASSERT_TRUE(z);
  EXPECT_EQ(*z, zero_vector(2));
  auto u = member_coords(s.vector(1), s);
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, vec({0, 1}));
  EXPECT_FALSE(member_coords(vec({1, 1}), Subspace::span(2, {vec({1, 0})})));
  EXPECT_THROW(member_coords(vec({1, 1}), s), Error);
}

TEST(Solve, InverseAndSingular) {
  Matrix m = mat({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(mat({{1, 2}, {2, 4}})));
  auto x = solve(m, vec({3, 2}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec({1, 1}));
  EXPECT_FALSE(solve(mat({{1, 2}, {2, 4}}), vec({1, 0})));
}

// invariants on random matrices
TEST(RatlinProperty, RankNullity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 80; ++t) {
    Matrix m = random_matrix(rng, 1 + t % 5, 2 + t % 6, 4);
    Subspace k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.dim(), m.cols());
    for (const auto& v : k.vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
    auto r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
  }
}

TEST(RatlinProperty, IntersectionIsCommonAndSymmetric) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    Matrix ma = random_matrix(rng, 3, 5, 4), mb = random_matrix(rng, 3, 5, 4);
    Subspace a = Subspace::span(5, ma.row_list()), b = Subspace::span(5, mb.row_list());
    Subspace i = subspace_intersect(a, b);
    EXPECT_EQ(i, subspace_intersect(b, a));
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_EQ(i.dim() + subspace_sum(a, b).dim(), a.dim() + b.dim());
    QuotientSpace q = quotient_basis(subspace_sum(a, b), a);
    EXPECT_EQ(q.dim() + a.dim(), subspace_sum(a, b).dim());
  }
}
