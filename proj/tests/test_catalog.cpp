#include <gtest/gtest.h>

#include "lieext/lieext.hpp"

using namespace lieext;

namespace {

// nonzero brackets as "[a,b]=c*t" strings, for spelling out small tables
std::set<std::string> table_strings(const LieAlgebra& L) {
  std::set<std::string> out;
  for (const auto& [ij, terms] : L.entries())
    for (const auto& t : terms)
      out.insert("[" + L.label(ij.first) + "," + L.label(ij.second) + "]=" + to_string(t.coeff) + "*" + L.label(t.k));
  return out;
}

}  // namespace

TEST(Catalog, NN1Five) {
  LieAlgebra L = make_catalog(make_id(Family::NN1, 5));
  EXPECT_EQ(L.labels(), (std::vector<std::string>{"e1", "e2", "e3", "e4", "e5"}));
  // only [e_i,e_1]=e_{i+1}; stored with i<j, so [e1,e_i] = -e_{i+1}
  EXPECT_EQ(table_strings(L), (std::set<std::string>{"[e1,e2]=-1*e3", "[e1,e3]=-1*e4", "[e1,e4]=-1*e5"}));
}

TEST(Catalog, SN2Five) {
  LieAlgebra L = make_catalog(make_id(Family::SN2, 5));
  EXPECT_EQ(L.labels(), (std::vector<std::string>{"x1", "x2", "e1", "e2", "e3", "e4", "e5"}));
  auto has = [&](const char* a, const char* b, const Vector& want) {
    EXPECT_EQ(L.bracket(unit_vector(7, L.index_of(a)), unit_vector(7, L.index_of(b))), want) << a << "," << b;
  };
  has("e1", "x1", unit_vector(7, 2));
  has("e2", "x1", zero_vector(7));
  for (long i = 3; i <= 5; ++i) has(("e" + std::to_string(i)).c_str(), "x1", Scalar(i - 2) * unit_vector(7, i + 1));
  for (long i = 2; i <= 5; ++i) has(("e" + std::to_string(i)).c_str(), "x2", unit_vector(7, i + 1));
  has("e1", "x2", zero_vector(7));
  has("x1", "x2", zero_vector(7));
}

TEST(Catalog, LkSevenK2) {
  LieAlgebra L = make_catalog(make_id(Family::LK, 7, {Scalar(2)}));
  // chain of n_{7,1} plus [e2,e3] = e7
  auto s = table_strings(L);
  EXPECT_TRUE(s.count("[e2,e3]=1*e7"));
  EXPECT_TRUE(s.count("[e1,e6]=-1*e7"));
  EXPECT_TRUE(s.count("[e1,e5]=-1*e6"));
  EXPECT_EQ(s.size(), 6u);
}

TEST(Catalog, EveryFamilyIsALieAlgebra) {
  for (std::size_t n = 4; n <= 10; ++n)
    for (const auto& [f, name] : family_names()) {
      std::vector<Scalar> p(param_names(f, n).size(), frac(3, 2));
      if (f == Family::LK || f == Family::LTILDE_K) {
        if (n < 5) continue;
        p = {Scalar(2)};
      }
      if ((f == Family::Q || f == Family::TAU1 || f == Family::TAU2 || f == Family::TAU3 || f == Family::TAU22) && (n < 6 || n % 2))
        continue;
      EXPECT_NO_THROW(make_catalog(make_id(f, n, p))) << name << " " << n;
    }
}

TEST(Catalog, ParseIds) {
  EXPECT_EQ(parse_catalog_id("nn1:7"), make_id(Family::NN1, 7));
  EXPECT_EQ(parse_catalog_id("s1:6:beta=3/2"), make_id(Family::S1, 6, {frac(3, 2)}));
  EXPECT_EQ(parse_catalog_id("s4:6:a4=1"), make_id(Family::S4, 6, {Scalar(0), Scalar(1), Scalar(0)}));
  EXPECT_EQ(to_string(parse_catalog_id("lk:7:k=2")), "lk:7:k=2");
  for (const char* bad : {"nn1", "nn1:x", "zz:5", "s1:6", "s1:6:gamma=1", "s4:6:a3=1,a3=2", "q:7", "lk:7:k=4", "nn1:2", "s1:6:beta=0.5"})
    EXPECT_THROW(parse_catalog_id(bad), Error) << bad;
}

TEST(Catalog, TamperedTableIsRejected) {
  // make_catalog verifies Jacobi; a corrupted copy must not pass the same audit
  LieAlgebra L = make_catalog(make_id(Family::S3, 5));
  BracketTable t = L.to_table();
  t.add(L.index_of("e2"), L.index_of("x"), L.index_of("e2"), 1);
  EXPECT_FALSE(jacobi_violations(LieAlgebra(L.labels(), t)).empty());
}

TEST(Catalog, StructureEqualExamples) {
  LieAlgebra n5 = make_catalog(make_id(Family::NN1, 5));
  EXPECT_TRUE(structure_equal(n5, n5));
  // Q-pattern at dim 5: chain to e4 plus [e2,e3] = e5 style pairing
  BracketTable t(5);
  for (std::size_t i = 1; i <= 2; ++i) t.add(i, 0, i + 1, 1);
  t.add(1, 2, 4, 1);
  EXPECT_FALSE(structure_equal(n5, LieAlgebra(n5.labels(), t)));
  EXPECT_TRUE(structure_equal(central_extend(n5, delta(5, 4, 0)), make_catalog(make_id(Family::NN1, 6))));
}

TEST(Catalog, GradedTypeAndDiagonalAction) {
  for (std::size_t n = 4; n <= 12; ++n) EXPECT_EQ(graded_filiform_type(make_catalog(make_id(Family::NN1, n))), FiliformType::TypeNN1);
  for (std::size_t n = 6; n <= 12; n += 2) EXPECT_EQ(graded_filiform_type(make_catalog(make_id(Family::Q, n))), FiliformType::TypeQ);
  // the outer generators of the codimension-one families act diagonally on e2..en
  for (Family f : {Family::S1, Family::S2, Family::SN2}) {
    CatalogId id = make_id(f, 6, std::vector<Scalar>(param_names(f, 6).size(), frac(1, 3)));
    LieAlgebra L = make_catalog(id);
    Matrix a = L.ad(0);
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        if (i == j) continue;
        EXPECT_TRUE(is_zero(a(i, j))) << to_string(id);
      }
  }
}
