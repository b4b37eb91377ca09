#include <gtest/gtest.h>

#include "lieext/lieext.hpp"

using namespace lieext;

namespace {

std::string data(const std::string& f) { return std::string(LIEEXT_TEST_DATA) + "/" + f; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InternalCheckFailed;
}

}  // namespace

TEST(AlgebraIO, JsonFileN41) {
  LieAlgebra L = parse_algebra_file(data("n41.json"));
  EXPECT_EQ(L.dim(), 4u);
  EXPECT_TRUE(structure_equal(L, make_catalog(make_id(Family::NN1, 4))));
}

TEST(AlgebraIO, TextFileS52) {
  LieAlgebra L = parse_algebra_file(data("s52.txt"));
  EXPECT_EQ(L.dim(), 7u);
  EXPECT_TRUE(is_solvable(L));
  EXPECT_FALSE(is_nilpotent(L));
  EXPECT_TRUE(structure_equal(L, make_catalog(make_id(Family::SN2, 5))));
  EXPECT_EQ(L.labels(), make_catalog(make_id(Family::SN2, 5)).labels());
}

TEST(AlgebraIO, SignConflict) {
  try {
    parse_algebra_file(data("sign_conflict.txt"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("antisymmetry conflict"), std::string::npos) << e.what();
  }
  // the same bracket repeated consistently is fine
  EXPECT_NO_THROW(parse_algebra_string("dim 3\n[e2,e1] = e3\n[e1,e2] = -e3\n"));
}

TEST(AlgebraIO, RejectsNonLieTables) {
  EXPECT_EQ(code_of([] { parse_algebra_file(data("not_lie.txt")); }), Errc::JacobiFailure);
}

TEST(AlgebraIO, ParseErrors) {
  for (const char* bad : {"", "labels a b\n[a,c] = b\n", "dim 3\n[e2,e1] = 0.5 e3\n", "dim 3\n[e2,e1] e3\n", "labels a a\n",
                          "dim 3\nfoo\n", "{\"dim\": 2, \"brackets\": [{\"i\": 1, \"j\": 0, \"terms\": []}]}",
                          "{\"dim\": 2, \"brackets\": [{\"i\": 0, \"j\": 1, \"terms\": [{\"coeff\": 1, \"k\": 0}]}]}", "{\"dim\": 2,"})
    EXPECT_EQ(code_of([&] { parse_algebra_string(bad); }), Errc::ParseError) << bad;
  EXPECT_EQ(code_of([] { parse_algebra_file(data("missing.txt")); }), Errc::ParseError);
}

TEST(AlgebraIO, RoundTrip) {
  for (const char* id : {"nn1:6", "q:8", "s1:6:beta=3/2", "s4:6:a3=1/2,a5=-2", "sn2:5", "tau22:6", "tau3:8:a4=2", "ltk:7:k=2", "lk:7:k=3"}) {
    LieAlgebra L = make_catalog(parse_catalog_id(id));
    LieAlgebra a = parse_algebra_string(algebra_to_text(L));
    LieAlgebra b = parse_algebra_string(algebra_to_json(L).dump());
    EXPECT_TRUE(structure_equal(a, L)) << id;
    EXPECT_TRUE(structure_equal(b, L)) << id;
    EXPECT_EQ(a.labels(), L.labels());
    EXPECT_EQ(algebra_to_text(a), algebra_to_text(L));
  }
}

TEST(CocycleIO, ParseAndPrint) {
  LieAlgebra L = make_catalog(make_id(Family::NN1, 5));
  Cocycle c = parse_cocycle("2/3 D(e4,e1) - D(e2,e3)", L.labels());
  Cocycle want = frac(2, 3) * delta(5, 3, 0) - delta(5, 1, 2);
  EXPECT_EQ(c, want);
  EXPECT_EQ(parse_cocycle(cocycle_to_text(c, L.labels()), L.labels()), c);
  EXPECT_EQ(parse_cocycle("D(e1,e2) + D(e2,e1)", L.labels()), Cocycle(5));
  for (const char* bad : {"D(e1,e1)", "D(e1,e9)", "D(e1 e2)", "0.5 D(e1,e2)", "E(e1,e2)"})
    EXPECT_EQ(code_of([&] { parse_cocycle(bad, L.labels()); }), Errc::ParseError) << bad;
}
