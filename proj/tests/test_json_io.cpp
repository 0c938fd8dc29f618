#include "test_util.hpp"

using namespace symfact;
using namespace symfact::testing;

TEST(Json, PolynomialRoundTripAndOrder) {
  MultiPoly f = monomial_sym(Partition{2, 0}).normalized + X(2, 0) * X(2, 1) * R("-3/4") + C(2, 5);
  json j = to_json(f);
  EXPECT_EQ(j.dump(),
            R"({"vars":["x1","x2"],"terms":[{"e":[2,0],"c":"1/2"},{"e":[1,1],"c":"-3/4"},{"e":[0,2],"c":"1/2"},{"e":[0,0],"c":"5"}]})");
  MultiPoly back = multipoly_from_json(j);
  EXPECT_EQ(back, f);
  EXPECT_EQ(back.names(), f.names());
}

TEST(Json, PolynomialErrors) {
  EXPECT_THROW(multipoly_from_json(json::parse(R"({"vars":["x"],"terms":[{"e":[1,2],"c":"1"}]})")), StructuralError);
  EXPECT_THROW(multipoly_from_json(json::parse(R"({"vars":["x"],"terms":[{"e":[1],"c":"1/0"}]})")), std::exception);
  EXPECT_THROW(multipoly_from_json(json::parse(R"({"terms":[]})")), StructuralError);
}

TEST(Json, Expansion) {
  auto x = expand_in_basis(elementary_sym(2, 3), Basis::Schur);
  json j = to_json(x);
  EXPECT_EQ(j.dump(), R"({"basis":"s","n":3,"coeffs":[{"lambda":[1,1,0],"c":"1"}]})");
  EXPECT_EQ(expansion_from_json(j), x);
}

TEST(Json, UniPoly) { EXPECT_EQ(to_json(schur::q(Partition{1, 1, 0})).dump(), R"(["1/3","2/3"])"); }
