// Identity sweeps at small sizes; the acceptance binary runs the full sweeps.

#include "test_util.hpp"

using namespace symfact;
using namespace symfact::testing;

namespace {

verify::Options small(std::size_t n, int w) {
  verify::Options o;
  o.n = n;
  o.maxWeight = w;
  o.samples = 20;
  return o;
}

}  // namespace

class Sweep : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Sweep, Eigen) { EXPECT_TRUE(all_pass(verify::eigen_checks(small(GetParam(), 4)))); }
TEST_P(Sweep, Commutativity) { EXPECT_TRUE(all_pass(verify::commutativity_checks(small(GetParam(), 3)))); }
TEST_P(Sweep, Chain) { EXPECT_TRUE(all_pass(verify::chain_checks(small(GetParam(), 3)))); }
TEST_P(Sweep, Inverse) { EXPECT_TRUE(all_pass(verify::inverse_checks(small(GetParam(), 3)))); }
TEST_P(Sweep, Ode) { EXPECT_TRUE(all_pass(verify::ode_checks(small(GetParam(), 4)))); }

TEST_P(Sweep, Lifting) {
  if (GetParam() < 2) GTEST_SKIP() << "lifting needs n >= 2";
  EXPECT_TRUE(all_pass(verify::lifting_checks(small(GetParam(), 4))));
}

INSTANTIATE_TEST_SUITE_P(N, Sweep, ::testing::Values(1, 2, 3));

TEST(Suites, QuadratureSelectsOneConvention) {
  for (std::size_t n : {2u, 3u}) {
    auto o = small(n, 4);
    o.triples = 8;
    auto r = verify::quadrature_checks(o);
    EXPECT_TRUE(all_pass(r));
    for (const auto& rec : r.records)
      if (rec.identity == "Q_z integral") EXPECT_EQ(rec.convention, "(z-1)^-(n-1)");
  }
}

TEST(Suites, UnknownSuiteRejected) { EXPECT_THROW(verify::run_suite("nope", small(2, 1)), StructuralError); }

TEST(Suites, TrivialAllRun) {
  auto r = verify::run_suite("all", small(1, 0));
  EXPECT_TRUE(r.passed());
}

TEST(Suites, FailureIsReported) {
  verify::Report rep{"x", {}};
  rep.records.push_back(verify::poly_record("identity", 2, Partition{1, 0}, "", X(2, 0), X(2, 1)));
  EXPECT_FALSE(rep.passed());
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->oracle, "x1");
  EXPECT_EQ(rep.first_failure()->computed, "x2");
}
