#include "test_util.hpp"

using namespace symfact;
using namespace symfact::testing;

namespace {

MultiPoly mbar(std::initializer_list<int> parts) { return monomial_sym(Partition(parts)).normalized; }

}  // namespace

TEST(MonomialH, Examples) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  MultiPoly p = x1 * x1 + x2 * x2;
  EXPECT_EQ(monomial::H_apply(1, p), p * Rational(2));
  EXPECT_TRUE(monomial::H_apply(2, p).is_zero());
  EXPECT_EQ(monomial::H_apply(2, x1 * x2), x1 * x2);
}

TEST(MonomialQ, Eigenvalues) {
  EXPECT_EQ(monomial::q(Partition{2, 0}), (Z() * Z() + U(1)) * R("1/2"));
  EXPECT_EQ(monomial::q(Partition{0, 0, 0}), U(1));
  EXPECT_EQ(monomial::q(Partition{2, 1, 0}), (Z() * Z() + Z() + U(1)) * R("1/3"));
}

TEST(MonomialQ, Apply) {
  MultiPoly m = mbar({2, 0});
  MultiPoly z = X(3, 2), one = C(3, 1);
  EXPECT_EQ(monomial::Q_apply(m), extend_arity(m, {"z"}) * (z * z + one) * R("1/2"));
  EXPECT_EQ(monomial::Q_apply(C(2, 1)), C(3, 1));
  // Non-symmetric input through the substitution formula.
  EXPECT_EQ(monomial::Q_apply(X(2, 0)), (z * X(3, 0) + X(3, 0)) * R("1/2"));
}

TEST(MonomialA, Examples) {
  auto x1 = X(2, 0), x2 = X(2, 1), one = C(2, 1);
  MultiPoly a2 = monomial::A_apply(2, 2, mbar({2, 0}));
  EXPECT_EQ(a2, (x1 * x1 * x2 * x2 + x1 * x1 + x2 * x2 + one) * R("1/4"));
  MultiPoly f = x1 * x1 * x2 + C(2, 3) * x2;
  EXPECT_EQ(monomial::A_apply(1, 2, f), f);
  MultiPoly g = x1 * x1 + x2 * x2;
  EXPECT_EQ(monomial::A_inverse_apply(2, 2, monomial::A_apply(2, 2, g)), g);
}

TEST(MonomialA, InverseOnRandomPolynomials) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      MultiPoly g = random_poly(rng, n, 6, 6);
      for (std::size_t k = 1; k <= n; ++k) {
        EXPECT_EQ(monomial::A_inverse_apply(k, n, monomial::A_apply(k, n, g)), g);
        EXPECT_EQ(monomial::A_apply(k, n, monomial::A_inverse_apply(k, n, g)), g);
      }
    }
}

TEST(MonomialS, Examples) {
  MultiPoly z1 = X(2, 0), z2 = X(2, 1), one = C(2, 1);
  EXPECT_EQ(monomial::S_apply(mbar({2, 0})), (z1 * z1 + one) * (z2 * z2 + one) * R("1/4"));
  EXPECT_EQ(monomial::S_apply(C(2, 1)), C(2, 1));
  EXPECT_EQ(monomial::S_apply(mbar({1, 1})), z1 * z2);
  EXPECT_EQ(monomial::S_apply(mbar({2, 0})).names(), default_names("z", 2));
}

TEST(MonomialS, ChainOutputIsSymmetric) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto parts = enumerate_partitions(5, n);
    for (int t = 0; t < 6; ++t) {
      MultiPoly f(n);
      for (int i = 0; i < 3; ++i) f += monomial_sym(parts[rng() % parts.size()]).raw * verify::random_rational(rng);
      EXPECT_TRUE(is_symmetric(monomial::S_by_chain(f)));
      EXPECT_EQ(monomial::S_by_chain(f), monomial::S_by_q_composition(f));
    }
  }
}

TEST(MonomialS, RejectsNonSymmetric) { EXPECT_THROW(monomial::S_apply(X(2, 0)), NotSymmetric); }

TEST(MonomialQ0prime, Examples) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(monomial::Q0prime_apply(X(1, 0)), (x1 + x2) * R("1/2"));
  EXPECT_EQ(monomial::Q0prime_apply(C(1, 1)), C(2, 1));
  EXPECT_EQ(monomial::Q0prime_apply(X(1, 0) * X(1, 0)), mbar({2, 0}));
}

TEST(MonomialQ, CommuteOnRandomSymmetric) {
  std::mt19937_64 rng(9);
  auto parts = enumerate_partitions(4, 3);
  for (int t = 0; t < 5; ++t) {
    MultiPoly f(3);
    for (int i = 0; i < 3; ++i) f += monomial_sym(parts[rng() % parts.size()]).raw * verify::random_rational(rng);
    MultiPoly a = monomial::Q_apply(monomial::Q_apply(f, 3, "z2"), 3, "z1");
    MultiPoly b = monomial::Q_apply(monomial::Q_apply(f, 3, "z1"), 3, "z2");
    EXPECT_EQ(a, remap_slots(b, {0, 1, 2, 4, 3}, a.names()));
  }
}
