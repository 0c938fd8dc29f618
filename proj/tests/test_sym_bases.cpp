#include "test_util.hpp"

using namespace symfact;
using namespace symfact::testing;

TEST(MonomialSym, Examples) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  auto m20 = monomial_sym(Partition{2, 0});
  EXPECT_EQ(m20.raw, x1 * x1 + x2 * x2);
  EXPECT_EQ(m20.normalized, (x1 * x1 + x2 * x2) * R("1/2"));
  auto m11 = monomial_sym(Partition{1, 1});
  EXPECT_EQ(m11.raw, x1 * x2);
  EXPECT_EQ(m11.normalized, x1 * x2);
  auto m210 = monomial_sym(Partition{2, 1, 0});
  EXPECT_EQ(m210.raw.size(), 6u);
  for (const auto& [e, c] : m210.normalized.terms()) EXPECT_EQ(c, R("1/6"));
}

TEST(ElementarySym, Examples) {
  EXPECT_EQ(elementary_sym(0, 3), C(3, 1));
  EXPECT_EQ(elementary_sym(2, 3), X(3, 0) * X(3, 1) + X(3, 0) * X(3, 2) + X(3, 1) * X(3, 2));
  EXPECT_EQ(coefficient_of_last_slot(elementary_generating_function(3), 2), elementary_sym(2, 3));
  EXPECT_THROW(elementary_sym(4, 3), std::out_of_range);
}

TEST(EPoly, Examples) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(E_poly(Partition{1, 0}).raw, x1 + x2);
  EXPECT_EQ(E_poly(Partition{1, 0}).normalized, (x1 + x2) * R("1/2"));
  EXPECT_EQ(E_poly(Partition{1, 1}).normalized, x1 * x2);
  auto e21 = E_poly(Partition{2, 1});
  EXPECT_EQ(e21.raw, (x1 + x2) * x1 * x2);
  EXPECT_EQ(evaluate(e21.normalized, {1, 1}), 1);
}

TEST(SchurPoly, Examples) {
  auto s10 = schur_poly(Partition{1, 0});
  EXPECT_EQ(s10.raw, X(2, 0) + X(2, 1));
  EXPECT_EQ(s10.valueAtOne, 2);
  EXPECT_EQ(schur_poly(Partition{0, 0, 0}).raw, C(3, 1));
  auto s110 = schur_poly(Partition{1, 1, 0});
  EXPECT_EQ(s110.raw, elementary_sym(2, 3));
  EXPECT_EQ(s110.valueAtOne, 3);
  EXPECT_EQ(schur_poly(Partition{2, 0}).raw, X(2, 0) * X(2, 0) + X(2, 0) * X(2, 1) + X(2, 1) * X(2, 1));
}

TEST(SchurPoly, KnownExpansionsIntoMonomials) {
  // s_(2,1,0) = m_(2,1,0) + 2 m_(1,1,1)
  auto x = expand_in_basis(schur_poly(Partition{2, 1, 0}).raw, Basis::Monomial);
  std::map<Partition, Rational> want{{Partition{2, 1, 0}, 1}, {Partition{1, 1, 1}, 2}};
  EXPECT_EQ(x.coeffs, want);
}

TEST(RestrictedSchur, Examples) {
  auto r1 = restricted_schur(Partition{1, 0}, 1);
  EXPECT_EQ(r1.ratio(), MultiPoly::constant(0, 2));
  auto r2 = restricted_schur(Partition{1, 0}, 2);
  MultiPoly z = MultiPoly::variable(1, 0), one = MultiPoly::constant(1, 1);
  EXPECT_EQ(r2.numerator, z * z - one);
  EXPECT_EQ(r2.denominator, z - one);
  EXPECT_EQ(r2.ratio(), z + one);
  // k = n: the unrestricted bialternant in n-1 free variables plus x_n = 1.
  auto lam = Partition{2, 1, 0};
  auto s = schur_poly(lam).raw;
  EXPECT_EQ(restricted_schur(lam, 3).ratio(), project(specialize(s, {2}, Rational(1)), {0, 1}));
}

TEST(Expansion, Examples) {
  auto x = expand_in_basis(elementary_sym(2, 3), Basis::Schur);
  EXPECT_EQ(x.coeffs, (std::map<Partition, Rational>{{Partition{1, 1, 0}, 1}}));
  auto y = expand_in_basis(schur_poly(Partition{2, 0}).raw, Basis::Monomial);
  EXPECT_EQ(y.coeffs, (std::map<Partition, Rational>{{Partition{2, 0}, 1}, {Partition{1, 1}, 1}}));
  EXPECT_TRUE(expand_in_basis(MultiPoly(3), Basis::Elementary).coeffs.empty());
  EXPECT_THROW(expand_in_basis(X(2, 0), Basis::Schur), NotSymmetric);
}

TEST(Expansion, BasisElementsExpandToThemselves) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate_partitions(6, n))
      for (Basis b : {Basis::Monomial, Basis::Elementary, Basis::Schur}) {
        auto x = expand_in_basis(basis_poly(b, lambda).raw, b);
        EXPECT_EQ(x.coeffs, (std::map<Partition, Rational>{{lambda, 1}}))
            << basis_tag(b) << " " << to_string(lambda);
      }
}

TEST(Expansion, RoundTripAndTriangularity) {
  for (std::size_t n = 1; n <= 4; ++n) {
    verify::Options o;
    o.n = n;
    o.seed = 100 + n;
    EXPECT_TRUE(all_pass(verify::roundtrip_checks(o)));
  }
}

TEST(RestrictedSchur, LemmaSweep) {
  for (std::size_t n = 1; n <= 4; ++n) {
    verify::Options o;
    o.n = n;
    EXPECT_TRUE(all_pass(verify::restricted_schur_checks(o)));
  }
}

TEST(BasisTags, Parse) {
  EXPECT_EQ(parse_basis("m"), Basis::Monomial);
  EXPECT_EQ(parse_basis("E"), Basis::Elementary);
  EXPECT_EQ(parse_basis("e"), Basis::Elementary);
  EXPECT_EQ(parse_basis("S"), Basis::Schur);
  EXPECT_THROW(parse_basis("q"), std::exception);
}
