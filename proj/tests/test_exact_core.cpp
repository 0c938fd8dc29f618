#include "test_util.hpp"

using namespace symfact;
using namespace symfact::testing;

TEST(Rational, ParseCanonical) {
  EXPECT_EQ(to_string(R("6/4")), "3/2");
  EXPECT_EQ(to_string(R("-10/5")), "-2");
  EXPECT_EQ(to_string(R("0/7")), "0");
  EXPECT_EQ(R("0").get_den(), 1);
  EXPECT_EQ(to_string(ratio(-4, 6)), "-2/3");
  EXPECT_THROW(R("1/0"), std::exception);
  EXPECT_THROW(R("abc"), std::exception);
  EXPECT_THROW(R(""), std::exception);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(pow(R("2/3"), 3), R("8/27"));
  EXPECT_EQ(pow(R("2/3"), -2), R("9/4"));
}

TEST(MultiPoly, Arithmetic) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ((x1 + x2) * (x1 - x2), x1 * x1 - x2 * x2);
  MultiPoly f = x1 * x1 + C(2, R("3/2")) * x2;
  EXPECT_EQ(f + MultiPoly(2), f);
  EXPECT_EQ((x1 + x2) * (x1 * x2), MultiPoly::monomial({2, 1}) + MultiPoly::monomial({1, 2}));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).size(), 0u);
}

TEST(MultiPoly, NoZeroTermsAndArity) {
  MultiPoly f(2);
  f.add_term({1, 0}, 3);
  f.add_term({1, 0}, -3);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(X(2, 0) + X(3, 0), StructuralError);
}

TEST(MultiPoly, DivideExact) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  EXPECT_EQ(divide_exact(x1 * x1 - x2 * x2, x1 - x2), x1 + x2);
  MultiPoly f = x1 * x1 * x2 + C(2, 7);
  EXPECT_EQ(divide_exact(f, C(2, 1)), f);
  EXPECT_EQ(divide_exact(alternant({2, 0}), vandermonde(2)), x1 + x2);
  EXPECT_THROW(divide_exact(x1 * x1 + x2, x1 - x2), NotDivisible);
}

TEST(MultiPoly, Determinant) {
  auto x1 = X(2, 0), x2 = X(2, 1);
  Matrix<MultiPoly> m{{x1 * x1, C(2, 1)}, {x2 * x2, C(2, 1)}};
  EXPECT_EQ(poly_det(m), x1 * x1 - x2 * x2);
  Matrix<MultiPoly> id{{C(2, 1), C(2, 0)}, {C(2, 0), C(2, 1)}};
  EXPECT_EQ(poly_det(id), C(2, 1));
  Matrix<MultiPoly> v(3, std::vector<MultiPoly>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    v[i][0] = X(3, i) * X(3, i);
    v[i][1] = X(3, i);
    v[i][2] = C(3, 1);
  }
  EXPECT_EQ(poly_det(v), vandermonde(3));
}

TEST(MultiPoly, Substitute) {
  std::vector<std::string> names{"x1", "x2", "z"};
  MultiPoly f = extend_arity(X(2, 0) * X(2, 1), {"z"});
  std::vector<MultiPoly> images{X(3, 2) * X(3, 0), X(3, 1), X(3, 2)};
  EXPECT_EQ(substitute(f, images), X(3, 2) * X(3, 0) * X(3, 1));
  std::vector<MultiPoly> identity{X(3, 0), X(3, 1), X(3, 2)};
  EXPECT_EQ(substitute(f, identity), f);
}

TEST(MultiPoly, GeneratingFunctionImage) {
  // w_2(t) with eps_j -> (1 + (z-1) j/2) e_j lands on 1 + ((z+1)/2) e_1 t + z e_2 t^2.
  MultiPoly w = elementary_generating_function(2);  // slots (x1, x2, t)
  MultiPoly w3 = extend_arity(w, {"z"});
  MultiPoly eps = elementary::Q_apply(w3, 2, "z");  // t, z ride along as parameters
  MultiPoly e1 = X(5, 0) + X(5, 1), e2 = X(5, 0) * X(5, 1);
  MultiPoly t = X(5, 2), z = X(5, 4);
  MultiPoly one = C(5, 1);
  MultiPoly want = one + (z + one) * R("1/2") * e1 * t + z * e2 * t * t;
  EXPECT_EQ(eps, want);
}

TEST(MultiPoly, EulerOperator) {
  MultiPoly f = MultiPoly::monomial({3, 1});
  EXPECT_EQ(apply_D(f, 0), f * Rational(3));
  EXPECT_TRUE(apply_D(C(2, 5), 0).is_zero());
  MultiPoly a = alternant({2, 0});
  EXPECT_EQ(apply_D(a, 0) + apply_D(a, 1), a * Rational(2));
}

TEST(MultiPoly, Evaluate) {
  EXPECT_EQ(evaluate(X(2, 0) + X(2, 1), {1, 1}), 2);
  EXPECT_EQ(evaluate(elementary_sym(2, 3), {1, 1, 1}), 3);
  EXPECT_EQ(evaluate(schur_poly(Partition{1, 0}).raw, {1, 2}), 3);
}

TEST(MultiPoly, RingAxiomsRandom) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    auto a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4), c = random_poly(rng, 3, 2, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    if (!b.is_zero()) EXPECT_EQ(divide_exact(a * b, b), a);
    for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(apply_D(a * b, s), apply_D(a, s) * b + a * apply_D(b, s));
    std::vector<Rational> pt{verify::random_rational(rng), verify::random_rational(rng), verify::random_rational(rng)};
    std::span<const Rational> p(pt);
    EXPECT_EQ(evaluate(a * b + c, p), evaluate(a, p) * evaluate(b, p) + evaluate(c, p));
  }
}

TEST(Determinant, RowProperties) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 6; ++n) {
    Matrix<Rational> m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& v : row) v = verify::random_rational(rng);
    Rational d = determinant(m);
    EXPECT_EQ(determinant_bareiss(m, Rational(0)), d);
    auto swapped = m;
    std::swap(swapped[0], swapped[1]);
    EXPECT_EQ(determinant(swapped), -d);
    auto equal = m;
    equal[1] = equal[0];
    EXPECT_EQ(determinant(equal), 0);
  }
}

TEST(Determinant, BareissPolynomialMatchesLaplace) {
  Matrix<MultiPoly> v(4, std::vector<MultiPoly>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) v[i][j] = pow(X(4, i), static_cast<int>(3 - j));
  EXPECT_EQ(determinant_bareiss(v, MultiPoly(4)), vandermonde(4));
  EXPECT_EQ(poly_det(v), vandermonde(4));
}

TEST(UniPoly, RootDivision) {
  UniPoly p = pow(UniPoly::linear(1, -1), 2) * UniPoly::linear(2, 1);
  EXPECT_EQ(divide_by_root_power(p, 1, 2), UniPoly::linear(2, 1));
  EXPECT_THROW(divide_by_root_power(p, 1, 3), NotDivisible);
  EXPECT_EQ(euler(UniPoly::monomial(3)), UniPoly::monomial(3, 3));
}
