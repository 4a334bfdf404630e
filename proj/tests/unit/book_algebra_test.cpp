#include "bookhopf/book_algebra.hpp"

#include <gtest/gtest.h>

using namespace bookhopf;

namespace {

// Gaussian binomial [n choose k]_q by the q-Pascal rule
// [n, k] = [n-1, k-1] + q^k [n-1, k].
CycScalar gaussian_binomial(int p, int n, int k) {
  if (k < 0 || k > n) return CycScalar::zero(p);
  if (k == 0 || k == n) return CycScalar::one(p);
  return gaussian_binomial(p, n - 1, k - 1) + gaussian_binomial(p, n - 1, k).times_root_power(k);
}

Tensor2 t2(int p, Monomial a, Monomial b) { return Tensor2(p, {a, b}); }

}  // namespace

TEST(BookAlgebra, ConstructValidation) {
  EXPECT_NO_THROW(BookAlgebra::construct(5, 2));
  EXPECT_THROW(BookAlgebra::construct(4, 1), std::invalid_argument);
  EXPECT_THROW(BookAlgebra::construct(2, 1), std::invalid_argument);
  EXPECT_THROW(BookAlgebra::construct(5, 0), std::invalid_argument);
  EXPECT_THROW(BookAlgebra::construct(5, 5), std::invalid_argument);
  EXPECT_THROW(BookAlgebra::construct(5, -1), std::invalid_argument);
  EXPECT_NO_THROW(BookAlgebra::construct(5, 0, true));
  try {
    BookAlgebra::construct(5, 0);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not a bialgebra"), std::string::npos);
  }
}

TEST(BookAlgebra, CoproductExamples) {
  const auto A = BookAlgebra::construct(5, 2);
  const int p = A.p();
  EXPECT_EQ(A.coproduct(A.g()), t2(p, Monomial::g(), Monomial::g()));
  EXPECT_EQ(A.coproduct(A.one()), A.one2());
  // (1 (x) x + x (x) g)^2 = 1 (x) x^2 + (1 + q) x (x) x g + x^2 (x) g^2.
  const Tensor2 expected = t2(p, {}, Monomial::x(2)) +
                           t2(p, Monomial::x(), {1, 0, 1}).scaled(CycScalar::one(p) + A.q()) +
                           t2(p, Monomial::x(2), Monomial::g(2));
  EXPECT_EQ(A.coproduct(A.element(Monomial::x(2))), expected);
  EXPECT_EQ(A.coproduct(A.y()), t2(p, {}, Monomial::y()) + t2(p, Monomial::y(), Monomial::g(2)));
}

TEST(BookAlgebra, CounitExamples) {
  const auto A = BookAlgebra::construct(5, 1);
  EXPECT_TRUE(A.counit(A.g()).is_one());
  EXPECT_TRUE(A.counit(A.x()).is_zero());
  const Element h = A.element(Monomial::g(2)).scaled(CycScalar::from_rational(5, Rational(3))) + A.element({1, 1, 0});
  EXPECT_EQ(A.counit(h), CycScalar::from_rational(5, Rational(3)));
}

TEST(BookAlgebra, AntipodeExamples) {
  for (int p : {3, 5, 7}) {
    const auto A = BookAlgebra::construct(p, p - 1);
    EXPECT_EQ(A.antipode(A.g()), A.element(Monomial::g(p - 1)));
    EXPECT_EQ(A.antipode(A.one()), A.one());
    // S(x g) = S(g) S(x) = -g^-1 x g^-1 = -q^-1 x g^(p-2).
    EXPECT_EQ(A.antipode(A.element({1, 0, 1})), (-A.element({1, 0, p - 2})).times_root_power(-1));
    EXPECT_EQ(A.antipode(A.x()), -A.element({1, 0, p - 1}));
  }
}

TEST(BookAlgebra, SSquaredOnGenerators) {
  for (int p : {3, 5, 7})
    for (int s = 1; s < p; ++s) {
      const auto A = BookAlgebra::construct(p, s);
      EXPECT_EQ(A.s_squared(A.x()), A.x().times_root_power(1));
      EXPECT_EQ(A.s_squared(A.g()), A.g());
      EXPECT_EQ(A.s_squared(A.y()), A.y().times_root_power(-static_cast<long long>(s) * s));
    }
}

TEST(BookAlgebra, Delta2Examples) {
  const auto A = BookAlgebra::construct(5, 3);
  const int p = 5;
  const Monomial one{}, x = Monomial::x(), g = Monomial::g();
  EXPECT_EQ(A.delta2(A.g()), Tensor3(p, {g, g, g}));
  EXPECT_EQ(A.delta2(A.one()), A.one3());
  const Tensor3 expected = Tensor3(p, {one, one, x}) + Tensor3(p, {one, x, g}) + Tensor3(p, {x, g, g});
  EXPECT_EQ(A.delta2(A.x()), expected);
  EXPECT_EQ(A.delta2_right(x), expected);
}

// Delta is defined on monomials by multiplicative extension, so agreeing
// with products of arbitrary basis pairs is a real constraint.
TEST(BookAlgebra, CoproductIsMultiplicativeOnAllBasisPairs) {
  for (int p : {3, 5}) {
    const auto A = BookAlgebra::construct(p, 1);
    for (const auto& a : A.basis())
      for (const auto& b : A.basis()) {
        const Tensor2 lhs = A.coproduct(A.mul(A.element(a), A.element(b)));
        ASSERT_EQ(lhs, A.mul(A.coproduct(a), A.coproduct(b))) << a.to_string() << ", " << b.to_string();
      }
  }
}

TEST(BookAlgebra, AntipodeIsAntiMultiplicative) {
  for (int p : {3, 5})
    for (int s = 1; s < p; ++s) {
      const auto A = BookAlgebra::construct(p, s);
      for (const auto& a : A.basis())
        for (const auto& b : A.basis())
          ASSERT_EQ(A.antipode(A.mul(A.element(a), A.element(b))), A.mul(A.antipode(b), A.antipode(a)));
    }
}

TEST(BookAlgebra, CoproductOfXPowerIsGaussianBinomialExpansion) {
  for (int p : {3, 5, 7}) {
    const auto A = BookAlgebra::construct(p, 1);
    for (int b = 0; b < p; ++b) {
      Tensor2 expected(p);
      for (int k = 0; k <= b; ++k)
        expected.add_term({Monomial::x(b - k), Monomial{k, 0, b - k}}, gaussian_binomial(p, b, k));
      EXPECT_EQ(A.coproduct(Monomial::x(b)), expected) << "b = " << b;
    }
    // The same expansion at b = p has only the vanishing middle coefficients.
    for (int k = 1; k < p; ++k) EXPECT_TRUE(gaussian_binomial(p, p, k).is_zero());
  }
}

TEST(BookAlgebra, SSquaredIsAnAutomorphismOfOrderP) {
  for (int p : {3, 5})
    for (int s = 1; s < p; ++s) {
      const auto A = BookAlgebra::construct(p, s);
      for (const auto& a : A.basis())
        for (const auto& b : A.basis())
          ASSERT_EQ(A.s_squared(A.mul(A.element(a), A.element(b))), A.mul(A.s_squared(A.element(a)), A.s_squared(A.element(b))));
      int order = 0;
      bool identity = false;
      while (!identity) {
        ++order;
        identity = true;
        for (const auto& m : A.basis()) {
          Element h = A.element(m);
          for (int k = 0; k < order; ++k) h = A.s_squared(h);
          if (!(h == A.element(m))) {
            identity = false;
            break;
          }
        }
      }
      EXPECT_EQ(order, p);
    }
}

TEST(BookAlgebra, CopiesShareTheMemoisedTables) {
  const auto A = BookAlgebra::construct(3, 1);
  const auto B = A;
  EXPECT_EQ(&A.coproduct(Monomial::x()), &B.coproduct(Monomial::x()));
  EXPECT_THROW(A.coproduct(Monomial::x(3)), std::out_of_range);
}
