#include "bookhopf/hopf_checks.hpp"

#include <gtest/gtest.h>

using namespace bookhopf;

TEST(HopfChecks, AllAxiomsPassForSmallPrimes) {
  for (int p : {3, 5})
    for (int s = 1; s < p; ++s) {
      const AxiomReport report = run_all(BookAlgebra::construct(p, s));
      EXPECT_TRUE(report.passed()) << render_text(report);
      EXPECT_EQ(report.results.size(), 6u);
      for (const auto& r : report.results) EXPECT_EQ(r.mode, "exhaustive") << r.axiom;
      EXPECT_EQ(report.find(axiom::kAssociativity)->checked, static_cast<std::uint64_t>(p) * p * p * p * p * p * p * p * p);
    }
}

TEST(HopfChecks, AssociativityTripleGXG) {
  // (g x) g = q x g^2 = g (x g).
  const auto A = BookAlgebra::construct(5, 2);
  const Element lhs = A.mul(A.mul(A.g(), A.x()), A.g());
  const Element rhs = A.mul(A.g(), A.mul(A.x(), A.g()));
  EXPECT_EQ(lhs, A.element({1, 0, 2}).times_root_power(1));
  EXPECT_EQ(lhs, rhs);
}

TEST(HopfChecks, SampledModeIsDeterministicPerSeed) {
  const auto A = BookAlgebra::construct(7, 2);
  CheckOptions options;
  options.samples = 3000;
  const AxiomResult a = check_associativity(A, options);
  const AxiomResult b = check_bialgebra_compat(A, options);
  EXPECT_EQ(a.mode, "sampled");
  EXPECT_EQ(b.mode, "sampled");
  EXPECT_EQ(a.checked, 3000u);
  EXPECT_TRUE(a.passed());
  EXPECT_TRUE(b.passed());

  // Same seed, same violations on the negative control.
  const auto N = BookAlgebra::construct(7, 0, true);
  const AxiomResult n1 = check_bialgebra_compat(N, options);
  const AxiomResult n2 = check_bialgebra_compat(N, options);
  ASSERT_FALSE(n1.passed());
  EXPECT_EQ(n1.violations, n2.violations);
  options.seed += 1;
  const AxiomResult n3 = check_bialgebra_compat(N, options);
  EXPECT_NE(n1.violations, n3.violations);
}

TEST(HopfChecks, SampleBudgetCoveringTheUniverseRunsExhaustively) {
  const auto A = BookAlgebra::construct(7, 1);
  CheckOptions options;
  options.samples = 50'000'000'000ull;
  options.exhaustive_limit = 0;
  const AxiomResult r = check_associativity(A, options);
  EXPECT_EQ(r.mode, "exhaustive");
  EXPECT_EQ(r.checked, 343ull * 343 * 343);
  EXPECT_TRUE(r.passed());
}

TEST(HopfChecks, CoassociativityExamples) {
  const auto A = BookAlgebra::construct(3, 1);
  const AxiomResult r = check_coassociativity(A);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 27u);
  EXPECT_EQ(A.coproduct_left(A.coproduct(Monomial::g())), A.delta2_right(Monomial::g()));
}

TEST(HopfChecks, CounitExamples) {
  const auto A = BookAlgebra::construct(5, 1);
  EXPECT_TRUE(check_counit_law(A).passed());
  // (eps (x) id) Delta(x) = eps(1) x + eps(x) g = x.
  Element left(5);
  for (const auto& [k, c] : A.coproduct(Monomial::x()))
    left += A.element(k[1]).scaled(c * A.counit(k[0]));
  EXPECT_EQ(left, A.x());
}

TEST(HopfChecks, AntipodeExamples) {
  const auto A = BookAlgebra::construct(7, 3);
  EXPECT_EQ(A.mul(A.antipode(A.g()), A.g()), A.one());
  // S(1) x + S(x) g = x - x g^-1 g = 0.
  EXPECT_TRUE((A.mul(A.antipode(A.one()), A.x()) + A.mul(A.antipode(A.x()), A.g())).is_zero());
  EXPECT_TRUE(check_antipode_law(A).passed());
}

TEST(HopfChecks, RelationExamples) {
  const auto A = BookAlgebra::construct(5, 2);
  EXPECT_TRUE(power(A.coproduct_x(), 5, A.params(), A.one2()).is_zero());
  EXPECT_TRUE(check_relations(A).passed());

  const auto N = BookAlgebra::construct(3, 0, true);
  const Tensor2 dy3 = power(N.coproduct_y(), 3, N.params(), N.one2());
  const CycScalar three = CycScalar::from_rational(3, Rational(3));
  EXPECT_EQ(dy3, Tensor2({Monomial::y(), Monomial::y(2)}, three) + Tensor2({Monomial::y(2), Monomial::y()}, three));

  const auto B = BookAlgebra::construct(3, 1);
  EXPECT_EQ(B.mul(B.antipode_x(), B.antipode_g()), B.mul(B.antipode_g(), B.antipode_x()).times_root_power(1));
}

TEST(HopfChecks, BialgebraCompatExamples) {
  const auto A = BookAlgebra::construct(3, 2);
  EXPECT_EQ(A.coproduct(A.mul(A.g(), A.x())), A.mul(A.coproduct_x(), A.coproduct_g()).times_root_power(1));
  EXPECT_TRUE(check_bialgebra_compat(A).passed());
  EXPECT_FALSE(check_bialgebra_compat(BookAlgebra::construct(3, 0, true)).passed());
}

TEST(HopfChecks, NegativeControlFailsOnlyAtDeltaYPower) {
  for (int p : {3, 5}) {
    const AxiomReport report = run_all(BookAlgebra::construct(p, 0, true));
    EXPECT_FALSE(report.passed());
    const AxiomResult* rel = report.find(axiom::kRelations);
    ASSERT_NE(rel, nullptr);
    ASSERT_EQ(rel->violations.size(), 1u);
    EXPECT_EQ(rel->violations.front().at, relation::kCoproductYPower);
    EXPECT_EQ(rel->violations.front().rhs, "0");
    for (const char* name : {axiom::kAssociativity, axiom::kCoassociativity, axiom::kCounit, axiom::kAntipode})
      EXPECT_TRUE(report.find(name)->passed()) << name;
    const AxiomResult* bi = report.find(axiom::kBialgebra);
    EXPECT_FALSE(bi->passed());
    for (const auto& v : bi->violations) EXPECT_GE(v.basis[0].y_exp + v.basis[1].y_exp, p) << v.at;
    EXPECT_TRUE(matches_negative_control(report));
  }
  // A clean algebra does not look like the negative control.
  EXPECT_FALSE(matches_negative_control(run_all(BookAlgebra::construct(3, 1))));
}

TEST(HopfChecks, ReportTextNamesEveryAxiom) {
  const std::string text = render_text(run_all(BookAlgebra::construct(3, 0, true)));
  for (const char* name : {"associativity", "coassociativity", "counit", "bialgebra", "antipode", "relations"})
    EXPECT_NE(text.find(name), std::string::npos);
  EXPECT_NE(text.find("Delta(y)^p = 0"), std::string::npos);
}
