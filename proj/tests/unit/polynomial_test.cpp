#include "sepr/polynomial.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "sepr/error.hpp"
#include "sepr/expr_parser.hpp"
#include "sepr/sym_matrix.hpp"

namespace sepr {
namespace {

using testing::Rng;

class PolynomialTest : public ::testing::Test {
 protected:
  PolynomialTest() : vars_(paper_matrix().vars()) {}

  Polynomial P(const char* text) const { return parse_entry_strict(text, vars_); }

  VariableTablePtr vars_;
};

TEST_F(PolynomialTest, AddExamples) {
  const auto p = P("a1*b1 - 3*c2^2");
  EXPECT_EQ(p + Polynomial(vars_), p);
  EXPECT_TRUE((P("a1") + P("-a1")).is_zero());
  EXPECT_EQ((P("a1 + b1") + P("b1")).to_string(), "a1 + 2*b1");
}

TEST_F(PolynomialTest, MulExamples) {
  const auto p = P("a1*b1 - 3*c2^2");
  EXPECT_EQ(p * Polynomial::constant(1, vars_), p);
  EXPECT_EQ((P("a1 - a2") * P("a1 + a2")).to_string(), "a1^2 - a2^2");
  EXPECT_TRUE((P("a1") * Polynomial(vars_)).is_zero());
}

TEST_F(PolynomialTest, NegExamples) {
  EXPECT_TRUE(neg(Polynomial(vars_)).is_zero());
  EXPECT_EQ(neg(P("a1 - b1")).to_string(), "-a1 + b1");
  const auto p = P("2*a1^3 - b4*c1 + 7");
  EXPECT_EQ(neg(neg(p)), p);
}

TEST_F(PolynomialTest, EvalExamples) {
  const auto ones = RationalPoint::all_ones(*vars_);
  EXPECT_EQ(P("a1*b1*c1").eval_at(ones), 1);

  RationalPoint point = ones;
  point.set(*vars_->find("a1"), mpq_class(1, 2));
  point.set(*vars_->find("a2"), mpq_class(1, 3));
  EXPECT_EQ(P("a1 - a2").eval_at(point), mpq_class(1, 6));
  EXPECT_EQ(to_string(P("a1 - a2").eval_at(point)), "1/6");
  EXPECT_EQ(Polynomial(vars_).eval_at(point), 0);
}

TEST_F(PolynomialTest, EvalRejectsUnassignedVariable) {
  RationalPoint point;
  point.set(0, 1);
  EXPECT_THROW(P("a1*b1").eval_at(point), UnassignedVariable);
  EXPECT_EQ(P("a1").eval_at(point), 1);
}

TEST_F(PolynomialTest, CoeffSignSummaryExamples) {
  const auto m = paper_matrix();
  EXPECT_EQ(coeff_sign_summary(Polynomial(vars_)), CoeffSignSummary::all_zero);

  const auto pos = testing::leibniz_minor(m, {1, 7, 10});
  EXPECT_EQ(pos, P("a1*b1*c1"));
  EXPECT_EQ(coeff_sign_summary(pos), CoeffSignSummary::all_positive);

  const auto neg_minor = testing::leibniz_minor(m, {4, 9, 12});
  EXPECT_EQ(neg_minor, P("-a4*b9*c3"));
  EXPECT_EQ(coeff_sign_summary(neg_minor), CoeffSignSummary::all_negative);

  EXPECT_EQ(coeff_sign_summary(P("a1 - a2")), CoeffSignSummary::mixed_signs);
}

TEST_F(PolynomialTest, MonomialContentExamples) {
  EXPECT_EQ(Polynomial::monomial(vars_, monomial_content(P("a1*b1*c1"))), P("a1*b1*c1"));
  EXPECT_EQ(Polynomial::monomial(vars_, monomial_content(P("a1^2*b1 + a1*b1^2"))), P("a1*b1"));
  EXPECT_TRUE(monomial_content(P("a1 + b1")).is_one());
  EXPECT_THROW(monomial_content(Polynomial(vars_)), DomainError);
}

TEST_F(PolynomialTest, PrimitivePartExamples) {
  EXPECT_EQ(primitive_part(P("-a4*b9*c3")), Polynomial::constant(1, vars_));
  EXPECT_EQ(primitive_part(P("b2*b3 - b1*b4")), P("b1*b4 - b2*b3"));
  EXPECT_EQ(primitive_part(P("6*a1^2*b1 - 4*a1*b2")), P("6*a1*b1 - 4*b2"));  // integer content kept
  EXPECT_THROW(primitive_part(Polynomial(vars_)), DomainError);

  const auto minor = testing::leibniz_minor(paper_matrix(), {1, 2, 3, 7, 8, 9, 10, 11, 12});
  EXPECT_EQ(minor, P("a1*a2*a3*c1*c2*c3*b8*(b1*b4 - b2*b3)"));
  EXPECT_EQ(primitive_part(minor), P("b1*b4 - b2*b3"));
}

TEST_F(PolynomialTest, ReduceByExamples) {
  const auto d = P("b1*b4 - b2*b3");

  auto first = reduce_by(P("b1*b4*b10 - b1*b5*b7 - b2*b3*b10"), d);
  EXPECT_EQ(first.quotient, P("b10"));
  EXPECT_EQ(first.remainder, P("-b1*b5*b7"));
  EXPECT_EQ(first.scale, 1);

  auto self = reduce_by(d, d);
  EXPECT_EQ(self.quotient, Polynomial::constant(1, vars_));
  EXPECT_TRUE(self.remainder.is_zero());

  auto third = reduce_by(P("b1*b4*b11 + b1*b6*b7 - b2*b3*b11"), d);
  EXPECT_EQ(third.quotient, P("b11"));
  EXPECT_EQ(third.remainder, P("b1*b6*b7"));

  EXPECT_THROW(reduce_by(d, Polynomial(vars_)), DomainError);
}

TEST_F(PolynomialTest, ReduceByScalesForNonUnitLeadingCoefficient) {
  auto red = reduce_by(P("3*a1^2 + a2"), P("2*a1 + 1"));
  // 2*(3a1^2 + a2) would need q = 3a1 - 3/2, so the integer division has to scale twice.
  EXPECT_EQ(red.scale, 4);
  EXPECT_EQ(red.quotient, P("6*a1 - 3"));
  EXPECT_EQ(red.remainder, P("4*a2 + 3"));
  EXPECT_EQ(Polynomial::constant(red.scale, vars_) * P("3*a1^2 + a2"), red.quotient * P("2*a1 + 1") + red.remainder);
}

TEST_F(PolynomialTest, RenderingFollowsGradedLexOrder) {
  EXPECT_EQ(P("-b9*a4*c3").to_string(), "-a4*b9*c3");
  EXPECT_EQ(P("-3 + 2*a1^2").to_string(), "2*a1^2 - 3");
  EXPECT_EQ(P("a2^2 + a1^2 + a1*a2").to_string(), "a1^2 + a1*a2 + a2^2");
  EXPECT_EQ(P("b2*b3 - b1*b4").to_string(), "-b1*b4 + b2*b3");
  EXPECT_EQ(P("c3 + a1*b1").to_string(), "a1*b1 + c3");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(to_string(mpq_class(6, 4)), "3/2");
  EXPECT_EQ(to_string(mpq_class(-8, 4)), "-2");
}

TEST_F(PolynomialTest, MismatchedTablesAreRejected) {
  auto other = testing::make_vars(3, "a");
  auto foreign = Polynomial::variable(other, 0);
  EXPECT_THROW(P("a1") + foreign, VariableTableMismatch);
  EXPECT_THROW(P("a1") * foreign, VariableTableMismatch);
  // Table-less constants combine with anything.
  EXPECT_EQ(P("a1") + Polynomial::constant(2), P("a1 + 2"));
}

TEST_F(PolynomialTest, CanonicalCompareOrdersByLeadingTerms) {
  EXPECT_TRUE(canonical_compare(P("b1*b4 - b2*b3"), P("b1*b4*b10 - b2*b3*b10")) < 0);
  EXPECT_TRUE(canonical_compare(P("a1 + 1"), P("1 + a1")) == 0);
  EXPECT_TRUE(canonical_compare(P("a1 + 2"), P("a1 + 1")) > 0);
}

// Randomized properties.

class PolynomialPropertyTest : public ::testing::Test {
 protected:
  VariableTablePtr vars_ = testing::make_vars(4);
  Rng rng_{20240601};
};

TEST_F(PolynomialPropertyTest, RingAxioms) {
  for (int i = 0; i < 200; ++i) {
    auto p = testing::random_polynomial(vars_, rng_);
    auto q = testing::random_polynomial(vars_, rng_);
    auto r = testing::random_polynomial(vars_, rng_);
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_TRUE((p + neg(p)).is_zero());
  }
}

TEST_F(PolynomialPropertyTest, TermsStayCanonical) {
  for (int i = 0; i < 100; ++i) {
    auto p = testing::random_polynomial(vars_, rng_) * testing::random_polynomial(vars_, rng_);
    auto terms = p.terms();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      ASSERT_NE(terms[t].coeff, 0);
      if (t > 0) ASSERT_TRUE(grlex_compare(terms[t - 1].monomial, terms[t].monomial) > 0);
    }
  }
}

TEST_F(PolynomialPropertyTest, EvaluationIsARingHomomorphism) {
  for (int i = 0; i < 200; ++i) {
    auto p = testing::random_polynomial(vars_, rng_);
    auto q = testing::random_polynomial(vars_, rng_);
    auto x = testing::random_point(*vars_, rng_);
    ASSERT_EQ((p + q).eval_at(x), p.eval_at(x) + q.eval_at(x));
    ASSERT_EQ((p * q).eval_at(x), p.eval_at(x) * q.eval_at(x));
  }
}

TEST_F(PolynomialPropertyTest, ConstantSignCoefficientsGiveConstantSignValues) {
  for (int sign : {+1, -1}) {
    for (int i = 0; i < 20; ++i) {
      auto p = testing::random_signed_polynomial(vars_, rng_, sign);
      ASSERT_EQ(coeff_sign_summary(p), sign > 0 ? CoeffSignSummary::all_positive : CoeffSignSummary::all_negative);
      for (int s = 0; s < 100; ++s) {
        auto value = p.eval_at(testing::random_positive_point(*vars_, rng_));
        ASSERT_EQ(sgn(value), sign) << p.to_string();
      }
    }
  }
}

TEST_F(PolynomialPropertyTest, ReductionIdentityAndRemainderCondition) {
  for (int i = 0; i < 200; ++i) {
    auto m = testing::random_polynomial(vars_, rng_, 4, 4, 6);
    auto d = testing::random_polynomial(vars_, rng_, 4, 2, 3);
    if (d.is_zero()) continue;
    auto red = reduce_by(m, d);
    ASSERT_GT(red.scale, 0);
    if (abs(d.leading_term().coeff) == 1) ASSERT_EQ(red.scale, 1);
    ASSERT_EQ(Polynomial::constant(red.scale) * m, red.quotient * d + red.remainder)
        << "m=" << m.to_string() << " d=" << d.to_string();
    for (const auto& t : red.remainder.terms()) ASSERT_FALSE(d.leading_term().monomial.divides(t.monomial));
  }
}

TEST_F(PolynomialPropertyTest, PrimitivePartTimesContentRecoversPolynomial) {
  for (int i = 0; i < 200; ++i) {
    auto p = testing::random_polynomial(vars_, rng_) * testing::random_polynomial(vars_, rng_);
    if (p.is_zero()) continue;
    auto pp = primitive_part(p);
    ASSERT_GT(pp.leading_term().coeff, 0);
    auto back = pp * Polynomial::monomial(vars_, monomial_content(p));
    ASSERT_TRUE(back == p || back == neg(p));
    ASSERT_EQ(back == p, sgn(p.leading_term().coeff) > 0);
  }
}

TEST(MonomialTest, GradedLexOrder) {
  auto a1 = Monomial::variable(0);
  auto a2 = Monomial::variable(1);
  EXPECT_TRUE(grlex_compare(a1 * a1, a1 * a2) > 0);
  EXPECT_TRUE(grlex_compare(a1 * a2, a2 * a2) > 0);
  EXPECT_TRUE(grlex_compare(a2 * a2, a1) > 0);  // degree first
  EXPECT_TRUE(grlex_compare(a2, Monomial{}) > 0);
  EXPECT_TRUE(grlex_compare(a1 * a2, a2 * a1) == 0);
}

TEST(MonomialTest, DivisionAndGcd) {
  auto m = Monomial::from_factors({{2, 1}, {0, 2}, {2, 1}});
  EXPECT_EQ(m.exponent(0), 2u);
  EXPECT_EQ(m.exponent(2), 2u);
  EXPECT_EQ(m.degree(), 4u);
  EXPECT_TRUE(Monomial::variable(0).divides(m));
  EXPECT_FALSE(Monomial::variable(1).divides(m));
  EXPECT_EQ(m.quotient(Monomial::variable(2, 2)), Monomial::variable(0, 2));
  EXPECT_THROW(m.quotient(Monomial::variable(1)), DomainError);
  EXPECT_EQ(gcd(m, Monomial::from_factors({{0, 1}, {1, 3}})), Monomial::variable(0));
}

}  // namespace
}  // namespace sepr
