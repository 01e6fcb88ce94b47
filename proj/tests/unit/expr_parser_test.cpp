#include "sepr/expr_parser.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "sepr/error.hpp"

namespace sepr {
namespace {

std::size_t error_offset(std::string_view text) {
  auto vars = std::make_shared<VariableTable>();
  try {
    parse_entry(text, vars);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return std::string_view::npos;
}

TEST(ExprParserTest, PaperEntries) {
  auto vars = std::make_shared<VariableTable>();
  EXPECT_TRUE(parse_entry("0", vars).is_zero());

  auto p = parse_entry("-b6", vars);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].coeff, -1);
  EXPECT_EQ(p.terms()[0].monomial, Monomial::variable(*vars->find("b6")));
  EXPECT_EQ(p.to_string(), "-b6");
}

TEST(ExprParserTest, GrammarExamples) {
  auto vars = std::make_shared<VariableTable>();
  EXPECT_EQ(parse_entry("2*a1^2 - 3", vars).to_string(), "2*a1^2 - 3");
  EXPECT_EQ(parse_entry("(a1 - a2)*(a1 + a2)", vars).to_string(), "a1^2 - a2^2");
}

TEST(ExprParserTest, DeclaresVariablesOnFirstUse) {
  auto vars = std::make_shared<VariableTable>();
  vars->add("z");
  parse_entry("b2 + a1*b2 + _t0", vars);
  EXPECT_EQ(vars->names(), (std::vector<std::string>{"z", "b2", "a1", "_t0"}));
}

TEST(ExprParserTest, Precedence) {
  auto vars = std::make_shared<VariableTable>();
  EXPECT_EQ(parse_entry("-a1^2", vars), -parse_entry("a1*a1", vars));
  EXPECT_EQ(parse_entry("2*3^2", vars), Polynomial::constant(18));
  EXPECT_EQ(parse_entry("1 + 2*3", vars), Polynomial::constant(7));
  EXPECT_EQ(parse_entry("-a1 + b1*c1", vars), parse_entry("b1*c1 - a1", vars));
  EXPECT_EQ(parse_entry("(a1 + 1)^2", vars).to_string(), "a1^2 + 2*a1 + 1");
  EXPECT_EQ(parse_entry("a1^0", vars), Polynomial::constant(1));
  EXPECT_EQ(parse_entry("  a1 *\tb1\n", vars).to_string(), "a1*b1");
}

TEST(ExprParserTest, ArbitraryPrecisionLiterals) {
  auto vars = std::make_shared<VariableTable>();
  auto p = parse_entry("123456789012345678901234567890*x", vars);
  EXPECT_EQ(p.terms()[0].coeff, mpz_class("123456789012345678901234567890"));
}

TEST(ExprParserTest, Diagnostics) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("   "), 3u);
  EXPECT_EQ(error_offset("2a1"), 1u);
  EXPECT_EQ(error_offset("a1 +"), 4u);
  EXPECT_EQ(error_offset("a1*-b1"), 3u);
  EXPECT_EQ(error_offset("--a1"), 1u);
  EXPECT_EQ(error_offset("a1^b1"), 3u);
  EXPECT_EQ(error_offset("a1^-1"), 3u);
  EXPECT_EQ(error_offset("((a1)"), 5u);
  EXPECT_EQ(error_offset("a1 b1"), 3u);
  EXPECT_EQ(error_offset("a1/2"), 2u);
  EXPECT_EQ(error_offset("1.5"), 1u);
  EXPECT_EQ(error_offset("a1^99999999999"), 3u);
}

TEST(ExprParserTest, StrictModeRejectsUndeclaredNames) {
  std::shared_ptr<const VariableTable> vars = testing::make_vars(2, "a");
  EXPECT_EQ(parse_entry_strict("a1 - a2", vars).to_string(), "a1 - a2");
  try {
    parse_entry_strict("a1 + a3", vars);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(ExprParserTest, RenderThenParseIsIdentity) {
  auto table = std::make_shared<VariableTable>();
  for (const char* name : {"x1", "x2", "x3", "x4"}) table->add(name);
  testing::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    auto p = testing::random_polynomial(table, rng, 4, 4, 6, 50);
    ASSERT_EQ(parse_entry(p.to_string(), table), p) << p.to_string();
  }
}

}  // namespace
}  // namespace sepr
