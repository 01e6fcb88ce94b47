#include "sepr/verify.hpp"

#include <gtest/gtest.h>

#include "sepr/expr_parser.hpp"
#include "sepr/report.hpp"

namespace sepr {
namespace {

const Claim& claim(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.claims)
    if (c.name == name) return c;
  throw std::runtime_error("no claim " + name);
}

SymMatrix with_entry(const SymMatrix& m, std::size_t row, std::size_t col, const char* text) {
  auto cells = m.row_major();
  cells[(row - 1) * m.size() + (col - 1)] = parse_entry_strict(text, m.vars());
  return SymMatrix(m.size(), m.vars(), std::move(cells));
}

TEST(VerifyTest, PaperClaimsPass) {
  const auto report = verify_paper_claims();
  ASSERT_EQ(report.claims.size(), 3u);
  for (const auto& c : report.claims) EXPECT_EQ(c.status, ClaimStatus::pass) << c.name << ": " << c.details;
  EXPECT_EQ(report.exit_code(), 0);

  ASSERT_EQ(report.sepr.size(), 12u);
  EXPECT_EQ(report.sepr[8].method, CertificationMethod::pivot_case_split);
  EXPECT_EQ(report.sepr[8].counts.mixed, 4u);
  EXPECT_EQ(report.sepr[8].counts.zero, 216u);
  EXPECT_EQ(report.sepr[2].counts.positive, 5u);
  EXPECT_EQ(report.sepr[2].counts.negative, 1u);
  EXPECT_EQ(report.witnesses.size(), 4u);
}

TEST(VerifyTest, BudgetOfOneIsInconclusive) {
  const auto report = verify_paper_claims(1, 0);
  EXPECT_EQ(claim(report, "zero-levels").status, ClaimStatus::pass);
  EXPECT_EQ(claim(report, "full-levels").status, ClaimStatus::pass);
  EXPECT_EQ(claim(report, "mixed-order-9").status, ClaimStatus::inconclusive);
  EXPECT_EQ(report.exit_code(), 2);
}

TEST(VerifyTest, MutatedMatrixIsReevaluated) {
  // Negating the b5 entry lets every order-9 minor be positive where b1*b4 = b2*b3.
  const auto mutated = with_entry(paper_matrix(), 8, 5, "-b5");
  const auto report = verify_claims(mutated);
  EXPECT_EQ(claim(report, "zero-levels").status, ClaimStatus::pass);
  EXPECT_EQ(claim(report, "full-levels").status, ClaimStatus::fail);
  EXPECT_EQ(claim(report, "mixed-order-9").status, ClaimStatus::pass);
  EXPECT_EQ(report.sepr[8].method, CertificationMethod::sampling_only);
  EXPECT_EQ(report.exit_code(), 1);
}

TEST(VerifyTest, ExtraEntryBreaksZeroLevels) {
  const auto report = verify_claims(with_entry(paper_matrix(), 1, 1, "a1"));
  EXPECT_EQ(claim(report, "zero-levels").status, ClaimStatus::fail);
  EXPECT_EQ(report.exit_code(), 1);
}

TEST(VerifyTest, SmallMatrixFailsHonestly) {
  const auto report = verify_claims(SymMatrix(2, nullptr));
  EXPECT_EQ(claim(report, "zero-levels").status, ClaimStatus::pass);
  EXPECT_EQ(claim(report, "full-levels").status, ClaimStatus::fail);
  EXPECT_EQ(claim(report, "mixed-order-9").status, ClaimStatus::fail);
}

TEST(ReportTest, JsonSchema) {
  const auto doc = to_json(verify_paper_claims());
  EXPECT_EQ(doc["status"], "PASS");
  ASSERT_EQ(doc["claims"].size(), 3u);
  for (const auto& c : doc["claims"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c["status"] == "PASS" || c["status"] == "FAIL" || c["status"] == "INCONCLUSIVE");
    EXPECT_TRUE(c["details"].is_string());
  }
  ASSERT_EQ(doc["sepr"].size(), 12u);
  const auto& nine = doc["sepr"][8];
  EXPECT_EQ(nine["k"], 9);
  EXPECT_EQ(nine["guaranteed"], nlohmann::ordered_json::parse(R"(["0","+","-"])"));
  EXPECT_EQ(nine["method"], "pivot-case-split");
  EXPECT_EQ(nine["class_counts"]["Mixed"], 4);
  EXPECT_EQ(doc["sepr"][0]["method"], "all-zero");

  ASSERT_EQ(doc["certificates"].size(), 1u);
  const auto& cert = doc["certificates"][0];
  EXPECT_EQ(cert["pivot"], "b1*b4 - b2*b3");
  ASSERT_EQ(cert["decompositions"].size(), 4u);
  const auto& first = cert["decompositions"][0];
  EXPECT_EQ(first["subset"], nlohmann::ordered_json::parse("[1,2,3,7,8,9,10,11,12]"));
  EXPECT_EQ(first["q"], "a1*a2*a3*b8*c1*c2*c3");
  EXPECT_EQ(first["r"], "0");
  EXPECT_EQ(first["concluded"]["D>0"], "+");
  EXPECT_EQ(first["concluded"]["D<0"], "-");
  EXPECT_EQ(first["concluded"]["D=0"], "0");
  EXPECT_EQ(cert["decompositions"][2]["concluded"]["D>0"], "unknown");

  ASSERT_EQ(doc["witnesses"].size(), 4u);
  EXPECT_EQ(doc["witnesses"][0]["class"], "Mixed");
  EXPECT_EQ(doc["witnesses"][0]["positive"].size(), 20u);
}

TEST(ReportTest, WitnessesInJsonReevaluate) {
  const auto m = paper_matrix();
  const auto doc = to_json(verify_paper_claims());
  for (const auto& w : doc["witnesses"]) {
    const auto minor = parse_entry_strict(w["minor"].get<std::string>(), m.vars());
    for (const char* side : {"positive", "negative"}) {
      RationalPoint x;
      for (const auto& [name, value] : w[side].items()) x.set(*m.vars()->find(name), parse_rational(value.get<std::string>()));
      const auto sign = sign_of(minor.eval_at(x));
      EXPECT_EQ(sign, std::string(side) == "positive" ? Sign::positive : Sign::negative);
    }
  }
}

TEST(ReportTest, TextRendering) {
  const auto text = render_text(verify_paper_claims());
  EXPECT_NE(text.find("pivot D = b1*b4 - b2*b3"), std::string::npos);
  EXPECT_NE(text.find("claim zero-levels: PASS"), std::string::npos);
  EXPECT_NE(text.find("overall: PASS"), std::string::npos);
}

}  // namespace
}  // namespace sepr
