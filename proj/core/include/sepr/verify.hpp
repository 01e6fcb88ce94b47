#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepr/certify.hpp"
#include "sepr/orthant.hpp"
#include "sepr/sym_matrix.hpp"

namespace sepr {

enum class ClaimStatus { pass, fail, inconclusive };
/// "PASS", "FAIL", "INCONCLUSIVE".
const char* to_string(ClaimStatus status) noexcept;

struct Claim {
  std::string name;
  ClaimStatus status = ClaimStatus::pass;
  std::string details;
};

struct ClassCounts {
  std::size_t zero = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t mixed = 0;
  std::size_t unresolved = 0;

  void add(SignClass::Kind kind) noexcept;
  std::size_t of(SignClass::Kind kind) const noexcept;
};

/// Per-order row of the sepr table.
struct LevelReport {
  std::size_t k = 0;
  SignSet guaranteed;
  CertificationMethod method = CertificationMethod::all_zero;
  ClassCounts counts;
  std::optional<Certificate> certificate;
};

struct ClassifiedMinor {
  IndexSet subset;
  Polynomial minor;
  SignClass sign_class;
};

struct VerificationReport {
  std::size_t n = 0;
  VariableTablePtr vars;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::vector<Claim> claims;
  std::vector<LevelReport> sepr;
  /// Every nonzero 9 x 9 principal minor with its classification.
  std::vector<ClassifiedMinor> witnesses;

  /// FAIL if any claim fails, else INCONCLUSIVE if any is inconclusive, else PASS.
  ClaimStatus overall() const noexcept;
  /// 0 PASS, 1 FAIL, 2 INCONCLUSIVE.
  int exit_code() const noexcept;
};

/// Orders whose principal minors carry every sign on the whole orthant.
inline constexpr std::array<std::size_t, 3> kFullOrders = {3, 6, 9};
/// Order whose nonzero minors each take both signs.
inline constexpr std::size_t kMixedOrder = 9;

/// Re-evaluates the three claims of the counterexample on an arbitrary matrix:
///   zero-levels   every principal minor of order outside {3,6,9} is identically zero;
///   full-levels   certify_level proves {0,+,-} at orders 3, 6, 9 without sampling;
///   mixed-order-9 every nonzero 9 x 9 principal minor is classified Mixed.
/// Failures are reported in the result, never thrown.
VerificationReport verify_claims(const SymMatrix& m, std::size_t budget = kDefaultBudget, std::uint64_t seed = 0);

/// verify_claims on paper_matrix().
VerificationReport verify_paper_claims(std::size_t budget = kDefaultBudget, std::uint64_t seed = 0);

}  // namespace sepr
