#include "sepr/verify.hpp"

#include <algorithm>

#include "sepr/error.hpp"

namespace sepr {

const char* to_string(ClaimStatus status) noexcept {
  switch (status) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

void ClassCounts::add(SignClass::Kind kind) noexcept {
  switch (kind) {
    case SignClass::Kind::zero: ++zero; break;
    case SignClass::Kind::positive: ++positive; break;
    case SignClass::Kind::negative: ++negative; break;
    case SignClass::Kind::mixed: ++mixed; break;
    case SignClass::Kind::unresolved: ++unresolved; break;
  }
}

std::size_t ClassCounts::of(SignClass::Kind kind) const noexcept {
  switch (kind) {
    case SignClass::Kind::zero: return zero;
    case SignClass::Kind::positive: return positive;
    case SignClass::Kind::negative: return negative;
    case SignClass::Kind::mixed: return mixed;
    case SignClass::Kind::unresolved: return unresolved;
  }
  return 0;
}

ClaimStatus VerificationReport::overall() const noexcept {
  auto has = [&](ClaimStatus s) {
    return std::any_of(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; });
  };
  if (has(ClaimStatus::fail)) return ClaimStatus::fail;
  if (has(ClaimStatus::inconclusive)) return ClaimStatus::inconclusive;
  return ClaimStatus::pass;
}

int VerificationReport::exit_code() const noexcept {
  switch (overall()) {
    case ClaimStatus::pass: return 0;
    case ClaimStatus::fail: return 1;
    case ClaimStatus::inconclusive: return 2;
  }
  return 1;
}

namespace {

bool is_full_order(std::size_t k) {
  return std::find(kFullOrders.begin(), kFullOrders.end(), k) != kFullOrders.end();
}

Claim zero_levels_claim(const MinorTable& minors) {
  Claim claim{"zero-levels", ClaimStatus::pass, ""};
  std::size_t checked = 0;
  std::vector<std::string> offenders;
  for (std::size_t k = 1; k <= minors.dimension(); ++k) {
    if (is_full_order(k)) continue;
    std::size_t nonzero = 0;
    for (auto mask : minors.masks_of_order(k)) {
      ++checked;
      if (!minors.at(mask).is_zero()) ++nonzero;
    }
    if (nonzero != 0) offenders.push_back("k=" + std::to_string(k) + " has " + std::to_string(nonzero) + " nonzero");
  }
  if (offenders.empty()) {
    claim.details = "all " + std::to_string(checked) + " minors of order outside {3,6,9} are identically zero";
  } else {
    claim.status = ClaimStatus::fail;
    for (const auto& o : offenders) claim.details += (claim.details.empty() ? "" : "; ") + o;
  }
  return claim;
}

Claim full_levels_claim(const std::vector<LevelReport>& levels, std::size_t n) {
  Claim claim{"full-levels", ClaimStatus::pass, ""};
  const SignSet all{Sign::zero, Sign::positive, Sign::negative};
  for (std::size_t k : kFullOrders) {
    std::string part = "k=" + std::to_string(k) + " ";
    if (k > n) {
      claim.status = ClaimStatus::fail;
      part += "absent (matrix is " + std::to_string(n) + "x" + std::to_string(n) + ")";
    } else {
      const auto& level = levels[k - 1];
      const bool exact = level.method == CertificationMethod::constant_sign ||
                         level.method == CertificationMethod::pivot_case_split;
      const bool sound = !level.certificate || level.certificate->verify();
      part += level.guaranteed.to_string() + " via " + to_string(level.method);
      if (level.guaranteed != all || !exact || !sound) claim.status = ClaimStatus::fail;
      if (!sound) part += " (certificate does not re-verify)";
    }
    claim.details += (claim.details.empty() ? "" : "; ") + part;
  }
  return claim;
}

bool witness_sound(const ClassifiedMinor& entry) {
  const auto& c = entry.sign_class;
  if (c.positive_witness && sign_of(entry.minor.eval_at(*c.positive_witness)) != Sign::positive) return false;
  if (c.negative_witness && sign_of(entry.minor.eval_at(*c.negative_witness)) != Sign::negative) return false;
  return true;
}

Claim mixed_claim(const std::vector<ClassifiedMinor>& witnesses, std::size_t n) {
  Claim claim{"mixed-order-9", ClaimStatus::pass, ""};
  if (n < kMixedOrder) {
    claim.status = ClaimStatus::fail;
    claim.details = "matrix has no 9x9 principal minors";
    return claim;
  }
  ClassCounts counts;
  bool unsound = false;
  for (const auto& w : witnesses) {
    counts.add(w.sign_class.kind);
    unsound = unsound || !witness_sound(w);
  }
  claim.details = std::to_string(witnesses.size()) + " nonzero minors: " + std::to_string(counts.mixed) + " Mixed, " +
                  std::to_string(counts.positive) + " Pos, " + std::to_string(counts.negative) + " Neg, " +
                  std::to_string(counts.unresolved) + " Unresolved";
  if (unsound) {
    claim.status = ClaimStatus::fail;
    claim.details += "; a stored witness does not re-evaluate to its sign";
  } else if (counts.positive + counts.negative != 0) {
    claim.status = ClaimStatus::fail;
  } else if (counts.unresolved != 0) {
    claim.status = ClaimStatus::inconclusive;
  }
  return claim;
}

}  // namespace

VerificationReport verify_claims(const SymMatrix& m, std::size_t budget, std::uint64_t seed) {
  VerificationReport report;
  report.n = m.size();
  report.vars = m.vars();
  report.seed = seed;
  report.budget = budget;

  const MinorTable minors = all_principal_minors(m);
  for (std::size_t k = 1; k <= m.size(); ++k) {
    LevelReport level;
    level.k = k;
    auto cert = certify_level(m, k, minors);
    level.guaranteed = cert.guaranteed;
    level.method = cert.method;
    level.certificate = std::move(cert.certificate);
    for (auto mask : minors.masks_of_order(k)) {
      const auto& minor = minors.at(mask);
      auto sign_class = classify_polynomial(minor, budget, seed);
      level.counts.add(sign_class.kind);
      if (k == kMixedOrder && !minor.is_zero()) {
        report.witnesses.push_back({IndexSet::from_mask(mask, m.size()), minor, std::move(sign_class)});
      }
    }
    report.sepr.push_back(std::move(level));
  }

  report.claims.push_back(zero_levels_claim(minors));
  report.claims.push_back(full_levels_claim(report.sepr, m.size()));
  report.claims.push_back(mixed_claim(report.witnesses, m.size()));
  return report;
}

VerificationReport verify_paper_claims(std::size_t budget, std::uint64_t seed) {
  return verify_claims(paper_matrix(), budget, seed);
}

}  // namespace sepr
