#include "sepr/certify.hpp"

#include <algorithm>

#include "sepr/error.hpp"

namespace sepr {

const char* to_string(PivotCase c) noexcept {
  switch (c) {
    case PivotCase::positive: return "D>0";
    case PivotCase::negative: return "D<0";
    case PivotCase::zero: return "D=0";
  }
  return "?";
}

const char* to_string(CertificationMethod method) noexcept {
  switch (method) {
    case CertificationMethod::constant_sign: return "constant-sign";
    case CertificationMethod::pivot_case_split: return "pivot-case-split";
    case CertificationMethod::sampling_only: return "sampling-only";
    case CertificationMethod::all_zero: return "all-zero";
  }
  return "?";
}

namespace {

std::optional<Sign> constant_sign(CoeffSignSummary s) {
  switch (s) {
    case CoeffSignSummary::all_zero: return Sign::zero;
    case CoeffSignSummary::all_positive: return Sign::positive;
    case CoeffSignSummary::all_negative: return Sign::negative;
    case CoeffSignSummary::mixed_signs: return std::nullopt;
  }
  return std::nullopt;
}

bool positive_or_zero(CoeffSignSummary s) {
  return s == CoeffSignSummary::all_positive || s == CoeffSignSummary::all_zero;
}

bool negative_or_zero(CoeffSignSummary s) {
  return s == CoeffSignSummary::all_negative || s == CoeffSignSummary::all_zero;
}

}  // namespace

bool CaseDecomposition::identity_holds(const Polynomial& pivot) const {
  return Polynomial::constant(scale) * minor == quotient * pivot + remainder;
}

CaseDecomposition check_case_rule(const Polynomial& minor, const Polynomial& pivot) {
  if (pivot.is_zero()) throw DomainError("pivot must be nonzero");
  if (!(primitive_part(pivot) == pivot)) throw DomainError("pivot must be primitive and sign-normalized");

  auto reduction = reduce_by(minor, pivot);
  CaseDecomposition dec;
  dec.minor = minor;
  dec.quotient = std::move(reduction.quotient);
  dec.remainder = std::move(reduction.remainder);
  dec.scale = std::move(reduction.scale);

  auto& at = dec.concluded;
  const auto pos = static_cast<std::size_t>(PivotCase::positive);
  const auto neg = static_cast<std::size_t>(PivotCase::negative);
  const auto zero = static_cast<std::size_t>(PivotCase::zero);

  if (auto s = constant_sign(coeff_sign_summary(minor))) {
    at = {s, s, s};
    return dec;
  }

  // scale > 0, so sign(minor) = sign(q * D + r) at every point.
  const auto sq = coeff_sign_summary(dec.quotient);
  const auto sr = coeff_sign_summary(dec.remainder);
  at[zero] = constant_sign(sr);
  if (sq == CoeffSignSummary::all_positive && positive_or_zero(sr)) at[pos] = Sign::positive;
  if (sq == CoeffSignSummary::all_negative && negative_or_zero(sr)) at[pos] = Sign::negative;
  if (sq == CoeffSignSummary::all_positive && negative_or_zero(sr)) at[neg] = Sign::negative;
  if (sq == CoeffSignSummary::all_negative && positive_or_zero(sr)) at[neg] = Sign::positive;
  return dec;
}

bool Certificate::verify() const {
  if (pivot.is_zero() || !(primitive_part(pivot) == pivot)) return false;
  for (const auto& dec : decompositions) {
    if (sgn(dec.scale) <= 0 || !dec.identity_holds(pivot)) return false;
  }
  for (PivotCase c : kPivotCases) {
    for (Sign s : {Sign::positive, Sign::negative}) {
      if (!guaranteed.contains(s)) continue;
      const bool covered = std::any_of(decompositions.begin(), decompositions.end(),
                                       [&](const CaseDecomposition& d) { return d.conclusion(c) == s; });
      if (!covered) return false;
    }
  }
  return true;
}

std::vector<Polynomial> discover_pivots(std::span<const Polynomial> minors) {
  std::vector<Polynomial> pivots;
  for (const auto& m : minors) {
    if (coeff_sign_summary(m) != CoeffSignSummary::mixed_signs) continue;
    auto candidate = primitive_part(m);
    if (!candidate.is_constant()) pivots.push_back(std::move(candidate));
  }
  std::sort(pivots.begin(), pivots.end(),
            [](const Polynomial& a, const Polynomial& b) { return canonical_compare(a, b) < 0; });
  pivots.erase(std::unique(pivots.begin(), pivots.end()), pivots.end());
  return pivots;
}

LevelCertification certify_level(const SymMatrix& m, std::size_t k, const MinorTable& minors) {
  if (minors.dimension() != m.size()) throw DomainError("minor table does not match the matrix");
  if (k < 1 || k > m.size()) throw DomainError("minor order out of range");

  LevelCertification result;
  std::vector<IndexSet> subsets;
  std::vector<Polynomial> nonzero;
  bool has_mixed = false;
  SignSet proven;
  for (auto mask : minors.masks_of_order(k)) {
    const auto& minor = minors.at(mask);
    if (minor.is_zero()) {
      result.guaranteed.insert(Sign::zero);
      continue;
    }
    subsets.push_back(IndexSet::from_mask(mask, m.size()));
    nonzero.push_back(minor);
    switch (coeff_sign_summary(minor)) {
      case CoeffSignSummary::all_positive: proven.insert(Sign::positive); break;
      case CoeffSignSummary::all_negative: proven.insert(Sign::negative); break;
      default: has_mixed = true; break;
    }
  }

  if (nonzero.empty()) {
    result.method = CertificationMethod::all_zero;
    return result;
  }
  const SignSet both{Sign::positive, Sign::negative};
  if (!has_mixed || both.is_subset_of(proven)) {
    result.guaranteed |= proven;
    result.method = CertificationMethod::constant_sign;
    return result;
  }

  for (const auto& pivot : discover_pivots(nonzero)) {
    Certificate cert;
    cert.k = k;
    cert.pivot = pivot;
    cert.guaranteed = both;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      auto dec = check_case_rule(nonzero[i], pivot);
      dec.minor_subset = subsets[i];
      cert.decompositions.push_back(std::move(dec));
    }
    if (cert.verify()) {
      if (result.guaranteed.contains(Sign::zero)) cert.guaranteed.insert(Sign::zero);
      result.guaranteed = cert.guaranteed;
      result.method = CertificationMethod::pivot_case_split;
      result.certificate = std::move(cert);
      return result;
    }
  }

  result.guaranteed |= proven;
  result.method = CertificationMethod::sampling_only;
  return result;
}

}  // namespace sepr
