#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "sepr/minors.hpp"
#include "sepr/orthant.hpp"
#include "sepr/polynomial.hpp"
#include "sepr/sym_matrix.hpp"

namespace sepr {

/// The three cases of a pivot split, by the sign of the pivot D at a point.
enum class PivotCase : std::uint8_t { positive, negative, zero };
inline constexpr std::array<PivotCase, 3> kPivotCases = {PivotCase::positive, PivotCase::negative, PivotCase::zero};
/// "D>0", "D<0", "D=0".
const char* to_string(PivotCase c) noexcept;

/// One minor written as scale * m = q * D + r, together with the sign of m that
/// follows in each pivot case (nullopt when nothing follows).
///
/// Conclusions use only these rules, where sigma is coeff_sign_summary:
///   m itself constant-sign: its sign, in every case;
///   D = 0: sign of r when r is constant-sign (0 when r is zero);
///   D > 0: +  if q all-positive and r all-positive or zero,
///          -  if q all-negative and r all-negative or zero;
///   D < 0: -  if q all-positive and r all-negative or zero,
///          +  if q all-negative and r all-positive or zero.
struct CaseDecomposition {
  IndexSet minor_subset;
  Polynomial minor;
  Polynomial quotient;
  Polynomial remainder;
  mpz_class scale = 1;
  std::array<std::optional<Sign>, 3> concluded;

  std::optional<Sign> conclusion(PivotCase c) const { return concluded[static_cast<std::size_t>(c)]; }
  /// Re-multiplies and checks scale * minor == quotient * pivot + remainder.
  bool identity_holds(const Polynomial& pivot) const;
};

/// Requires `pivot` nonzero and equal to its own primitive part (DomainError otherwise).
CaseDecomposition check_case_rule(const Polynomial& minor, const Polynomial& pivot);

/// Proof that every sign of `guaranteed` occurs among the k x k principal
/// minors at every positive point: for each pivot case, each nonzero sign of
/// `guaranteed` is concluded by some decomposition.
struct Certificate {
  std::size_t k = 0;
  Polynomial pivot;
  std::vector<CaseDecomposition> decompositions;
  SignSet guaranteed;

  /// Independent re-check of every identity and of the coverage condition.
  /// The zero sign is not covered by the certificate and is ignored here.
  bool verify() const;
};

enum class CertificationMethod { constant_sign, pivot_case_split, sampling_only, all_zero };
/// "constant-sign", "pivot-case-split", "sampling-only", "all-zero".
const char* to_string(CertificationMethod method) noexcept;

struct LevelCertification {
  SignSet guaranteed;
  CertificationMethod method = CertificationMethod::all_zero;
  std::optional<Certificate> certificate;
};

/// Primitive parts of the mixed-coefficient polynomials, deduplicated and in
/// canonical order; constants are dropped.
std::vector<Polynomial> discover_pivots(std::span<const Polynomial> minors);

/// Signs provably present among the k x k principal minors on the whole open
/// positive orthant, and how they were proven. `minors` must belong to `m`.
LevelCertification certify_level(const SymMatrix& m, std::size_t k, const MinorTable& minors);

}  // namespace sepr
