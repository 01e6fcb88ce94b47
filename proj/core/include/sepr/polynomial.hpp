#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "sepr/monomial.hpp"
#include "sepr/rational_point.hpp"
#include "sepr/variable_table.hpp"

namespace sepr {

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are stored in strictly descending graded-lex order with nonzero
/// coefficients, so two polynomials are equal exactly when their term lists
/// are. Values are immutable; every operation returns a new polynomial.
///
/// A polynomial remembers the variable table it was built over. A polynomial
/// without a table is necessarily constant and combines with any table.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    mpz_class coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The zero polynomial, not tied to a table.
  Polynomial() = default;
  explicit Polynomial(VariableTablePtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(mpz_class value, VariableTablePtr vars = nullptr);
  static Polynomial variable(VariableTablePtr vars, VarIndex var);
  static Polynomial monomial(VariableTablePtr vars, Monomial m, mpz_class coeff = 1);
  /// Accepts terms in any order; merges duplicates and drops zeros.
  static Polynomial from_terms(VariableTablePtr vars, std::vector<Term> terms);

  const VariableTablePtr& vars() const noexcept { return vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Leading term under graded-lex; throws DomainError on zero.
  const Term& leading_term() const;
  std::uint64_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

  Polynomial with_vars(VariableTablePtr vars) const;

  /// Exact value at `point`; throws UnassignedVariable for any missing variable of a term.
  mpq_class eval_at(const RationalPoint& point) const;

  /// `-a4*b9*c3`, `2*a1^2 - 3`, `0`.
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  Polynomial(VariableTablePtr vars, std::vector<Term> sorted_terms)
      : vars_(std::move(vars)), terms_(std::move(sorted_terms)) {}

  VariableTablePtr vars_;
  std::vector<Term> terms_;
};

inline Polynomial neg(const Polynomial& p) { return -p; }

/// Canonical total order on polynomials: term by term in descending monomial
/// order, comparing monomials (graded-lex) and then coefficients.
std::strong_ordering canonical_compare(const Polynomial& p, const Polynomial& q);

enum class CoeffSignSummary { all_zero, all_positive, all_negative, mixed_signs };

CoeffSignSummary coeff_sign_summary(const Polynomial& p) noexcept;
const char* to_string(CoeffSignSummary summary) noexcept;

/// Exponent-wise gcd of every monomial of p; throws DomainError on zero.
Monomial monomial_content(const Polynomial& p);

/// p divided by its monomial content, negated if needed so the leading
/// coefficient is positive. Integer content is kept. Throws DomainError on zero.
Polynomial primitive_part(const Polynomial& p);

/// Result of dividing m by a single divisor d: scale * m = quotient * d + remainder,
/// with no remainder monomial divisible by lead(d). The scale is a positive
/// integer and equals 1 whenever the leading coefficient of d is +-1.
struct Reduction {
  Polynomial quotient;
  Polynomial remainder;
  mpz_class scale = 1;
};

/// Single-divisor multivariate division; throws DomainError when d is zero.
Reduction reduce_by(const Polynomial& m, const Polynomial& d, MonomialOrder order = MonomialOrder::graded_lex);

}  // namespace sepr
