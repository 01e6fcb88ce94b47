#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "sepr/variable_table.hpp"

namespace sepr {

/// Power product of variables. Factors are kept sorted by variable index and
/// never carry a zero exponent; the empty product is the constant monomial 1.
class Monomial {
 public:
  struct Factor {
    VarIndex var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial variable(VarIndex var, std::uint32_t exp = 1);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::uint32_t exponent(VarIndex var) const noexcept;
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; throws DomainError unless divisor divides this.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Exponent-wise minimum.
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded lexicographic order: total degree first, then the exponent of the
/// earliest-declared variable where the two differ.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_compare(a, b) > 0; }
};

enum class MonomialOrder { graded_lex };

}  // namespace sepr
