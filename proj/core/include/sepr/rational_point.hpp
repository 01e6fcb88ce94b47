#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "sepr/variable_table.hpp"

namespace sepr {

/// Exact rational assignment of values to variables, keyed by variable index.
class RationalPoint {
 public:
  RationalPoint() = default;

  /// Every variable of `vars` set to 1.
  static RationalPoint all_ones(const VariableTable& vars);

  void set(VarIndex var, mpq_class value);
  /// nullptr when `var` is unassigned.
  const mpq_class* find(VarIndex var) const;
  const std::map<VarIndex, mpq_class>& values() const noexcept { return values_; }

  /// Throws UnassignedVariable if any variable of `vars` is missing and
  /// OrthantViolation if any assigned value is <= 0.
  void require_positive_for(const VariableTable& vars) const;

  /// `a1=1/2 a2=3 ...` in variable order.
  std::string to_string(const VariableTable& vars) const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::map<VarIndex, mpq_class> values_;
};

/// Lowest-terms `p/q`, or `p` when the denominator is 1.
std::string to_string(const mpq_class& value);

/// Parses an integer or `p/q` string; throws DomainError on malformed text or zero denominator.
mpq_class parse_rational(const std::string& text);

}  // namespace sepr
