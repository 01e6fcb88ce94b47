#include "sepr/rational_point.hpp"

#include <cctype>

#include "sepr/error.hpp"

namespace sepr {

RationalPoint RationalPoint::all_ones(const VariableTable& vars) {
  RationalPoint point;
  for (VarIndex i = 0; i < vars.size(); ++i) point.set(i, 1);
  return point;
}

void RationalPoint::set(VarIndex var, mpq_class value) {
  value.canonicalize();
  values_.insert_or_assign(var, std::move(value));
}

const mpq_class* RationalPoint::find(VarIndex var) const {
  auto it = values_.find(var);
  return it == values_.end() ? nullptr : &it->second;
}

void RationalPoint::require_positive_for(const VariableTable& vars) const {
  for (VarIndex i = 0; i < vars.size(); ++i) {
    const auto* value = find(i);
    if (value == nullptr) throw UnassignedVariable(vars.name(i));
    if (sgn(*value) <= 0) throw OrthantViolation(vars.name(i));
  }
}

std::string RationalPoint::to_string(const VariableTable& vars) const {
  std::string out;
  for (const auto& [var, value] : values_) {
    if (!out.empty()) out += ' ';
    out += var < vars.size() ? vars.name(var) : "#" + std::to_string(var);
    out += '=';
    out += sepr::to_string(value);
  }
  return out;
}

std::string to_string(const mpq_class& value) {
  mpq_class canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

mpq_class parse_rational(const std::string& text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = std::string_view(text).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(text).substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) throw DomainError("malformed rational '" + text + "'");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  mpq_class value(n, d);
  value.canonicalize();
  return value;
}

}  // namespace sepr
