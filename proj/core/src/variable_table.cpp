#include "sepr/variable_table.hpp"

#include <cctype>

#include "sepr/error.hpp"

namespace sepr {

VariableTable::VariableTable(std::vector<std::string> names) {
  for (auto& name : names) add(std::move(name));
}

bool VariableTable::is_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char ch : text.substr(1)) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

VarIndex VariableTable::add(std::string name) {
  if (!is_identifier(name)) throw DomainError("'" + name + "' is not a valid identifier");
  if (index_.contains(name)) throw DomainError("duplicate variable '" + name + "'");
  auto index = static_cast<VarIndex>(names_.size());
  index_.emplace(name, index);
  names_.push_back(std::move(name));
  return index;
}

VarIndex VariableTable::intern(std::string_view name) {
  if (auto found = find(name)) return *found;
  return add(std::string(name));
}

std::optional<VarIndex> VariableTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& VariableTable::name(VarIndex index) const {
  if (index >= names_.size()) throw DomainError("variable index " + std::to_string(index) + " out of range");
  return names_[index];
}

}  // namespace sepr
