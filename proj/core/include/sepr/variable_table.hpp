#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sepr {

using VarIndex = std::uint32_t;

/// Ordered list of distinct variable names. Declaration order is also the
/// variable precedence used by the monomial order.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);

  static bool is_identifier(std::string_view text) noexcept;

  /// Appends a new name; throws DomainError on duplicates or malformed identifiers.
  VarIndex add(std::string name);
  /// Returns the index of `name`, appending it first if unknown.
  VarIndex intern(std::string_view name);

  std::optional<VarIndex> find(std::string_view name) const;
  const std::string& name(VarIndex index) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }

  friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarIndex> index_;
};

/// Handle shared by every polynomial of one ring. Tables only ever grow, so
/// indices handed out earlier stay valid.
using VariableTablePtr = std::shared_ptr<const VariableTable>;

}  // namespace sepr
