#pragma once

#include <memory>
#include <string_view>

#include "sepr/polynomial.hpp"
#include "sepr/variable_table.hpp"

namespace sepr {

/// Parses one matrix-entry expression into a canonical polynomial.
///
///   expr   := ['-'] term { ('+' | '-') term }
///   term   := factor { '*' factor }
///   factor := base [ '^' INT ]
///   base   := INT | IDENT | '(' expr ')'
///
/// Whitespace is insignificant. Identifiers not yet in `vars` are appended to
/// it; the returned polynomial refers to `vars`. Throws ParseError carrying
/// the byte offset of the first offending character.
Polynomial parse_entry(std::string_view source, const std::shared_ptr<VariableTable>& vars);

/// Like parse_entry, but unknown identifiers are rejected instead of declared.
Polynomial parse_entry_strict(std::string_view source, const std::shared_ptr<const VariableTable>& vars);

}  // namespace sepr
