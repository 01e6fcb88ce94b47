#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sepr/sym_matrix.hpp"

namespace sepr {

// Matrix documents look like
//   {"n": 2, "variables": ["a1", "b1"], "entries": [["0", "a1"], ["-b1", "0"]]}
// with every entry in the parse_entry grammar. "variables" is optional; when
// present it fixes the declaration order and entries may not use other names.
// Without it, variables are declared in row-major first-use order.
// All loaders throw MatrixFormatError.

SymMatrix load_matrix(const nlohmann::json& document);
SymMatrix load_matrix_text(std::string_view text);
SymMatrix load_matrix_file(const std::filesystem::path& path);

/// Always writes the explicit "variables" list so a reload keeps the order.
nlohmann::ordered_json save_matrix(const SymMatrix& m);
/// Same document, one matrix row per line; the format of the bundled fixtures.
std::string save_matrix_text(const SymMatrix& m);

}  // namespace sepr
