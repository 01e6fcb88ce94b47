#include "sepr/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "sepr/error.hpp"
#include "sepr/expr_parser.hpp"

namespace sepr {

SymMatrix load_matrix(const nlohmann::json& document) {
  if (!document.is_object()) throw MatrixFormatError("matrix document must be a JSON object");
  auto n_it = document.find("n");
  if (n_it == document.end() || !n_it->is_number_integer() || n_it->get<long long>() < 0)
    throw MatrixFormatError("\"n\" must be a nonnegative integer");
  const auto n = static_cast<std::size_t>(n_it->get<long long>());

  auto vars = std::make_shared<VariableTable>();
  const bool declared = document.contains("variables");
  if (declared) {
    const auto& list = document.at("variables");
    if (!list.is_array()) throw MatrixFormatError("\"variables\" must be an array of identifiers");
    for (const auto& name : list) {
      if (!name.is_string()) throw MatrixFormatError("\"variables\" must be an array of identifiers");
      try {
        vars->add(name.get<std::string>());
      } catch (const DomainError& e) {
        throw MatrixFormatError(std::string("\"variables\": ") + e.what());
      }
    }
  }

  auto rows_it = document.find("entries");
  if (rows_it == document.end() || !rows_it->is_array()) throw MatrixFormatError("\"entries\" must be an array of rows");
  const auto& rows = *rows_it;
  if (rows.size() != n)
    throw MatrixFormatError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));

  std::vector<Polynomial> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw MatrixFormatError("row " + std::to_string(r + 1) + " must have exactly " + std::to_string(n) +
                              " entries (matrix is not square)");
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_string()) throw MatrixFormatError(r + 1, c + 1, 0, "entry must be a string");
      const auto text = row[c].get<std::string>();
      try {
        cells.push_back(declared ? parse_entry_strict(text, vars) : parse_entry(text, vars));
      } catch (const ParseError& e) {
        throw MatrixFormatError(r + 1, c + 1, e);
      }
    }
  }
  return SymMatrix(n, std::move(vars), std::move(cells));
}

SymMatrix load_matrix_text(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MatrixFormatError(std::string("malformed JSON: ") + e.what());
  }
  return load_matrix(document);
}

SymMatrix load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatrixFormatError("cannot open matrix file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_matrix_text(buffer.str());
}

nlohmann::ordered_json save_matrix(const SymMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json document;
  document["n"] = m.size();
  document["variables"] = m.vars() ? m.vars()->names() : std::vector<std::string>{};
  document["entries"] = std::move(rows);
  return document;
}

std::string save_matrix_text(const SymMatrix& m) {
  auto quoted = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::string out = "{\n  \"n\": " + std::to_string(m.size()) + ",\n  \"variables\": [";
  if (m.vars()) {
    const auto& names = m.vars()->names();
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + quoted(names[i]);
  }
  out += "],\n  \"entries\": [";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (std::size_t c = 0; c < m.size(); ++c) out += (c ? ", " : "") + quoted(m(r, c).to_string());
    out += "]";
  }
  out += m.size() ? "\n  ]\n}\n" : "]\n}\n";
  return out;
}

}  // namespace sepr
