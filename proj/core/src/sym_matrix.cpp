#include "sepr/sym_matrix.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "sepr/error.hpp"

namespace sepr {

IndexSet::IndexSet(std::vector<std::size_t> indices, std::size_t n) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > n)
      throw DomainError("index " + std::to_string(indices_[i]) + " outside [1, " + std::to_string(n) + "]");
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw DomainError("indices must be strictly increasing");
  }
}

IndexSet IndexSet::from_mask(SubsetMask mask, std::size_t n) {
  std::vector<std::size_t> indices;
  while (mask != 0) {
    indices.push_back(static_cast<std::size_t>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return IndexSet(std::move(indices), n);
}

IndexSet IndexSet::full(std::size_t n) {
  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < n; ++i) indices[i] = i + 1;
  return IndexSet(std::move(indices), n);
}

IndexSet IndexSet::parse(std::string_view text, std::size_t n) {
  std::vector<std::size_t> indices;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw DomainError("malformed index '" + std::string(token) + "'");
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw DomainError("trailing ',' in index list");
  }
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) throw DomainError("duplicate index");
  return IndexSet(std::move(indices), n);
}

SubsetMask IndexSet::mask() const noexcept {
  SubsetMask mask = 0;
  for (auto i : indices_) mask |= SubsetMask{1} << (i - 1);
  return mask;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out + "}";
}

SymMatrix::SymMatrix(std::size_t n, VariableTablePtr vars)
    : n_(n), vars_(std::move(vars)), entries_(n * n, Polynomial(vars_)) {}

SymMatrix::SymMatrix(std::size_t n, VariableTablePtr vars, std::vector<Polynomial> entries)
    : n_(n), vars_(std::move(vars)), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw DomainError("matrix needs exactly n*n entries");
  for (auto& e : entries_) {
    if (e.vars() && e.vars() != vars_ && !(vars_ && *e.vars() == *vars_)) throw VariableTableMismatch();
    if (e.vars() != vars_) e = e.with_vars(vars_);
  }
}

const Polynomial& SymMatrix::entry(std::size_t row, std::size_t col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_)
    throw DomainError("entry (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
  return entries_[(row - 1) * n_ + (col - 1)];
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

SymMatrix paper_matrix() {
  auto vars = std::make_shared<VariableTable>();
  for (int i = 1; i <= 6; ++i) vars->add("a" + std::to_string(i));
  for (int i = 1; i <= 11; ++i) vars->add("b" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) vars->add("c" + std::to_string(i));
  VariableTablePtr table = vars;

  constexpr std::size_t n = 12;
  std::vector<Polynomial> cells(n * n, Polynomial(table));
  auto put = [&](std::size_t row, std::size_t col, const std::string& name, int sign) {
    auto var = Polynomial::variable(table, *table->find(name));
    cells[(row - 1) * n + (col - 1)] = sign > 0 ? var : -var;
  };

  // Rows 1-6 reach columns 10-12 through a1..a6.
  put(1, 10, "a1", +1);
  put(2, 11, "a2", +1);
  for (int r = 3; r <= 6; ++r) put(r, 12, "a" + std::to_string(r), +1);
  // Rows 7-9 reach columns 1-6 through b1..b11.
  put(7, 1, "b1", +1);
  put(7, 2, "b2", +1);
  put(8, 1, "b3", +1);
  put(8, 2, "b4", +1);
  put(8, 5, "b5", +1);
  put(8, 6, "b6", -1);
  put(9, 2, "b7", +1);
  put(9, 3, "b8", +1);
  put(9, 4, "b9", -1);
  put(9, 5, "b10", +1);
  put(9, 6, "b11", +1);
  // Rows 10-12 reach columns 7-9 through c1..c3.
  put(10, 7, "c1", +1);
  put(11, 8, "c2", +1);
  put(12, 9, "c3", +1);

  return SymMatrix(n, table, std::move(cells));
}

SymMatrix principal_submatrix(const SymMatrix& m, const IndexSet& subset) {
  const auto& idx = subset.indices();
  for (auto i : idx) {
    if (i < 1 || i > m.size()) throw DomainError("index " + std::to_string(i) + " outside the matrix");
  }
  const std::size_t k = idx.size();
  std::vector<Polynomial> cells;
  cells.reserve(k * k);
  for (auto i : idx)
    for (auto j : idx) cells.push_back(m(i - 1, j - 1));
  return SymMatrix(k, m.vars(), std::move(cells));
}

}  // namespace sepr
