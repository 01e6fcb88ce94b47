#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sepr/polynomial.hpp"
#include "sepr/variable_table.hpp"

namespace sepr {

/// Bit i-1 stands for the 1-based index i.
using SubsetMask = std::uint64_t;

/// Strictly increasing list of 1-based indices into an n x n matrix.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws DomainError unless `indices` is strictly increasing within [1, n].
  IndexSet(std::vector<std::size_t> indices, std::size_t n);

  static IndexSet from_mask(SubsetMask mask, std::size_t n);
  static IndexSet full(std::size_t n);
  /// Parses "1,7,10" (order-insensitive; duplicates are an error).
  static IndexSet parse(std::string_view text, std::size_t n);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  SubsetMask mask() const noexcept;
  /// "{1,7,10}"
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Square matrix of polynomials over one variable table. Immutable.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// n x n zero matrix.
  SymMatrix(std::size_t n, VariableTablePtr vars);
  /// `entries` is row-major with n*n elements; throws DomainError otherwise or
  /// when an entry belongs to another variable table.
  SymMatrix(std::size_t n, VariableTablePtr vars, std::vector<Polynomial> entries);

  std::size_t size() const noexcept { return n_; }
  const VariableTablePtr& vars() const noexcept { return vars_; }

  /// 1-based access, bounds checked.
  const Polynomial& entry(std::size_t row, std::size_t col) const;
  /// 0-based access, unchecked.
  const Polynomial& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * n_ + c]; }

  const std::vector<Polynomial>& row_major() const noexcept { return entries_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&);

 private:
  std::size_t n_ = 0;
  VariableTablePtr vars_;
  std::vector<Polynomial> entries_;
};

/// The 12 x 12 counterexample matrix over a1..a6, b1..b11, c1..c3.
SymMatrix paper_matrix();

/// The |S| x |S| matrix M[S_i, S_j]; throws DomainError when S does not fit M.
SymMatrix principal_submatrix(const SymMatrix& m, const IndexSet& subset);

}  // namespace sepr
