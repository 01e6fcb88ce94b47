#pragma once

#include <cstdint>
#include <vector>

#include "sepr/polynomial.hpp"
#include "sepr/sym_matrix.hpp"

namespace sepr {

/// Largest dimension accepted by all_principal_minors (2^n subsets).
inline constexpr std::size_t kMaxEnumerationDimension = 24;
/// Largest dimension accepted by determinant (masks are 32-bit).
inline constexpr std::size_t kMaxDeterminantDimension = 32;

/// Every principal minor of one matrix, keyed by subset mask (bit i-1 for index i).
class MinorTable {
 public:
  MinorTable() = default;
  MinorTable(std::size_t n, std::vector<Polynomial> by_mask);

  std::size_t dimension() const noexcept { return n_; }
  /// Number of nonempty subsets, 2^n - 1.
  std::size_t size() const noexcept { return by_mask_.empty() ? 0 : by_mask_.size() - 1; }

  /// Throws DomainError for the empty mask or a mask outside the matrix.
  const Polynomial& at(SubsetMask mask) const;
  const Polynomial& at(const IndexSet& subset) const { return at(subset.mask()); }

  /// Masks of all subsets of size k, increasing.
  std::vector<SubsetMask> masks_of_order(std::size_t k) const;

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> by_mask_;
};

/// Exact determinant by memoized cofactor expansion; the 0 x 0 determinant is 1.
Polynomial determinant(const SymMatrix& m);

/// All 2^n - 1 principal minors, sharing one memo table across subsets.
/// Throws DomainError when n exceeds kMaxEnumerationDimension.
MinorTable all_principal_minors(const SymMatrix& m);

/// Masks of all k-subsets of {1..n}, increasing.
std::vector<SubsetMask> subsets_of_order(std::size_t n, std::size_t k);

}  // namespace sepr
