#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace sepr::detail {

// Cofactor expansion over (row-mask, column-mask) submatrices with one memo
// shared by every call on the same expander. Each step expands along the row
// with the fewest nonzero entries inside the current column mask.
//
// Scalar needs +, -, *, a zero value and a one value; `is_zero` decides sparsity.
template <typename Scalar, typename IsZero>
class LaplaceExpander {
 public:
  LaplaceExpander(std::size_t n, std::vector<Scalar> cells, Scalar zero, Scalar one, IsZero is_zero)
      : n_(n), cells_(std::move(cells)), zero_(std::move(zero)), one_(std::move(one)), is_zero_(is_zero) {
    support_.assign(n_, 0);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (!is_zero_(cells_[r * n_ + c])) support_[r] |= std::uint32_t{1} << c;
  }

  /// Determinant of the submatrix on the given rows and columns (equal popcount).
  const Scalar& det(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return one_;
    const std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t pivot = 0;
    int fewest = 33;
    for (std::uint32_t rest = rows; rest != 0; rest &= rest - 1) {
      auto r = static_cast<std::size_t>(std::countr_zero(rest));
      int count = std::popcount(support_[r] & cols);
      if (count < fewest) {
        fewest = count;
        pivot = r;
        if (count == 0) break;
      }
    }

    Scalar sum = zero_;
    if (fewest != 0) {
      const std::uint32_t sub_rows = rows & ~(std::uint32_t{1} << pivot);
      const int row_pos = std::popcount(rows & ((std::uint32_t{1} << pivot) - 1));
      for (std::uint32_t hit = support_[pivot] & cols; hit != 0; hit &= hit - 1) {
        auto c = static_cast<std::size_t>(std::countr_zero(hit));
        const int col_pos = std::popcount(cols & ((std::uint32_t{1} << c) - 1));
        const Scalar& minor = det(sub_rows, cols & ~(std::uint32_t{1} << c));
        if (is_zero_(minor)) continue;
        Scalar term = cells_[pivot * n_ + c] * minor;
        if ((row_pos + col_pos) % 2 == 0) {
          sum = sum + term;
        } else {
          sum = sum - term;
        }
      }
    }
    return memo_.emplace(key, std::move(sum)).first->second;
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  std::size_t n_;
  std::vector<Scalar> cells_;
  Scalar zero_;
  Scalar one_;
  IsZero is_zero_;
  std::vector<std::uint32_t> support_;
  std::unordered_map<std::uint64_t, Scalar> memo_;
};

}  // namespace sepr::detail
