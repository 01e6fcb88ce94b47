#include "sepr/minors.hpp"

#include <bit>

#include "laplace.hpp"
#include "sepr/error.hpp"

namespace sepr {
namespace {

struct PolynomialIsZero {
  bool operator()(const Polynomial& p) const noexcept { return p.is_zero(); }
};

auto make_expander(const SymMatrix& m) {
  return detail::LaplaceExpander<Polynomial, PolynomialIsZero>(
      m.size(), m.row_major(), Polynomial(m.vars()), Polynomial::constant(1, m.vars()), PolynomialIsZero{});
}

std::uint32_t low_bits(std::size_t n) {
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

}  // namespace

MinorTable::MinorTable(std::size_t n, std::vector<Polynomial> by_mask) : n_(n), by_mask_(std::move(by_mask)) {
  if (n_ > kMaxEnumerationDimension || by_mask_.size() != (std::size_t{1} << n_))
    throw DomainError("minor table needs exactly 2^n slots");
}

const Polynomial& MinorTable::at(SubsetMask mask) const {
  if (mask == 0 || mask >= by_mask_.size()) throw DomainError("subset mask out of range");
  return by_mask_[mask];
}

std::vector<SubsetMask> MinorTable::masks_of_order(std::size_t k) const { return subsets_of_order(n_, k); }

std::vector<SubsetMask> subsets_of_order(std::size_t n, std::size_t k) {
  std::vector<SubsetMask> masks;
  if (k > n || n > 63) return masks;
  if (k == 0) return {0};
  const SubsetMask end = SubsetMask{1} << n;
  // Gosper's hack walks the k-subsets in increasing numeric order.
  for (SubsetMask mask = (SubsetMask{1} << k) - 1; mask < end;) {
    masks.push_back(mask);
    const SubsetMask low = mask & (~mask + 1);
    const SubsetMask ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return masks;
}

Polynomial determinant(const SymMatrix& m) {
  if (m.size() > kMaxDeterminantDimension) throw DomainError("matrix too large for determinant");
  auto expander = make_expander(m);
  const auto all = low_bits(m.size());
  return expander.det(all, all);
}

MinorTable all_principal_minors(const SymMatrix& m) {
  const std::size_t n = m.size();
  if (n > kMaxEnumerationDimension)
    throw DomainError("principal minor enumeration is limited to n <= " + std::to_string(kMaxEnumerationDimension));
  auto expander = make_expander(m);
  std::vector<Polynomial> by_mask(std::size_t{1} << n);
  by_mask[0] = Polynomial::constant(1, m.vars());
  for (std::size_t mask = 1; mask < by_mask.size(); ++mask) {
    const auto s = static_cast<std::uint32_t>(mask);
    by_mask[mask] = expander.det(s, s);
  }
  return MinorTable(n, std::move(by_mask));
}

}  // namespace sepr
