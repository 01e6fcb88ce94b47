#include "sepr/monomial.hpp"

#include <algorithm>

#include "sepr/error.hpp"

namespace sepr {

Monomial Monomial::variable(VarIndex var, std::uint32_t exp) {
  Monomial m;
  if (exp != 0) {
    m.factors_.push_back({var, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarIndex var) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, VarIndex v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial quotient is not exact");
  Monomial q;
  auto it = divisor.factors_.begin();
  for (const auto& f : factors_) {
    std::uint32_t exp = f.exp;
    if (it != divisor.factors_.end() && it->var == f.var) {
      exp -= it->exp;
      ++it;
    }
    if (exp != 0) {
      q.factors_.push_back({f.var, exp});
      q.degree_ += exp;
    }
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->var < i->var) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> common;
  auto fa = a.factors();
  auto fb = b.factors();
  auto i = fa.begin();
  auto j = fb.begin();
  while (i != fa.end() && j != fb.end()) {
    if (i->var < j->var) {
      ++i;
    } else if (j->var < i->var) {
      ++j;
    } else {
      common.push_back({i->var, std::min(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  return Monomial::from_factors(std::move(common));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    // The side holding the earlier variable has the larger exponent there.
    if (fa[i].var != fb[i].var) return fa[i].var < fb[i].var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (fa[i].exp != fb[i].exp) return fa[i].exp <=> fb[i].exp;
  }
  // Equal degree and equal common prefix forces equal length.
  return fa.size() <=> fb.size();
}

}  // namespace sepr
