#include "sepr/polynomial.hpp"

#include <algorithm>
#include <map>

#include "sepr/error.hpp"

namespace sepr {
namespace {

using TermMap = std::map<Monomial, mpz_class, GrlexGreater>;

VariableTablePtr common_vars(const Polynomial& p, const Polynomial& q) {
  if (p.vars() == q.vars()) return p.vars();
  // A table-less polynomial is constant and adopts the other side's table.
  if (!p.vars()) return q.vars();
  if (!q.vars()) return p.vars();
  throw VariableTableMismatch();
}

std::vector<Polynomial::Term> flatten(TermMap&& map) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(map.size());
  for (auto& [mono, coeff] : map) {
    if (coeff != 0) terms.push_back({mono, std::move(coeff)});
  }
  return terms;
}

mpq_class power(const mpq_class& base, std::uint32_t exp) {
  mpq_class result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return result;
}

}  // namespace

Polynomial Polynomial::constant(mpz_class value, VariableTablePtr vars) {
  std::vector<Term> terms;
  if (value != 0) terms.push_back({Monomial{}, std::move(value)});
  return Polynomial(std::move(vars), std::move(terms));
}

Polynomial Polynomial::variable(VariableTablePtr vars, VarIndex var) {
  return monomial(std::move(vars), Monomial::variable(var), 1);
}

Polynomial Polynomial::monomial(VariableTablePtr vars, Monomial m, mpz_class coeff) {
  if (!vars && !m.is_one()) throw DomainError("a non-constant polynomial needs a variable table");
  if (vars) {
    for (const auto& f : m.factors())
      if (f.var >= vars->size()) throw DomainError("variable index " + std::to_string(f.var) + " out of range");
  }
  std::vector<Term> terms;
  if (coeff != 0) terms.push_back({std::move(m), std::move(coeff)});
  return Polynomial(std::move(vars), std::move(terms));
}

Polynomial Polynomial::from_terms(VariableTablePtr vars, std::vector<Term> terms) {
  TermMap map;
  for (auto& t : terms) {
    if (!vars && !t.monomial.is_one()) throw DomainError("a non-constant polynomial needs a variable table");
    if (vars) {
      for (const auto& f : t.monomial.factors())
        if (f.var >= vars->size()) throw DomainError("variable index " + std::to_string(f.var) + " out of range");
    }
    map[std::move(t.monomial)] += t.coeff;
  }
  return Polynomial(std::move(vars), flatten(std::move(map)));
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::with_vars(VariableTablePtr vars) const {
  return from_terms(std::move(vars), terms_);
}

mpq_class Polynomial::eval_at(const RationalPoint& point) const {
  mpq_class sum = 0;
  for (const auto& term : terms_) {
    mpq_class product = term.coeff;
    for (const auto& f : term.monomial.factors()) {
      const auto* value = point.find(f.var);
      if (value == nullptr) {
        throw UnassignedVariable(vars_ && f.var < vars_->size() ? vars_->name(f.var) : "#" + std::to_string(f.var));
      }
      product *= f.exp == 1 ? *value : power(*value, f.exp);
    }
    sum += product;
  }
  sum.canonicalize();
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : terms_) {
    const bool negative = sgn(term.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    mpz_class magnitude = abs(term.coeff);
    const bool unit = magnitude == 1;
    if (term.monomial.is_one()) {
      out += magnitude.get_str();
      continue;
    }
    if (!unit) out += magnitude.get_str() + "*";
    bool first_factor = true;
    for (const auto& f : term.monomial.factors()) {
      if (!first_factor) out += '*';
      first_factor = false;
      out += vars_ ? vars_->name(f.var) : "#" + std::to_string(f.var);
      if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  auto vars = common_vars(p, q);
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.terms_.size() + q.terms_.size());
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end()) {
      terms.push_back(*i++);
      continue;
    }
    if (i == p.terms_.end()) {
      terms.push_back(*j++);
      continue;
    }
    auto order = grlex_compare(i->monomial, j->monomial);
    if (order > 0) {
      terms.push_back(*i++);
    } else if (order < 0) {
      terms.push_back(*j++);
    } else {
      mpz_class sum = i->coeff + j->coeff;
      if (sum != 0) terms.push_back({i->monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return Polynomial(std::move(vars), std::move(terms));
}

Polynomial operator-(const Polynomial& p) {
  auto terms = p.terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return Polynomial(p.vars_, std::move(terms));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  auto vars = common_vars(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(std::move(vars));
  TermMap map;
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      auto [it, inserted] = map.try_emplace(a.monomial * b.monomial);
      if (inserted) {
        mpz_mul(it->second.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
      } else {
        mpz_addmul(it->second.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
      }
    }
  }
  return Polynomial(std::move(vars), flatten(std::move(map)));
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_ != q.terms_) return false;
  if (p.vars_ == q.vars_ || !p.vars_ || !q.vars_) return true;
  return *p.vars_ == *q.vars_;
}

std::strong_ordering canonical_compare(const Polynomial& p, const Polynomial& q) {
  auto a = p.terms();
  auto b = q.terms();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = grlex_compare(a[i].monomial, b[i].monomial); c != 0) return c;
    if (int c = cmp(a[i].coeff, b[i].coeff); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

CoeffSignSummary coeff_sign_summary(const Polynomial& p) noexcept {
  if (p.is_zero()) return CoeffSignSummary::all_zero;
  bool positive = false;
  bool negative = false;
  for (const auto& t : p.terms()) {
    (sgn(t.coeff) > 0 ? positive : negative) = true;
  }
  if (positive && negative) return CoeffSignSummary::mixed_signs;
  return positive ? CoeffSignSummary::all_positive : CoeffSignSummary::all_negative;
}

const char* to_string(CoeffSignSummary summary) noexcept {
  switch (summary) {
    case CoeffSignSummary::all_zero: return "AllZero";
    case CoeffSignSummary::all_positive: return "AllPositive";
    case CoeffSignSummary::all_negative: return "AllNegative";
    case CoeffSignSummary::mixed_signs: return "MixedSigns";
  }
  return "?";
}

Monomial monomial_content(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("monomial content of the zero polynomial");
  auto terms = p.terms();
  Monomial content = terms.front().monomial;
  for (const auto& t : terms.subspan(1)) {
    if (content.is_one()) break;
    content = gcd(content, t.monomial);
  }
  return content;
}

Polynomial primitive_part(const Polynomial& p) {
  const Monomial content = monomial_content(p);
  const bool flip = sgn(p.leading_term().coeff) < 0;
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    terms.push_back({t.monomial.quotient(content), flip ? mpz_class(-t.coeff) : t.coeff});
  }
  // Dividing by a common monomial keeps the order, so the terms are still canonical.
  return Polynomial::from_terms(p.vars(), std::move(terms));
}

Reduction reduce_by(const Polynomial& m, const Polynomial& d, MonomialOrder /*order*/) {
  if (d.is_zero()) throw DomainError("reduction by the zero polynomial");
  auto vars = common_vars(m, d);

  const auto& lead = d.leading_term();
  const mpz_class lead_abs = abs(lead.coeff);

  TermMap running;
  for (const auto& t : m.terms()) running.emplace(t.monomial, t.coeff);
  TermMap quotient;
  std::vector<Polynomial::Term> remainder;
  mpz_class scale = 1;

  auto rescale = [&](const mpz_class& factor) {
    for (auto& [mono, c] : running) c *= factor;
    for (auto& [mono, c] : quotient) c *= factor;
    for (auto& t : remainder) t.coeff *= factor;
    scale *= factor;
  };

  while (!running.empty()) {
    auto top = running.begin();
    if (!lead.monomial.divides(top->first)) {
      remainder.push_back({top->first, std::move(top->second)});
      running.erase(top);
      continue;
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lead_abs.get_mpz_t(), top->second.get_mpz_t());
      rescale(lead_abs / g);
    }
    const mpz_class factor = top->second / lead.coeff;
    const Monomial shift = top->first.quotient(lead.monomial);
    quotient[shift] += factor;
    for (const auto& t : d.terms()) {
      auto [it, inserted] = running.try_emplace(shift * t.monomial);
      it->second -= factor * t.coeff;
      if (it->second == 0) running.erase(it);
    }
  }

  Reduction result;
  result.quotient = Polynomial::from_terms(vars, flatten(std::move(quotient)));
  result.remainder = Polynomial::from_terms(vars, std::move(remainder));
  result.scale = std::move(scale);
  return result;
}

}  // namespace sepr
