#include "sepr/orthant.hpp"

#include <bit>

#include "laplace.hpp"
#include "sepr/error.hpp"

namespace sepr {

Sign sign_of(const mpq_class& value) noexcept {
  int s = sgn(value);
  return s == 0 ? Sign::zero : (s > 0 ? Sign::positive : Sign::negative);
}

Sign sign_of(const mpz_class& value) noexcept {
  int s = sgn(value);
  return s == 0 ? Sign::zero : (s > 0 ? Sign::positive : Sign::negative);
}

char symbol(Sign s) noexcept {
  switch (s) {
    case Sign::zero: return '0';
    case Sign::positive: return '+';
    case Sign::negative: return '-';
  }
  return '?';
}

std::size_t SignSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Sign> SignSet::elements() const {
  std::vector<Sign> out;
  for (Sign s : {Sign::zero, Sign::positive, Sign::negative})
    if (contains(s)) out.push_back(s);
  return out;
}

std::string SignSet::to_string() const {
  std::string out = "{";
  for (Sign s : elements()) {
    if (out.size() > 1) out += ',';
    out += symbol(s);
  }
  return out + "}";
}

std::string to_string(const SeprSequence& sequence) {
  std::string out;
  for (const auto& set : sequence) {
    if (!out.empty()) out += ' ';
    out += set.to_string();
  }
  return out;
}

mpq_class Lcg64::draw_rational() {
  const auto u = uniform(1, 100);
  const auto v = uniform(1, 100);
  mpq_class value(u, v);
  value.canonicalize();
  return value;
}

RationalPoint sample_positive_point(const VariableTable& vars, Lcg64& rng) {
  RationalPoint point;
  for (VarIndex i = 0; i < vars.size(); ++i) point.set(i, rng.draw_rational());
  return point;
}

namespace {

RationalPoint next_point(const Polynomial& p, Lcg64& rng) {
  return p.vars() ? sample_positive_point(*p.vars(), rng) : RationalPoint{};
}

}  // namespace

std::optional<RationalPoint> witness_search(const Polynomial& p, Sign target, std::size_t budget, std::uint64_t seed) {
  if (target == Sign::zero) throw DomainError("witness target must be + or -");
  switch (coeff_sign_summary(p)) {
    case CoeffSignSummary::all_zero: return std::nullopt;
    case CoeffSignSummary::all_positive:
      if (target == Sign::negative) return std::nullopt;
      break;
    case CoeffSignSummary::all_negative:
      if (target == Sign::positive) return std::nullopt;
      break;
    case CoeffSignSummary::mixed_signs: break;
  }
  Lcg64 rng(seed);
  for (std::size_t i = 0; i < budget; ++i) {
    RationalPoint point = next_point(p, rng);
    if (sign_of(p.eval_at(point)) == target) return point;
  }
  return std::nullopt;
}

const char* to_string(SignClass::Kind kind) noexcept {
  switch (kind) {
    case SignClass::Kind::zero: return "Zero";
    case SignClass::Kind::positive: return "Pos";
    case SignClass::Kind::negative: return "Neg";
    case SignClass::Kind::mixed: return "Mixed";
    case SignClass::Kind::unresolved: return "Unresolved";
  }
  return "?";
}

SignClass classify_polynomial(const Polynomial& p, std::size_t budget, std::uint64_t seed) {
  if (budget == 0) throw DomainError("classification budget must be at least 1");
  SignClass result;
  switch (coeff_sign_summary(p)) {
    case CoeffSignSummary::all_zero: result.kind = SignClass::Kind::zero; return result;
    case CoeffSignSummary::all_positive: result.kind = SignClass::Kind::positive; return result;
    case CoeffSignSummary::all_negative: result.kind = SignClass::Kind::negative; return result;
    case CoeffSignSummary::mixed_signs: break;
  }

  Lcg64 rng(seed);
  for (std::size_t i = 0; i < budget && !(result.positive_witness && result.negative_witness); ++i) {
    RationalPoint point = next_point(p, rng);
    switch (sign_of(p.eval_at(point))) {
      case Sign::positive:
        if (!result.positive_witness) result.positive_witness = std::move(point);
        break;
      case Sign::negative:
        if (!result.negative_witness) result.negative_witness = std::move(point);
        break;
      case Sign::zero: break;
    }
  }
  result.kind = result.positive_witness && result.negative_witness ? SignClass::Kind::mixed : SignClass::Kind::unresolved;
  return result;
}

namespace {

struct RationalIsZero {
  bool operator()(const mpq_class& q) const noexcept { return sgn(q) == 0; }
};

}  // namespace

SeprSequence sepr_at_point(const SymMatrix& m, const RationalPoint& point) {
  const std::size_t n = m.size();
  if (n > kMaxEnumerationDimension)
    throw DomainError("principal minor enumeration is limited to n <= " + std::to_string(kMaxEnumerationDimension));
  if (m.vars()) point.require_positive_for(*m.vars());

  std::vector<mpq_class> cells;
  cells.reserve(n * n);
  for (const auto& e : m.row_major()) cells.push_back(e.eval_at(point));
  detail::LaplaceExpander<mpq_class, RationalIsZero> expander(n, std::move(cells), mpq_class(0), mpq_class(1),
                                                              RationalIsZero{});

  SeprSequence sequence(n);
  const std::uint32_t end = n == 0 ? 1 : (std::uint32_t{1} << n);
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    sequence[std::popcount(mask) - 1].insert(sign_of(expander.det(mask, mask)));
  }
  return sequence;
}

SeprSequence sepr_at_point(const MinorTable& minors, const VariableTable& vars, const RationalPoint& point) {
  point.require_positive_for(vars);
  const std::size_t n = minors.dimension();
  SeprSequence sequence(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto mask : minors.masks_of_order(k)) sequence[k - 1].insert(sign_of(minors.at(mask).eval_at(point)));
  }
  return sequence;
}

}  // namespace sepr
