#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepr/minors.hpp"
#include "sepr/polynomial.hpp"
#include "sepr/rational_point.hpp"
#include "sepr/sym_matrix.hpp"

namespace sepr {

enum class Sign : std::uint8_t { zero, positive, negative };

Sign sign_of(const mpq_class& value) noexcept;
Sign sign_of(const mpz_class& value) noexcept;
/// '0', '+' or '-'.
char symbol(Sign s) noexcept;

/// Subset of {0, +, -}. Elements always print in the order 0, +, -.
class SignSet {
 public:
  constexpr SignSet() = default;
  SignSet(std::initializer_list<Sign> signs) {
    for (auto s : signs) insert(s);
  }

  void insert(Sign s) noexcept { bits_ |= bit(s); }
  bool contains(Sign s) const noexcept { return (bits_ & bit(s)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept;
  bool is_subset_of(const SignSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<Sign> elements() const;
  /// "{0,+,-}", "{0}", "{}".
  std::string to_string() const;

  SignSet& operator|=(const SignSet& other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  friend bool operator==(const SignSet&, const SignSet&) = default;

 private:
  static constexpr std::uint8_t bit(Sign s) noexcept { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s)); }
  std::uint8_t bits_ = 0;
};

/// s_1 .. s_n; element k-1 holds s_k.
using SeprSequence = std::vector<SignSet>;

/// Space-separated sets, e.g. "{0} {0} {0,+,-}".
std::string to_string(const SeprSequence& sequence);

/// 64-bit LCG, state' = state * 6364136223846793005 + 1442695040888963407.
/// Each draw advances the state and yields its upper 32 bits.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint32_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  /// Uniform integer in [lo, hi] (modulo reduction of one draw).
  std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi) noexcept { return lo + next() % (hi - lo + 1); }
  /// u/v with u and v drawn uniformly from [1, 100], numerator first.
  mpq_class draw_rational();

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Assigns every variable of `vars`, in index order, a fresh draw_rational().
RationalPoint sample_positive_point(const VariableTable& vars, Lcg64& rng);

inline constexpr std::size_t kDefaultBudget = 1000;

/// Draws up to `budget` points from Lcg64(seed) and returns the first one where
/// p has exactly the target sign. Target must be positive or negative
/// (DomainError otherwise). Constant-sign polynomials that cannot reach the
/// target return nothing without sampling.
std::optional<RationalPoint> witness_search(const Polynomial& p, Sign target, std::size_t budget, std::uint64_t seed);

/// Sign behaviour of one polynomial over the open positive orthant.
struct SignClass {
  enum class Kind { zero, positive, negative, mixed, unresolved };

  Kind kind = Kind::zero;
  /// Set for mixed; for unresolved, at most one of the two is set.
  std::optional<RationalPoint> positive_witness;
  std::optional<RationalPoint> negative_witness;

  friend bool operator==(const SignClass&, const SignClass&) = default;
};

/// "Zero", "Pos", "Neg", "Mixed", "Unresolved".
const char* to_string(SignClass::Kind kind) noexcept;

/// Zero/Pos/Neg come from the exact coefficient test. Otherwise both signs are
/// searched with the same seeded stream; the result equals running
/// witness_search for + and - separately.
SignClass classify_polynomial(const Polynomial& p, std::size_t budget = kDefaultBudget, std::uint64_t seed = 0);

/// Exact sign sets of all principal minors at a strictly positive point.
/// Throws UnassignedVariable or OrthantViolation.
SeprSequence sepr_at_point(const SymMatrix& m, const RationalPoint& point);

/// Same, evaluating precomputed symbolic minors.
SeprSequence sepr_at_point(const MinorTable& minors, const VariableTable& vars, const RationalPoint& point);

}  // namespace sepr
