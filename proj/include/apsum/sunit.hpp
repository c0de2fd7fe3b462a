#pragma once

#include "apsum/numutil.hpp"

#include <array>
#include <compare>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apsum {

// ---------------------------------------------------------------------------
// Generic signed two-prime patterns: sum_i c_i p^{e_i} q^{f_i} = 0.

/// An exponent slot: either a reference to a pattern variable or a constant.
struct ExponentRef {
  int var = -1;
  unsigned fixed = 0;

  static ExponentRef variable(int index) { return {index, 0}; }
  static ExponentRef constant(unsigned value) { return {-1, value}; }
  bool is_variable() const { return var >= 0; }
};

struct PatternTerm {
  std::int64_t coefficient = 1;  // nonzero, sign included
  ExponentRef p_exp = ExponentRef::constant(0);
  ExponentRef q_exp = ExponentRef::constant(0);
};

struct PatternVariable {
  std::string name;
  unsigned min = 0;
  unsigned max = 0;  // inclusive
};

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

/// variables[lhs] <rel> variables[rhs]
struct VariableConstraint {
  int lhs = 0;
  Relation rel = Relation::Greater;
  int rhs = 0;
};

/// Accepts a solution only when the signed sum of `terms` (same exponent
/// conventions as the main equation) is base^e for some e >= 0.
struct PowerCondition {
  std::vector<PatternTerm> terms;
  std::uint64_t base = 2;
};

struct PatternSolution {
  std::vector<unsigned> assignment;  // indexed like Pattern::variables
  std::vector<Natural> term_values;  // signed

  friend bool operator==(const PatternSolution& l, const PatternSolution& r) {
    return l.assignment == r.assignment && l.term_values == r.term_values;
  }
};

using SolutionFilter = std::function<bool(const PatternSolution&)>;

struct Pattern {
  std::uint64_t p = 2;
  std::uint64_t q = 3;
  std::vector<PatternTerm> terms;
  std::vector<PatternVariable> variables;
  bool require_primitive = false;
  bool forbid_vanishing_subsums = false;
  std::optional<Natural> value_bound;  // max |term value|
  std::vector<VariableConstraint> constraints;
  std::vector<PowerCondition> side_conditions;
  SolutionFilter post_filter;

  /// Throws ContractError when the pattern is malformed.
  void validate() const;
  /// Number of assignments in the declared variable box.
  Natural search_space() const;
  int variable_index(const std::string& name) const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(Natural estimate, Natural budget);
  const Natural& estimate() const { return estimate_; }
  const Natural& budget() const { return budget_; }

 private:
  Natural estimate_;
  Natural budget_;
};

struct SolveOptions {
  Natural budget = Natural(500'000'000);
  unsigned threads = 1;
};

/// Every assignment in the variable box satisfying the equation and all
/// enabled filters, in lexicographic variable order. Throws BudgetExceeded
/// instead of truncating when the box is larger than the budget.
std::vector<PatternSolution> solve_pattern(const Pattern& pattern, const SolveOptions& options = {});

/// True if a proper nonempty subset of `values` sums to zero.
bool has_vanishing_subsum(std::span<const i128> values);
bool has_vanishing_subsum(std::span<const Natural> values);

// ---------------------------------------------------------------------------
// Three-term equation x + y = z over a prime set.

struct TripleSolution {
  u128 x = 0;
  u128 y = 0;
  u128 z = 0;
  auto operator<=>(const TripleSolution&) const = default;
};

PrimeSet deweger_primes();  // {2, 3, 5, 7, 11, 13}

/// All x + y = z with x <= y, gcd(x, y) = 1, xyz smooth over `primes` and
/// z <= z_limit, sorted by (z, x).
std::vector<TripleSolution> deweger_3term(const PrimeSet& primes, u128 z_limit, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Four-term equations in two primes with every prime power <= 2^15.

enum class FourTermShape {
  MixedUnit,  // p^x q^y ± p^z ± q^w ± 1 = 0
  TwoPairs,   // p^x ± q^y ± p^z ± q^w = 0
};

struct FourTermSolution {
  FourTermShape shape = FourTermShape::TwoPairs;
  std::array<unsigned, 4> exponents{};  // (x, y, z, w)
  std::array<int, 4> signs{};           // signs[0] == +1
  std::array<i128, 4> values{};         // signed term values, summing to zero

  auto operator<=>(const FourTermSolution&) const = default;
};

inline constexpr std::uint64_t kFourTermPowerBound = 1u << 15;

/// Complete list for both shapes and every sign vector, excluding solutions
/// with vanishing subsums. Requires distinct primes with max(p, q) < 200.
std::vector<FourTermSolution> deze_tijdeman_4term(std::uint64_t p, std::uint64_t q);

/// Canonical representative of a TwoPairs solution under the swaps
/// (x <-> z), (y <-> w) and global negation. MixedUnit is returned as is.
FourTermSolution canonical_four_term(const FourTermSolution& s);

// ---------------------------------------------------------------------------
// Five-term {2,3}-unit equation.

struct SUnitTerm {
  int sign = 1;
  unsigned alpha = 0;
  unsigned beta = 0;
  std::uint64_t magnitude = 1;  // 2^alpha 3^beta

  auto operator<=>(const SUnitTerm&) const = default;
};

struct FiveTermSolution {
  std::array<SUnitTerm, 5> terms;  // magnitude descending, terms[0] positive
  auto operator<=>(const FiveTermSolution&) const = default;
};

struct FiveTermBounds {
  unsigned alpha_max = 19;
  unsigned beta_max = 12;
  std::uint64_t value_max = 531441;  // 3^12
};

/// Canonical ordering of five signed terms: magnitude descending, positive
/// before negative on ties, overall sign chosen so the first term is positive.
FiveTermSolution canonical_five_term(std::array<SUnitTerm, 5> terms);

/// Primitive solutions without vanishing subsums of
/// ±2^a1 3^b1 ± ... ± 2^a5 3^b5 = 0 inside `bounds`, found by joining signed
/// 2-term and 3-term sums.
std::vector<FiveTermSolution> bajpai_bennett_5term(const FiveTermBounds& bounds = {}, unsigned threads = 1);

}  // namespace apsum
