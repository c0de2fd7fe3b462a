#include "apsum/parallel.hpp"
#include "apsum/sunit.hpp"

#include <algorithm>
#include <type_traits>

namespace apsum {

BudgetExceeded::BudgetExceeded(Natural estimate, Natural budget)
    : std::runtime_error("search space " + estimate.str() + " exceeds budget " + budget.str()),
      estimate_(std::move(estimate)),
      budget_(std::move(budget)) {}

int Pattern::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void Pattern::validate() const {
  if (!is_prime(p) || !is_prime(q)) throw ContractError("pattern primes must be prime");
  if (terms.size() < 2) throw ContractError("pattern needs at least two terms");
  if (forbid_vanishing_subsums && terms.size() > 20) throw ContractError("subsum check limited to 20 terms");
  std::vector<bool> used(variables.size(), false);
  auto check_ref = [&](const ExponentRef& ref, bool mark) {
    if (!ref.is_variable()) return;
    if (static_cast<std::size_t>(ref.var) >= variables.size()) throw ContractError("pattern term references unknown variable");
    if (mark) used[static_cast<std::size_t>(ref.var)] = true;
  };
  for (const auto& t : terms) {
    if (t.coefficient == 0) throw ContractError("pattern coefficients must be nonzero");
    check_ref(t.p_exp, true);
    check_ref(t.q_exp, true);
  }
  for (const auto& cond : side_conditions) {
    if (cond.base < 2) throw ContractError("side condition base must be >= 2");
    for (const auto& t : cond.terms) {
      check_ref(t.p_exp, false);
      check_ref(t.q_exp, false);
    }
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!used[i]) throw ContractError("pattern variable '" + variables[i].name + "' is not used by any term");
    if (variables[i].min > variables[i].max) throw ContractError("pattern variable '" + variables[i].name + "' has empty range");
  }
  for (const auto& c : constraints) {
    if (c.lhs < 0 || c.rhs < 0 || static_cast<std::size_t>(c.lhs) >= variables.size() ||
        static_cast<std::size_t>(c.rhs) >= variables.size())
      throw ContractError("pattern constraint references unknown variable");
  }
}

Natural Pattern::search_space() const {
  Natural total = 1;
  for (const auto& v : variables) total *= Natural(v.max - v.min + 1);
  return total;
}

namespace {

template <class V>
V abs_value(const V& v) {
  return v < 0 ? V(-v) : v;
}

template <class V>
bool vanishing_subsum(std::span<const V> values) {
  const std::size_t n = values.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<V> sums(std::size_t{1} << n);
  sums[0] = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
    sums[mask] = sums[mask & (mask - 1)] + values[low];
    if (sums[mask] == 0) return true;
  }
  return false;
}

unsigned max_exponent(const Pattern& pat, const ExponentRef& ref) {
  return ref.is_variable() ? pat.variables[static_cast<std::size_t>(ref.var)].max : ref.fixed;
}

Natural magnitude_bound(const Pattern& pat, const std::vector<PatternTerm>& terms) {
  Natural total = 0;
  for (const auto& t : terms) {
    total += abs_value(Natural(t.coefficient)) * pow(Natural(pat.p), max_exponent(pat, t.p_exp)) *
             pow(Natural(pat.q), max_exponent(pat, t.q_exp));
  }
  return total;
}

bool relation_holds(unsigned l, Relation rel, unsigned r) {
  switch (rel) {
    case Relation::Less: return l < r;
    case Relation::LessEqual: return l <= r;
    case Relation::Greater: return l > r;
    case Relation::GreaterEqual: return l >= r;
    case Relation::Equal: return l == r;
    case Relation::NotEqual: return l != r;
  }
  return false;
}

template <class V>
struct Evaluator {
  const Pattern& pat;
  std::vector<V> p_pow;
  std::vector<V> q_pow;
  std::optional<V> bound;

  explicit Evaluator(const Pattern& pattern) : pat(pattern) {
    unsigned pmax = 0, qmax = 0;
    auto scan = [&](const std::vector<PatternTerm>& terms) {
      for (const auto& t : terms) {
        pmax = std::max(pmax, max_exponent(pat, t.p_exp));
        qmax = std::max(qmax, max_exponent(pat, t.q_exp));
      }
    };
    scan(pat.terms);
    for (const auto& c : pat.side_conditions) scan(c.terms);
    V acc = 1;
    for (unsigned e = 0; e <= pmax; ++e, acc *= V(pat.p)) p_pow.push_back(acc);
    acc = 1;
    for (unsigned e = 0; e <= qmax; ++e, acc *= V(pat.q)) q_pow.push_back(acc);
    if (pat.value_bound) {
      if constexpr (std::is_same_v<V, Natural>) {
        bound = *pat.value_bound;
      } else if (*pat.value_bound < (Natural(1) << 124)) {
        // Larger bounds cannot bind on the 128-bit path.
        bound = static_cast<V>(*pat.value_bound);
      }
    }
  }

  V value(const PatternTerm& t, const std::vector<unsigned>& a) const {
    const unsigned pe = t.p_exp.is_variable() ? a[static_cast<std::size_t>(t.p_exp.var)] : t.p_exp.fixed;
    const unsigned qe = t.q_exp.is_variable() ? a[static_cast<std::size_t>(t.q_exp.var)] : t.q_exp.fixed;
    return V(t.coefficient) * p_pow[pe] * q_pow[qe];
  }

  bool side_conditions_hold(const std::vector<unsigned>& a) const {
    for (const auto& cond : pat.side_conditions) {
      V sum = 0;
      for (const auto& t : cond.terms) sum += value(t, a);
      if (sum < 1) return false;
      if (!power_exponent(Natural(sum), Natural(cond.base))) return false;
    }
    return true;
  }

  // Appends the solution for assignment `a`, if any.
  void test(const std::vector<unsigned>& a, std::vector<V>& scratch, std::vector<PatternSolution>& out) const {
    for (const auto& c : pat.constraints) {
      if (!relation_holds(a[static_cast<std::size_t>(c.lhs)], c.rel, a[static_cast<std::size_t>(c.rhs)])) return;
    }
    V sum = 0;
    for (std::size_t i = 0; i < pat.terms.size(); ++i) {
      scratch[i] = value(pat.terms[i], a);
      sum += scratch[i];
    }
    if (sum != 0) return;
    if (bound) {
      for (const auto& v : scratch) {
        if (abs_value(v) > *bound) return;
      }
    }
    if (pat.require_primitive) {
      Natural g = 0;
      for (const auto& v : scratch) g = boost::multiprecision::gcd(g, Natural(abs_value(v)));
      if (g != 1) return;
    }
    if (pat.forbid_vanishing_subsums && vanishing_subsum<V>(scratch)) return;
    if (!side_conditions_hold(a)) return;
    PatternSolution sol{a, {}};
    sol.term_values.reserve(scratch.size());
    for (const auto& v : scratch) sol.term_values.emplace_back(v);
    if (pat.post_filter && !pat.post_filter(sol)) return;
    out.push_back(std::move(sol));
  }

  // All assignments whose first variable equals `first`, lexicographically.
  void run(unsigned first, std::vector<PatternSolution>& out) const {
    const auto& vars = pat.variables;
    std::vector<unsigned> a(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) a[i] = vars[i].min;
    a[0] = first;
    std::vector<V> scratch(pat.terms.size());
    for (;;) {
      test(a, scratch, out);
      std::size_t i = vars.size();
      for (;;) {
        if (i == 1) return;
        --i;
        if (a[i] < vars[i].max) {
          ++a[i];
          break;
        }
        a[i] = vars[i].min;
      }
    }
  }
};

template <class V>
std::vector<PatternSolution> solve_with(const Pattern& pat, unsigned threads) {
  Evaluator<V> eval(pat);
  const auto& first = pat.variables.front();
  const std::size_t slots = first.max - first.min + 1;
  std::vector<std::vector<PatternSolution>> parts(slots);
  parallel_for(slots, threads, [&](std::size_t i) { eval.run(first.min + static_cast<unsigned>(i), parts[i]); });
  std::vector<PatternSolution> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool has_vanishing_subsum(std::span<const i128> values) {
  if (values.size() > 20) throw ContractError("subsum check limited to 20 terms");
  return vanishing_subsum<i128>(values);
}

bool has_vanishing_subsum(std::span<const Natural> values) {
  if (values.size() > 20) throw ContractError("subsum check limited to 20 terms");
  return vanishing_subsum<Natural>(values);
}

std::vector<PatternSolution> solve_pattern(const Pattern& pattern, const SolveOptions& options) {
  pattern.validate();
  const Natural space = pattern.search_space();
  if (space > options.budget) throw BudgetExceeded(space, options.budget);
  if (pattern.variables.empty()) {
    // Fixed equation: a single candidate.
    Pattern padded = pattern;
    Evaluator<Natural> eval(padded);
    std::vector<PatternSolution> out;
    std::vector<Natural> scratch(pattern.terms.size());
    eval.test({}, scratch, out);
    return out;
  }
  Natural mag = magnitude_bound(pattern, pattern.terms);
  for (const auto& c : pattern.side_conditions) mag = std::max(mag, magnitude_bound(pattern, c.terms));
  const Natural fast_limit = Natural(1) << 124;
  if (mag < fast_limit) return solve_with<i128>(pattern, options.threads);
  return solve_with<Natural>(pattern, options.threads);
}

}  // namespace apsum
