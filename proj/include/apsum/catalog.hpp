#pragma once

#include "apsum/numutil.hpp"
#include "apsum/sunit.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace apsum {

// ---------------------------------------------------------------------------
// b^x - b^y = 2^alpha 3^beta

struct LemmaSolution {
  std::uint64_t b = 2;
  unsigned x = 0;
  unsigned y = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  auto operator<=>(const LemmaSolution&) const = default;
};

enum class LemmaCase {
  SmoothPlusOne,     // b = 2^alpha 3^beta + 1, x = 1, y = 0
  BaseThreeStepOne,  // b = 3, x = y + 1, beta = y, alpha = 1
  BaseThreeStepTwo,  // b = 3, x = y + 2, beta = y, alpha = 3
  BaseNineStepOne,   // b = 9, x = y + 1, beta = 2y, alpha = 3
  BaseFourStepOne,   // b = 4, x = y + 1, alpha = 2y, beta = 1
  Sporadic,          // y = 0 and (b, x, alpha, beta) in the printed list
  PaperDiscrepancy,  // a corrected form of a misprinted sporadic entry
  OutsideHypothesis, // b = 2 solution matching no case (the classification assumes b > 2)
  Unlisted,
};

std::string_view to_string(LemmaCase c);

/// All solutions with x <= x_max, alpha <= alpha_max, beta <= beta_max, sorted by (x, y).
std::vector<LemmaSolution> lemma21_solve(std::uint64_t b, unsigned x_max, unsigned alpha_max, unsigned beta_max);

/// First matching case, in declaration order.
LemmaCase lemma21_classify(const LemmaSolution& sol);

/// Sporadic (b, x, alpha, beta) entries exactly as printed.
const std::vector<std::array<std::uint64_t, 4>>& lemma_printed_sporadic();

// ---------------------------------------------------------------------------
// Registry of named finite computations.

using Tuple = std::vector<std::int64_t>;

struct DocumentedDiscrepancy {
  std::vector<Tuple> printed;  // expected entries the search does not reproduce
  std::vector<Tuple> found;    // found entries replacing them
  std::string note;
};

struct ParametricFamily {
  std::string name;
  std::string parameter;
  std::int64_t first = 0;
  std::int64_t last = 0;
  std::vector<std::string> components;  // one expression per tuple slot
};

struct NamedCheck {
  std::string id;
  std::string description;
  std::string location;
  std::string solver;          // pattern | trinomial-powers | kruk-scan | lemma-sweep
  nlohmann::json params;       // solver input, including every bound
  std::vector<std::string> tuple;  // "name" or "name=expr" over solver outputs
  std::vector<std::string> recheck;  // assertions over tuple names
  std::vector<Tuple> expected;
  std::vector<ParametricFamily> families;
  std::vector<DocumentedDiscrepancy> discrepancies;
};

enum class CheckStatus { Pass, PaperDiscrepancy, Fail };
std::string_view to_string(CheckStatus s);

struct VerificationReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Fail;
  std::vector<std::string> tuple_names;
  std::vector<Tuple> found;
  std::vector<Tuple> expected;  // explicit entries plus materialized family instances
  std::vector<Tuple> missing;   // expected \ found
  std::vector<Tuple> extra;     // found \ expected
  std::vector<Tuple> expected_recheck_failures;
  std::vector<Tuple> found_recheck_failures;
  nlohmann::json bounds_used;
  double elapsed_ms = 0;
};

/// A Pattern from its JSON form (the "params" object of a pattern check):
///   variables: [{name, min?, max}], terms: [{coef?, p?, q?}] with exponents
///   given as a variable name or a constant, constraints: ["x > y"],
///   side_conditions: [{base, terms}], filters: [assertion over variables, p, q],
///   forbid_vanishing_subsums, require_primitive, value_bound.
Pattern pattern_from_json(const nlohmann::json& spec, std::uint64_t p, std::uint64_t q);
Pattern pattern_from_json(const nlohmann::json& spec);  // reads p and q from the object

class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<NamedCheck> checks);

  /// Parses the documented registry format; throws ContractError on schema errors.
  static Registry from_json(const nlohmann::json& doc);
  static Registry load(const std::string& path);
  /// The registry shipped with the project (compiled in).
  static const Registry& builtin();

  const std::vector<NamedCheck>& checks() const { return checks_; }
  const NamedCheck* find(std::string_view id) const;

 private:
  std::vector<NamedCheck> checks_;
};

/// Throws ContractError for an unknown id.
VerificationReport run_check(const Registry& registry, std::string_view id, unsigned threads = 1);
VerificationReport run_check(const NamedCheck& check, unsigned threads = 1);

/// Every check, ordered by id.
std::vector<VerificationReport> run_all(const Registry& registry, unsigned threads = 1);

bool all_passed(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace apsum
