#pragma once

#include "apsum/apsearch.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace apsum {

/// (a, b, N, D)
using ApTuple = std::array<Natural, 4>;

enum class ClassKind { Family1, Family2, Sporadic };
std::string_view to_string(ClassKind kind);

/// One entry of the five-term classification.
///   Family1(k): (2, 2^k + 1, 2^k + 1, 2^k)
///   Family2(k): (3, 4*3^(k-1) + 1, 3^(k-1) + 1, 2*3^(k-1))
struct ClassEntry {
  ClassKind kind = ClassKind::Sporadic;
  std::optional<unsigned> k;
  ApTuple tuple;

  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

ClassEntry family1(unsigned k);
ClassEntry family2(unsigned k);
const std::vector<ClassEntry>& sporadic_entries();

std::optional<ClassEntry> theorem1_match(const Natural& a, const Natural& b, const Natural& N, const Natural& D);

struct SweepConfig {
  std::uint64_t a_max = 10;
  std::uint64_t b_max = 10;  // grid: 2 <= a < b, a <= a_max, b <= b_max
  u128 term_limit = 1000000;
  unsigned k = 5;

  void validate() const;
};

struct SweepHit {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  Progression prog;
  bool maximal = false;
  std::optional<ClassEntry> entry;  // set for five-term sweeps
};

struct SweepReport {
  SweepConfig config;
  std::size_t pairs = 0;
  std::vector<SweepHit> hits;  // sorted by (a, b, N, D)
  std::vector<ApTuple> unclassified;
  std::vector<ClassEntry> witnessed;
  std::vector<ClassEntry> expected;  // every entry that fits the grid and the limit
  std::vector<ClassEntry> missing;   // expected but not found
  bool ok = false;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> sweep_pairs(const SweepConfig& cfg);

/// Every k-term progression over the (a, b) grid. Output is independent of threads.
std::vector<SweepHit> sweep_grid(const SweepConfig& cfg, unsigned threads = 1);

/// Five-term sweep checked against the classification.
SweepReport verify_theorem1(const SweepConfig& cfg, unsigned threads = 1);

/// Six- and seven-term sweeps: six terms must give exactly the windows
/// (2,3,3,2), (2,3,17,24), (2,9,17,24) (those within the grid and limit), seven none.
SweepReport verify_corollary(const SweepConfig& cfg, unsigned threads = 1);

struct NonExtensionRow {
  ClassKind kind = ClassKind::Family1;
  unsigned k = 0;
  ApTuple tuple;
  Natural next;  // N + 5D
  bool five_terms_ok = false;
  bool extends = false;
};

struct NonExtensionReport {
  std::vector<NonExtensionRow> rows;
  bool ok = false;  // only Family1 k = 1 extends, and every instance is a genuine 5-term progression
};

NonExtensionReport family_nonextension(unsigned k_max);

}  // namespace apsum
