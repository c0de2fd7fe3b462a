#pragma once

#include "apsum/apsearch.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apsum {

enum class FamilyId {
  ThreeTermA,        // a = 2, b = 2^k + 1, N = 2^k + 1, D = 2^j
  ThreeTermB,        // a = 2, b = 2^k + 1, N = 2^(k+1) + 1, D = 2^j - 2^k
  ThreeTermMultDep,  // a = r^d, b = r^c, N = a^(kc) + b^(kd), D = a^((k+j)c) - a^(kc)
  FourTermPowers2A,  // a = 2^d, b = 2^c, dk - cj = 1
  FourTermPowers2B,  // a = 2^d, b = 2^c, dk - cj = -1
  Prog1,
  Prog2,
  Prog3,
  Prog4,
  Prog5,
  Prog6,
  Prog7,
};

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family_id(std::string_view text);
const std::vector<FamilyId>& all_families();

/// Parameter names accepted by a family, in canonical order.
const std::vector<std::string>& family_parameters(FamilyId id);

using FamilyParams = std::map<std::string, std::int64_t, std::less<>>;

struct FamilySpec {
  FamilyId id = FamilyId::Prog1;
  FamilyParams params;

  /// Throws ContractError naming the violated constraint.
  void validate() const;
};

struct FamilyProgression {
  SumsetParams params;
  Progression prog;  // each term carries the closed-form representation only
};

FamilyProgression generate(const FamilySpec& spec);

/// Terms in AP with D >= 1, every claimed representation correct, and every
/// term confirmed by the membership oracle.
bool verify(const Progression& prog, const SumsetParams& params);

/// The (a, b) = (22, 78) progression 22 + 78^2, 22^4 + 78^2, 22 + 78^3, 22^4 + 78^3.
FamilyProgression example_22_78();

struct Prog3Pair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  unsigned delta1 = 0;
  unsigned delta2 = 0;
  auto operator<=>(const Prog3Pair&) const = default;
};

/// All b > a > 1 with a <= limit and b^2 - b^delta2 = 2a^2 - 2a^delta1, sorted.
std::vector<Prog3Pair> find_prog3_pairs(std::uint64_t limit);

/// Number of distinct (N, D) generated inside one fixed S_{a,b} with every
/// term <= limit. Fixed bases: three-term-A/B use k = 1 (S_{2,3}),
/// three-term-multdep uses r = 2, d = 1, c = 2 (S_{2,4}), and both
/// four-term-powers2 families use d = 1, c = 3 (S_{2,8}).
std::size_t count_instances(FamilyId id, u128 limit);

struct RoundTripReport {
  std::size_t generated = 0;
  std::size_t verified = 0;
  std::size_t skipped = 0;  // valid assignments whose last term exceeds 2^max_bits
  std::vector<FamilySpec> failures;
};

/// generate -> verify over every valid parameter assignment with each
/// parameter in [0, max_param] (prog3 pairs come from find_prog3_pairs with
/// a <= max_param). Only the multiplicatively dependent families can reach
/// max_bits at desk-scale grids.
RoundTripReport round_trip(FamilyId id, std::int64_t max_param, unsigned threads = 1, unsigned max_bits = 8192);

}  // namespace apsum
