#pragma once

#include "apsum/sumset.hpp"

#include <optional>
#include <vector>

namespace apsum {

/// N, N+D, ..., N+(length-1)D with every term in S_{a,b}, carrying the full
/// representation list of each term.
struct Progression {
  Natural start;  // N
  Natural step;   // D >= 1
  std::vector<SumsetElement> terms;

  std::size_t length() const { return terms.size(); }
  Natural term(std::size_t i) const { return start + step * i; }
};

struct ApSearchReport {
  SumsetParams params;
  unsigned k = 0;
  u128 limit = 0;
  std::vector<Progression> progressions;  // sorted by (N, D)
  std::vector<bool> maximal;              // neither N-D nor N+kD lies in S_{a,b}
};

/// Every k-term progression in S_{a,b} whose last term is at most limit.
ApSearchReport find_progressions(const SumsetParams& params, unsigned k, u128 limit, unsigned threads = 1);

struct CountRow {
  u128 limit = 0;
  std::size_t windows = 0;  // distinct (N, D)
  std::size_t maximal = 0;  // windows that extend in neither direction
};

struct StabilityReport {
  SumsetParams params;
  std::vector<CountRow> rows;
  bool stabilized = false;  // last two window counts equal
};

/// 3-term progression counts at each limit (ascending).
StabilityReport count_3term_stable(const SumsetParams& params, const std::vector<u128>& limits,
                                   unsigned threads = 1);

enum class Direction { Forward, Backward };

/// The progression lengthened by one term in the given direction, if that
/// term lies in S_{a,b}.
std::optional<Progression> extend(const SumsetParams& params, const Progression& prog, Direction direction);

/// Builds a progression from (N, D, length), computing witnesses. Returns
/// nullopt if some term is not in S_{a,b}.
std::optional<Progression> make_progression(const SumsetParams& params, const Natural& start, const Natural& step,
                                            std::size_t length);

bool is_maximal(const SumsetParams& params, const Progression& prog);

}  // namespace apsum
