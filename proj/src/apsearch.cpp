#include "apsum/apsearch.hpp"

#include "apsum/parallel.hpp"

#include <algorithm>

namespace apsum {

namespace {

struct Window {
  u128 start;
  u128 step;
  auto operator<=>(const Window&) const = default;
};

// All (N, D) with N + iD in the table for 0 <= i < k and N + (k-1)D <= limit.
std::vector<Window> scan_windows(const SumsetTable& table, unsigned k, unsigned threads) {
  const auto& values = table.values();
  const u128 limit = table.limit();
  const u128 span = k - 1;
  std::vector<std::vector<Window>> per_start(values.size());
  parallel_for(values.size(), threads, [&](std::size_t i) {
    const u128 start = values[i];
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const u128 step = values[j] - start;
      // start + span*step <= limit, written to avoid overflow.
      if (step > (limit - start) / span) break;
      bool ok = true;
      u128 term = values[j];
      for (unsigned t = 2; t < k; ++t) {
        term += step;
        if (!table.contains(term)) {
          ok = false;
          break;
        }
      }
      if (ok) per_start[i].push_back({start, step});
    }
  });
  std::vector<Window> out;
  for (auto& v : per_start) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool member(const SumsetParams& params, const Natural& n) { return n >= 2 && contains(params, n); }

}  // namespace

std::optional<Progression> make_progression(const SumsetParams& params, const Natural& start, const Natural& step,
                                            std::size_t length) {
  if (step < 1) return std::nullopt;
  Progression prog{start, step, {}};
  prog.terms.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    Natural value = start + step * i;
    auto reps = representations(params, value);
    if (reps.empty()) return std::nullopt;
    prog.terms.push_back({std::move(value), std::move(reps)});
  }
  return prog;
}

bool is_maximal(const SumsetParams& params, const Progression& prog) {
  const Natural before = prog.start - prog.step;
  const Natural after = prog.start + prog.step * prog.length();
  return !member(params, before) && !member(params, after);
}

ApSearchReport find_progressions(const SumsetParams& params, unsigned k, u128 limit, unsigned threads) {
  if (k < 3) throw ContractError("find_progressions: k must be >= 3");
  if (limit < 2) throw ContractError("find_progressions: limit must be >= 2");
  SumsetTable table(params, limit);
  ApSearchReport report{params, k, limit, {}, {}};
  for (const auto& w : scan_windows(table, k, threads)) {
    Progression prog{Natural(w.start), Natural(w.step), {}};
    prog.terms.reserve(k);
    for (unsigned i = 0; i < k; ++i) {
      auto index = table.find(w.start + w.step * i);
      prog.terms.push_back(table.element(static_cast<std::size_t>(index)));
    }
    report.maximal.push_back(is_maximal(params, prog));
    report.progressions.push_back(std::move(prog));
  }
  return report;
}

StabilityReport count_3term_stable(const SumsetParams& params, const std::vector<u128>& limits, unsigned threads) {
  if (!std::is_sorted(limits.begin(), limits.end())) throw ContractError("count_3term_stable: limits must ascend");
  StabilityReport report{params, {}, false};
  if (limits.empty()) return report;
  const auto full = find_progressions(params, 3, limits.back(), threads);
  for (u128 limit : limits) {
    CountRow row{limit, 0, 0};
    for (std::size_t i = 0; i < full.progressions.size(); ++i) {
      const auto& prog = full.progressions[i];
      if (prog.term(2) > Natural(limit)) continue;
      ++row.windows;
      if (full.maximal[i]) ++row.maximal;
    }
    report.rows.push_back(row);
  }
  report.stabilized = report.rows.size() >= 2 &&
                      report.rows[report.rows.size() - 1].windows == report.rows[report.rows.size() - 2].windows;
  return report;
}

std::optional<Progression> extend(const SumsetParams& params, const Progression& prog, Direction direction) {
  if (prog.length() == 0 || prog.step < 1) return std::nullopt;
  Progression out = prog;
  if (direction == Direction::Forward) {
    Natural next = prog.start + prog.step * prog.length();
    auto reps = representations(params, next);
    if (reps.empty()) return std::nullopt;
    out.terms.push_back({std::move(next), std::move(reps)});
    return out;
  }
  Natural prev = prog.start - prog.step;
  if (prev < 2) return std::nullopt;
  auto reps = representations(params, prev);
  if (reps.empty()) return std::nullopt;
  out.start = prev;
  out.terms.insert(out.terms.begin(), SumsetElement{std::move(prev), std::move(reps)});
  return out;
}

}  // namespace apsum
