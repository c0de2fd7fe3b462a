#pragma once

#include "apsum/numutil.hpp"

#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace apsum {

/// The base pair (a, b) of S_{a,b} = { a^x + b^y : x, y >= 0 }, with b > a > 1.
class SumsetParams {
 public:
  SumsetParams(Natural a, Natural b);
  SumsetParams(std::uint64_t a, std::uint64_t b) : SumsetParams(Natural(a), Natural(b)) {}

  const Natural& a() const { return a_; }
  const Natural& b() const { return b_; }

  /// True when both bases fit in 64 bits, enabling the 128-bit search paths.
  bool word_sized() const { return word_sized_; }
  std::uint64_t a64() const;
  std::uint64_t b64() const;

  friend bool operator==(const SumsetParams& l, const SumsetParams& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

 private:
  Natural a_;
  Natural b_;
  bool word_sized_ = false;
};

struct Representation {
  unsigned x = 0;
  unsigned y = 0;
  auto operator<=>(const Representation&) const = default;
};

struct SumsetElement {
  Natural value;
  std::vector<Representation> reps;  // complete, sorted by x
};

/// Every (x, y) with a^x + b^y == n, sorted by x. Empty iff n is not in S_{a,b}.
std::vector<Representation> representations(const SumsetParams& params, const Natural& n);
std::vector<Representation> representations(const SumsetParams& params, u128 n);

bool contains(const SumsetParams& params, const Natural& n);
bool contains(const SumsetParams& params, u128 n);

/// All elements of S_{a,b} not exceeding limit, ascending.
std::vector<SumsetElement> enumerate(const SumsetParams& params, const Natural& limit);


/// Materialized S_{a,b} ∩ [2, limit] for word-sized bases, with O(1) lookup.
class SumsetTable {
 public:
  SumsetTable(const SumsetParams& params, u128 limit);

  const std::vector<u128>& values() const { return values_; }
  const std::vector<Representation>& reps(std::size_t index) const { return reps_[index]; }
  u128 limit() const { return limit_; }
  bool contains(u128 v) const { return index_.count(v) != 0; }
  /// Index of v in values(), or -1.
  std::ptrdiff_t find(u128 v) const;
  SumsetElement element(std::size_t index) const;

 private:
  u128 limit_;
  std::vector<u128> values_;
  std::vector<std::vector<Representation>> reps_;
  std::unordered_map<u128, std::size_t, U128Hash> index_;
};

}  // namespace apsum
