#include "apsum/sumset.hpp"

#include <algorithm>
#include <map>

namespace apsum {

SumsetParams::SumsetParams(Natural a, Natural b) : a_(std::move(a)), b_(std::move(b)) {
  if (!(a_ > 1 && b_ > a_)) throw ContractError("sumset parameters require b > a > 1");
  word_sized_ = b_ <= Natural(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t SumsetParams::a64() const {
  if (!word_sized_) throw ContractError("sumset base does not fit in 64 bits");
  return static_cast<std::uint64_t>(a_);
}

std::uint64_t SumsetParams::b64() const {
  if (!word_sized_) throw ContractError("sumset base does not fit in 64 bits");
  return static_cast<std::uint64_t>(b_);
}

std::vector<Representation> representations(const SumsetParams& params, u128 n) {
  std::vector<Representation> out;
  if (n < 2) return out;
  if (!params.word_sized()) return representations(params, Natural(n));
  const u128 a = params.a64();
  const u128 b = params.b64();
  u128 ax = 1;
  for (unsigned x = 0; ax < n; ++x) {
    if (auto y = power_exponent(n - ax, b)) out.push_back({x, *y});
    auto next = checked_mul(ax, a);
    if (!next) break;
    ax = *next;
  }
  return out;
}

namespace {

// Largest prime below 2^62; unlike 2^61 - 1 it does not make powers of two periodic.
constexpr std::uint64_t kModulus = (std::uint64_t{1} << 62) - 57;

std::uint64_t residue(const Natural& v) { return static_cast<std::uint64_t>(v % kModulus); }
std::uint64_t mul_residue(std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(u128(x) * y % kModulus); }

}  // namespace

std::vector<Representation> representations(const SumsetParams& params, const Natural& n) {
  if (n < 2) return {};
  if (params.word_sized()) {
    if (auto small = to_u128(n)) return representations(params, *small);
  }
  // Candidates are matched modulo a 62-bit prime and then confirmed exactly, so a
  // residue collision can only cost time, never correctness.
  namespace mp = boost::multiprecision;
  const auto top = mp::msb(n);
  const unsigned x_max = static_cast<unsigned>(top / mp::msb(params.a()));
  const unsigned y_max = static_cast<unsigned>(top / mp::msb(params.b()));
  std::unordered_multimap<std::uint64_t, unsigned> a_res;
  a_res.reserve(x_max + 1);
  const std::uint64_t am = residue(params.a());
  std::uint64_t r = 1;
  for (unsigned x = 0; x <= x_max; ++x, r = mul_residue(r, am)) a_res.emplace(r, x);
  const std::uint64_t nm = residue(n);
  const std::uint64_t bm = residue(params.b());
  std::vector<Representation> out;
  r = 1;
  for (unsigned y = 0; y <= y_max; ++y, r = mul_residue(r, bm)) {
    const std::uint64_t want = (nm + kModulus - r) % kModulus;
    const auto [lo, hi] = a_res.equal_range(want);
    for (auto it = lo; it != hi; ++it) {
      if (pow(params.a(), it->second) + pow(params.b(), y) == n) out.push_back({it->second, y});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const SumsetParams& params, const Natural& n) { return !representations(params, n).empty(); }
bool contains(const SumsetParams& params, u128 n) { return !representations(params, n).empty(); }

std::vector<SumsetElement> enumerate(const SumsetParams& params, const Natural& limit) {
  if (params.word_sized()) {
    if (auto small = to_u128(limit)) {
      SumsetTable table(params, *small);
      std::vector<SumsetElement> out;
      out.reserve(table.values().size());
      for (std::size_t i = 0; i < table.values().size(); ++i) out.push_back(table.element(i));
      return out;
    }
  }
  std::map<Natural, std::vector<Representation>> acc;
  Natural ax = 1;
  for (unsigned x = 0; ax < limit; ++x) {
    Natural by = 1;
    for (unsigned y = 0; ax + by <= limit; ++y) {
      acc[ax + by].push_back({x, y});
      by *= params.b();
    }
    ax *= params.a();
  }
  std::vector<SumsetElement> out;
  out.reserve(acc.size());
  for (auto& [value, reps] : acc) {
    std::sort(reps.begin(), reps.end());
    out.push_back({value, std::move(reps)});
  }
  return out;
}

SumsetTable::SumsetTable(const SumsetParams& params, u128 limit) : limit_(limit) {
  const u128 a = params.a64();
  const u128 b = params.b64();
  std::vector<std::pair<u128, Representation>> raw;
  u128 ax = 1;
  for (unsigned x = 0; ax < limit; ++x) {
    u128 by = 1;
    for (unsigned y = 0; by <= limit - ax; ++y) {
      raw.push_back({ax + by, {x, y}});
      auto next = checked_mul(by, b);
      if (!next) break;
      by = *next;
    }
    auto next = checked_mul(ax, a);
    if (!next) break;
    ax = *next;
  }
  std::sort(raw.begin(), raw.end(), [](const auto& l, const auto& r) {
    return l.first != r.first ? l.first < r.first : l.second < r.second;
  });
  for (const auto& [value, rep] : raw) {
    if (values_.empty() || values_.back() != value) {
      values_.push_back(value);
      reps_.emplace_back();
    }
    reps_.back().push_back(rep);
  }
  index_.reserve(values_.size() * 2);
  for (std::size_t i = 0; i < values_.size(); ++i) index_.emplace(values_[i], i);
}

std::ptrdiff_t SumsetTable::find(u128 v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

SumsetElement SumsetTable::element(std::size_t index) const { return {Natural(values_[index]), reps_[index]}; }

}  // namespace apsum
