#pragma once

// Naive reference implementations. These deliberately share no code with the
// library beyond the integer types: double loops, trial division, exhaustive
// enumeration. Tests compare library output against them at small bounds.

#include "apsum/numutil.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using apsum::u128;

inline bool trial_smooth(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  for (auto p : primes)
    while (n % p == 0) n /= p;
  return n == 1;
}

inline std::vector<std::uint64_t> smooth(const std::vector<std::uint64_t>& primes, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (trial_smooth(n, primes)) out.push_back(n);
  return out;
}

// value -> sorted (x, y) list, over a^x + b^y <= limit
inline std::map<u128, std::vector<std::pair<unsigned, unsigned>>> sumset(std::uint64_t a, std::uint64_t b, u128 limit) {
  std::map<u128, std::vector<std::pair<unsigned, unsigned>>> out;
  u128 ax = 1;
  for (unsigned x = 0; ax < limit; ++x, ax *= a) {
    u128 by = 1;
    for (unsigned y = 0; ax + by <= limit; ++y, by *= b) out[ax + by].push_back({x, y});
  }
  for (auto& [v, reps] : out) std::sort(reps.begin(), reps.end());
  return out;
}

// (N, D) of every k-term progression with last term <= limit
inline std::vector<std::pair<u128, u128>> progressions(std::uint64_t a, std::uint64_t b, unsigned k, u128 limit) {
  const auto s = sumset(a, b, limit);
  std::vector<u128> vals;
  for (const auto& kv : s) vals.push_back(kv.first);
  std::vector<std::pair<u128, u128>> out;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      const u128 n = vals[i], d = vals[j] - vals[i];
      bool ok = true;
      for (unsigned t = 2; t < k && ok; ++t) ok = s.count(n + d * t) != 0;
      if (ok) out.push_back({n, d});
    }
  std::sort(out.begin(), out.end());
  return out;
}

// (x, y, alpha, beta) with b^x - b^y = 2^alpha 3^beta
inline std::vector<std::array<unsigned, 4>> lemma(std::uint64_t b, unsigned x_max, unsigned alpha_max,
                                                  unsigned beta_max) {
  std::vector<std::array<unsigned, 4>> out;
  apsum::Natural bx = 1;
  for (unsigned x = 0; x <= x_max; ++x, bx *= b) {
    apsum::Natural by = 1;
    for (unsigned y = 0; y < x; ++y, by *= b) {
      apsum::Natural d = bx - by;
      unsigned al = 0, be = 0;
      while (d % 2 == 0) d /= 2, ++al;
      while (d % 3 == 0) d /= 3, ++be;
      if (d == 1 && al <= alpha_max && be <= beta_max) out.push_back({x, y, al, be});
    }
  }
  return out;
}

inline std::uint64_t gcd64(std::uint64_t x, std::uint64_t y) {
  while (y) {
    auto t = x % y;
    x = y;
    y = t;
  }
  return x;
}

// x + y = z, x <= y, gcd(x, y) = 1, xyz smooth, z <= limit
inline std::vector<std::array<std::uint64_t, 3>> triples(const std::vector<std::uint64_t>& primes, std::uint64_t limit) {
  std::vector<std::array<std::uint64_t, 3>> out;
  const auto sm = smooth(primes, limit);
  std::set<std::uint64_t> in(sm.begin(), sm.end());
  for (auto z : sm)
    for (auto x : sm) {
      if (2 * x > z) break;
      const auto y = z - x;
      if (in.count(y) && gcd64(x, y) == 1) out.push_back({x, y, z});
    }
  return out;
}

// Five signed {2,3}-units summing to zero, primitive, no vanishing subsum,
// by exhaustive enumeration of 5-multisets over the signed unit list.
// Each solution is the sorted signed values: magnitude descending, first positive.
inline std::set<std::array<std::int64_t, 5>> five_term(unsigned alpha_max, unsigned beta_max, std::int64_t value_max) {
  std::vector<std::int64_t> sv;
  std::int64_t p3 = 1;
  for (unsigned b = 0; b <= beta_max; ++b, p3 *= 3) {
    std::int64_t v = p3;
    for (unsigned a = 0; a <= alpha_max; ++a, v *= 2)
      if (v <= value_max) {
        sv.push_back(v);
        sv.push_back(-v);
      }
  }
  std::sort(sv.begin(), sv.end());
  const std::size_t n = sv.size();
  std::set<std::array<std::int64_t, 5>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        for (std::size_t l = k; l < n; ++l)
          for (std::size_t m = l; m < n; ++m) {
            std::array<std::int64_t, 5> t{sv[i], sv[j], sv[k], sv[l], sv[m]};
            if (t[0] + t[1] + t[2] + t[3] + t[4] != 0) continue;
            bool vanishing = false;
            for (unsigned mask = 1; mask < 31 && !vanishing; ++mask) {
              std::int64_t s = 0;
              for (unsigned e = 0; e < 5; ++e)
                if (mask >> e & 1) s += t[e];
              vanishing = s == 0;
            }
            if (vanishing) continue;
            std::uint64_t g = 0;
            for (auto v : t) g = gcd64(g, static_cast<std::uint64_t>(v < 0 ? -v : v));
            if (g != 1) continue;
            std::sort(t.begin(), t.end(), [](auto l, auto r) {
              auto al = l < 0 ? -l : l, ar = r < 0 ? -r : r;
              return al != ar ? al > ar : l > r;
            });
            if (t[0] < 0)
              for (auto& v : t) v = -v;
            out.insert(t);
          }
  return out;
}

}  // namespace oracle
