#include "apsum/sunit.hpp"

#include "apsum/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace apsum {

PrimeSet deweger_primes() { return PrimeSet({2, 3, 5, 7, 11, 13}); }

namespace {

template <class W>
std::vector<TripleSolution> triples_in(const PrimeSet& primes, u128 z_limit, unsigned threads) {
  const auto smooth128 = smooth_enumerate(primes, z_limit);
  std::vector<W> smooth(smooth128.begin(), smooth128.end());
  std::vector<std::uint32_t> support(smooth.size());
  for (std::size_t i = 0; i < smooth.size(); ++i) support[i] = primes.support(smooth[i]);
  std::unordered_set<W, U128Hash> lookup(smooth.begin(), smooth.end());

  std::vector<std::vector<TripleSolution>> per_z(smooth.size());
  parallel_for(smooth.size(), threads, [&](std::size_t k) {
    const W z = smooth[k];
    const std::uint32_t zmask = support[k];
    for (std::size_t i = 0; i < smooth.size() && 2 * smooth[i] <= z; ++i) {
      // gcd(x, z) = 1 forces gcd(x, y) = gcd(y, z) = 1.
      if ((support[i] & zmask) != 0) continue;
      const W y = z - smooth[i];
      if (lookup.count(y) != 0) per_z[k].push_back({smooth[i], y, z});
    }
  });
  std::vector<TripleSolution> out;
  for (auto& v : per_z) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

std::vector<TripleSolution> deweger_3term(const PrimeSet& primes, u128 z_limit, unsigned threads) {
  if (z_limit < 2) throw ContractError("deweger_3term: z_limit must be >= 2");
  if (z_limit <= (u128{1} << 63)) return triples_in<std::uint64_t>(primes, z_limit, threads);
  return triples_in<u128>(primes, z_limit, threads);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<i128> powers_up_to(std::uint64_t base, std::uint64_t bound) {
  std::vector<i128> out;
  for (i128 v = 1; v <= static_cast<i128>(bound); v *= base) out.push_back(v);
  return out;
}

FourTermSolution two_pairs(const std::array<unsigned, 4>& e, const std::array<int, 4>& s, std::uint64_t p,
                           std::uint64_t q) {
  FourTermSolution out{FourTermShape::TwoPairs, e, s, {}};
  const std::uint64_t base[4] = {p, q, p, q};
  for (std::size_t i = 0; i < 4; ++i) {
    i128 v = 1;
    for (unsigned k = 0; k < e[i]; ++k) v *= base[i];
    out.values[i] = s[i] * v;
  }
  return out;
}

}  // namespace

FourTermSolution canonical_four_term(const FourTermSolution& s) {
  if (s.shape != FourTermShape::TwoPairs) return s;
  std::optional<FourTermSolution> best;
  for (int swap_p = 0; swap_p < 2; ++swap_p) {
    for (int swap_q = 0; swap_q < 2; ++swap_q) {
      auto e = s.exponents;
      auto g = s.signs;
      if (swap_p) {
        std::swap(e[0], e[2]);
        std::swap(g[0], g[2]);
      }
      if (swap_q) {
        std::swap(e[1], e[3]);
        std::swap(g[1], g[3]);
      }
      if (g[0] < 0) {
        for (auto& x : g) x = -x;
      }
      FourTermSolution cand{FourTermShape::TwoPairs, e, g, {}};
      std::array<i128, 4> mags{};
      for (std::size_t i = 0; i < 4; ++i) mags[i] = s.values[i] < 0 ? -s.values[i] : s.values[i];
      if (swap_p) std::swap(mags[0], mags[2]);
      if (swap_q) std::swap(mags[1], mags[3]);
      for (std::size_t i = 0; i < 4; ++i) cand.values[i] = g[i] * mags[i];
      if (!best || std::tie(cand.exponents, cand.signs) < std::tie(best->exponents, best->signs)) best = cand;
    }
  }
  return *best;
}

std::vector<FourTermSolution> deze_tijdeman_4term(std::uint64_t p, std::uint64_t q) {
  if (p == q || !is_prime(p) || !is_prime(q)) throw ContractError("deze_tijdeman_4term: need distinct primes");
  if (std::max(p, q) >= 200) throw ContractError("deze_tijdeman_4term: requires max(p, q) < 200");
  const auto pp = powers_up_to(p, kFourTermPowerBound);
  const auto qq = powers_up_to(q, kFourTermPowerBound);
  std::set<FourTermSolution> found;
  const int sign_choices[2] = {1, -1};

  for (unsigned x = 0; x < pp.size(); ++x)
    for (unsigned y = 0; y < qq.size(); ++y)
      for (unsigned z = 0; z < pp.size(); ++z)
        for (unsigned w = 0; w < qq.size(); ++w)
          for (int s1 : sign_choices)
            for (int s2 : sign_choices)
              for (int s3 : sign_choices) {
                // Shape 1: p^x q^y + s1 p^z + s2 q^w + s3 = 0.
                std::array<i128, 4> v1{pp[x] * qq[y], s1 * pp[z], s2 * qq[w], i128{s3}};
                if (v1[0] + v1[1] + v1[2] + v1[3] == 0 && !has_vanishing_subsum(v1)) {
                  found.insert({FourTermShape::MixedUnit, {x, y, z, w}, {1, s1, s2, s3}, v1});
                }
                // Shape 2: p^x + s1 q^y + s2 p^z + s3 q^w = 0.
                std::array<i128, 4> v2{pp[x], s1 * qq[y], s2 * pp[z], s3 * qq[w]};
                if (v2[0] + v2[1] + v2[2] + v2[3] == 0 && !has_vanishing_subsum(v2)) {
                  found.insert(canonical_four_term(two_pairs({x, y, z, w}, {1, s1, s2, s3}, p, q)));
                }
              }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------

FiveTermSolution canonical_five_term(std::array<SUnitTerm, 5> terms) {
  auto order = [](const SUnitTerm& l, const SUnitTerm& r) {
    if (l.magnitude != r.magnitude) return l.magnitude > r.magnitude;
    return l.sign > r.sign;
  };
  std::sort(terms.begin(), terms.end(), order);
  if (terms[0].sign < 0) {
    for (auto& t : terms) t.sign = -t.sign;
    std::sort(terms.begin(), terms.end(), order);
  }
  return FiveTermSolution{terms};
}

namespace {

struct Unit {
  std::uint64_t magnitude;
  unsigned alpha;
  unsigned beta;
};

std::vector<Unit> unit_values(const FiveTermBounds& bounds) {
  std::vector<Unit> out;
  std::uint64_t p3 = 1;
  for (unsigned b = 0; b <= bounds.beta_max && p3 <= bounds.value_max; ++b, p3 *= 3) {
    std::uint64_t v = p3;
    for (unsigned a = 0; a <= bounds.alpha_max && v <= bounds.value_max; ++a, v *= 2) out.push_back({v, a, b});
  }
  std::sort(out.begin(), out.end(), [](const Unit& l, const Unit& r) { return l.magnitude < r.magnitude; });
  return out;
}

struct Triple {
  std::int64_t sum;
  std::uint32_t i, j, k;  // indices into the signed unit list
  bool operator<(const Triple& o) const { return sum < o.sum; }
};

}  // namespace

std::vector<FiveTermSolution> bajpai_bennett_5term(const FiveTermBounds& bounds, unsigned threads) {
  const auto units = unit_values(bounds);
  // Signed list: index 2u is +unit u, 2u+1 is -unit u.
  std::vector<std::int64_t> signed_values;
  for (const auto& u : units) {
    signed_values.push_back(static_cast<std::int64_t>(u.magnitude));
    signed_values.push_back(-static_cast<std::int64_t>(u.magnitude));
  }
  const auto n = static_cast<std::uint32_t>(signed_values.size());
  auto opposite = [](std::uint32_t i, std::uint32_t j) { return (i ^ 1u) == j; };

  // All multisets of 3 signed units with no vanishing subsum.
  std::vector<Triple> triples;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      if (opposite(i, j)) continue;
      for (std::uint32_t k = j; k < n; ++k) {
        if (opposite(i, k) || opposite(j, k)) continue;
        const std::int64_t s = signed_values[i] + signed_values[j] + signed_values[k];
        if (s == 0) continue;
        triples.push_back({s, i, j, k});
      }
    }
  std::sort(triples.begin(), triples.end());

  auto make_term = [&](std::uint32_t idx) {
    const auto& u = units[idx / 2];
    return SUnitTerm{(idx & 1u) ? -1 : 1, u.alpha, u.beta, u.magnitude};
  };

  std::vector<std::set<FiveTermSolution>> parts(n);
  parallel_for(n, threads, [&](std::size_t first) {
    const auto i = static_cast<std::uint32_t>(first);
    for (std::uint32_t j = i; j < n; ++j) {
      if (opposite(i, j)) continue;
      const std::int64_t need = -(signed_values[i] + signed_values[j]);
      auto [lo, hi] = std::equal_range(triples.begin(), triples.end(), Triple{need, 0, 0, 0});
      for (auto it = lo; it != hi; ++it) {
        std::array<std::uint32_t, 5> idx{i, j, it->i, it->j, it->k};
        std::array<i128, 5> vals{};
        std::uint64_t g = 0;
        for (std::size_t t = 0; t < 5; ++t) {
          vals[t] = signed_values[idx[t]];
          g = std::gcd(g, units[idx[t] / 2].magnitude);
        }
        if (g != 1 || has_vanishing_subsum(vals)) continue;
        std::array<SUnitTerm, 5> terms{};
        for (std::size_t t = 0; t < 5; ++t) terms[t] = make_term(idx[t]);
        parts[first].insert(canonical_five_term(terms));
      }
    }
  });
  std::set<FiveTermSolution> merged;
  for (auto& part : parts) merged.insert(part.begin(), part.end());
  return {merged.begin(), merged.end()};
}

}  // namespace apsum
