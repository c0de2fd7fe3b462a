#include "apsum/apsearch.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace apsum;

namespace {
std::vector<std::pair<u128, u128>> nd(const ApSearchReport& r) {
  std::vector<std::pair<u128, u128>> out;
  for (const auto& p : r.progressions) out.push_back({*to_u128(p.start), *to_u128(p.step)});
  return out;
}
bool has(const ApSearchReport& r, u128 n, u128 d) {
  const auto v = nd(r);
  return std::find(v.begin(), v.end(), std::pair{n, d}) != v.end();
}
}  // namespace

TEST_CASE("find_progressions examples") {
  const auto r6 = find_progressions(SumsetParams(2, 3), 6, 1000000);
  CHECK(has(r6, 3, 2));
  CHECK(has(r6, 17, 24));
  CHECK(has(find_progressions(SumsetParams(2, 9), 6, 1000000), 17, 24));
  const auto r3 = find_progressions(SumsetParams(2, 3), 3, 4);
  REQUIRE(nd(r3) == std::vector<std::pair<u128, u128>>{{2, 1}});
  CHECK(r3.progressions[0].terms.size() == 3);
  CHECK_THROWS_AS(find_progressions(SumsetParams(2, 3), 2, 100), ContractError);
}

TEST_CASE("completeness against pairwise brute force") {
  CHECK(nd(find_progressions(SumsetParams(2, 3), 3, 10000)) == oracle::progressions(2, 3, 3, 10000));
  for (std::uint64_t a = 2; a <= 5; ++a)
    for (std::uint64_t b = a + 1; b <= 9; ++b)
      for (unsigned k : {3u, 4u, 5u})
        REQUIRE(nd(find_progressions(SumsetParams(a, b), k, 1000000)) == oracle::progressions(a, b, k, 1000000));
}

TEST_CASE("every reported term re-verifies and maximal flags are correct") {
  const SumsetParams s(2, 7);
  const auto r = find_progressions(s, 3, 100000000);
  REQUIRE(r.maximal.size() == r.progressions.size());
  for (std::size_t i = 0; i < r.progressions.size(); ++i) {
    const auto& p = r.progressions[i];
    REQUIRE(p.step >= 1);
    for (std::size_t t = 0; t < p.length(); ++t) {
      REQUIRE(p.terms[t].value == p.term(t));
      REQUIRE(contains(s, p.term(t)));
      for (const auto& rep : p.terms[t].reps) REQUIRE(pow(Natural(2), rep.x) + pow(Natural(7), rep.y) == p.term(t));
    }
    const bool back = p.start > p.step && contains(s, Natural(p.start - p.step));
    const bool fwd = contains(s, Natural(p.start + p.step * 3));
    REQUIRE(r.maximal[i] == (!back && !fwd));
  }
}

TEST_CASE("sub-progression closure and monotonicity") {
  const SumsetParams s(2, 3);
  const auto r5 = find_progressions(s, 5, 1000000);
  const auto r4 = nd(find_progressions(s, 4, 1000000));
  const std::set<std::pair<u128, u128>> four(r4.begin(), r4.end());
  for (const auto& [n, d] : nd(r5)) {
    CHECK(four.count({n, d}));
    CHECK(four.count({n + d, d}));
  }
  const auto small = nd(find_progressions(s, 3, 10000));
  const auto large = nd(find_progressions(s, 3, 1000000));
  const std::set<std::pair<u128, u128>> big(large.begin(), large.end());
  for (const auto& x : small) CHECK(big.count(x));
}

TEST_CASE("count_3term_stable") {
  const auto r = count_3term_stable(SumsetParams(2, 7), {u128{100000000}, u128{10000000000ULL}, u128{1000000000000ULL}});
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows.back().windows == 22);
  CHECK(r.rows.back().maximal == 12);
  CHECK(r.stabilized);

  const auto r9 = count_3term_stable(SumsetParams(2, 9), {u128{1000000}, u128{1000000000}});
  CHECK(r9.rows[1].windows > r9.rows[0].windows);
  CHECK_FALSE(r9.stabilized);

  const auto same = count_3term_stable(SumsetParams(4, 5), {u128{10}, u128{10}});
  CHECK(same.rows[0].windows == same.rows[1].windows);
  CHECK(same.stabilized);
  CHECK_THROWS_AS(count_3term_stable(SumsetParams(2, 3), {u128{100}, u128{10}}), ContractError);
}

TEST_CASE("extend examples") {
  const SumsetParams s(2, 3);
  auto five = make_progression(s, 3, 2, 5);
  REQUIRE(five);
  auto six = extend(s, *five, Direction::Forward);
  REQUIRE(six);
  CHECK(six->length() == 6);
  CHECK(six->term(5) == 13);
  CHECK_FALSE(extend(s, *six, Direction::Forward).has_value());
  auto p17 = make_progression(s, 17, 24, 6);
  REQUIRE(p17);
  CHECK_FALSE(extend(s, *p17, Direction::Forward).has_value());
  auto back = extend(s, *make_progression(s, 5, 2, 3), Direction::Backward);
  REQUIRE(back);
  CHECK(back->start == 3);
  CHECK_FALSE(make_progression(s, 3, 2, 7).has_value());
}

TEST_CASE("thread count does not change results") {
  const SumsetParams s(2, 3);
  const auto one = find_progressions(s, 3, 1000000000, 1);
  const auto four = find_progressions(s, 3, 1000000000, 4);
  CHECK(nd(one) == nd(four));
  CHECK(one.maximal == four.maximal);
}
