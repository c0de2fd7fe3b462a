#include "apsum/sumset.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace apsum;

namespace {
std::vector<std::pair<unsigned, unsigned>> as_pairs(const std::vector<Representation>& reps) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& r : reps) out.push_back({r.x, r.y});
  return out;
}
}  // namespace

TEST_CASE("SumsetParams enforces b > a > 1") {
  CHECK_THROWS_AS(SumsetParams(3, 3), ContractError);
  CHECK_THROWS_AS(SumsetParams(1, 3), ContractError);
  CHECK_THROWS_AS(SumsetParams(5, 3), ContractError);
  CHECK_NOTHROW(SumsetParams(2, 3));
}

TEST_CASE("representations examples") {
  const SumsetParams s(2, 3);
  CHECK(as_pairs(representations(s, u128{17})) == std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {4, 0}});
  CHECK(as_pairs(representations(s, u128{2})) == std::vector<std::pair<unsigned, unsigned>>{{0, 0}});
  CHECK(representations(s, u128{6}).empty());
  CHECK(as_pairs(representations(s, Natural(17))) == as_pairs(representations(s, u128{17})));
}

TEST_CASE("contains examples") {
  CHECK(contains(SumsetParams(2, 3), u128{137}));
  CHECK_FALSE(contains(SumsetParams(2, 3), u128{1}));
  CHECK_FALSE(contains(SumsetParams(2, 3), u128{0}));
  CHECK(contains(SumsetParams(22, 78), u128{6106}));
}

TEST_CASE("enumerate examples") {
  auto values = [](const std::vector<SumsetElement>& es) {
    std::vector<Natural> v;
    for (const auto& e : es) v.push_back(e.value);
    return v;
  };
  CHECK(values(enumerate(SumsetParams(2, 3), 10)) == std::vector<Natural>{2, 3, 4, 5, 7, 9, 10});
  CHECK(values(enumerate(SumsetParams(2, 3), 2)) == std::vector<Natural>{2});
  // 2^x + 7^y <= 100: seven sums with 7^0, seven with 7^1, six with 7^2, less the
  // repeats 9 = 8+1 = 2+7 and 65 = 64+1 = 16+49
  CHECK(enumerate(SumsetParams(2, 7), 100).size() == 18);
  CHECK(enumerate(SumsetParams(2, 7), 100).size() == oracle::sumset(2, 7, 100).size());
}

TEST_CASE("representations agree with the double loop for n <= 10^6, b <= 12") {
  for (std::uint64_t a = 2; a <= 11; ++a)
    for (std::uint64_t b = a + 1; b <= 12; ++b) {
      const SumsetParams s(a, b);
      const auto naive = oracle::sumset(a, b, 1000000);
      const SumsetTable table(s, 1000000);
      REQUIRE(table.values().size() == naive.size());
      std::size_t i = 0;
      for (const auto& [v, reps] : naive) {
        REQUIRE(table.values()[i] == v);
        REQUIRE(as_pairs(table.reps(i)) == reps);
        ++i;
      }
      // every n, members and non-members, through the direct path
      if (a <= 3 && b <= 5)
        for (u128 n = 2; n <= 1000000; n += 1) {
          auto it = naive.find(n);
          const auto got = as_pairs(representations(s, n));
          if (it == naive.end())
            REQUIRE(got.empty());
          else
            REQUIRE(got == it->second);
        }
    }
}

TEST_CASE("enumerate size bound") {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t b = a + 1; b <= 9; ++b) {
      const Natural limit = pow(Natural(10), 12);
      const auto n = enumerate(SumsetParams(a, b), limit).size();
      unsigned la = 0, lb = 0;
      for (Natural v = a; v <= limit; v *= a) ++la;
      for (Natural v = b; v <= limit; v *= b) ++lb;
      CHECK(n <= std::size_t(la + 1) * (lb + 1));
    }
}

TEST_CASE("random a^x + b^y up to 10^12 are members") {
  std::mt19937_64 rng(20240601);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> bases{{2, 3}, {2, 7}, {3, 5}, {5, 12}, {22, 78}};
  int samples = 0;
  while (samples < 1000) {
    const auto [a, b] = bases[rng() % bases.size()];
    const unsigned x = rng() % 41, y = rng() % 41;
    const Natural v = pow(Natural(a), x) + pow(Natural(b), y);
    if (v > pow(Natural(10), 12)) continue;
    ++samples;
    const auto reps = representations(SumsetParams(a, b), v);
    REQUIRE(std::find(reps.begin(), reps.end(), Representation{x, y}) != reps.end());
  }
}

TEST_CASE("big-integer membership") {
  const SumsetParams s(2, 3);
  const Natural v = pow(Natural(2), 300) + pow(Natural(3), 200);
  CHECK(as_pairs(representations(s, v)) == std::vector<std::pair<unsigned, unsigned>>{{300, 200}});
  CHECK(representations(s, v + 2).empty());
  const SumsetParams big(Natural(pow(Natural(10), 30)), Natural(pow(Natural(10), 30) + 1));
  CHECK(contains(big, Natural(pow(Natural(10), 60) + 1)));
  CHECK_FALSE(big.word_sized());
}
