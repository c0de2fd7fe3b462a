#include "apsum/numutil.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace apsum;

TEST_CASE("power_exponent examples") {
  CHECK(power_exponent(u128{1}, u128{3}) == 0u);
  CHECK(power_exponent(u128{531441}, u128{3}) == 12u);
  CHECK_FALSE(power_exponent(u128{531442}, u128{3}).has_value());
  CHECK(power_exponent(Natural(531441), Natural(3)) == 12u);
  CHECK_THROWS_AS(power_exponent(u128{8}, u128{1}), ContractError);
  CHECK_THROWS_AS(power_exponent(Natural(0), Natural(2)), ContractError);
}

TEST_CASE("power_exponent round trip for bases 2..10, e <= 64") {
  for (unsigned base = 2; base <= 10; ++base) {
    for (unsigned e = 0; e <= 64; ++e) {
      const Natural n = pow(Natural(base), e);
      REQUIRE(power_exponent(n, Natural(base)) == e);
      if (auto w = to_u128(n)) REQUIRE(power_exponent(*w, u128{base}) == e);
      if (e > 0) REQUIRE_FALSE(power_exponent(Natural(n + 1), Natural(base)).has_value());
    }
  }
}

TEST_CASE("power_exponent on large powers of two and composite bases") {
  CHECK(power_exponent(pow(Natural(2), 4000), Natural(2)) == 4000u);
  CHECK_FALSE(power_exponent(pow(Natural(2), 4000) + 2, Natural(2)).has_value());
  CHECK(power_exponent(pow(Natural(78), 50), Natural(78)) == 50u);
  CHECK_FALSE(power_exponent(pow(Natural(78), 50), Natural(6)).has_value());
}

TEST_CASE("ord_p examples and property") {
  CHECK(ord_p(u128{48}, u128{2}) == 4u);
  CHECK(ord_p(u128{7}, u128{2}) == 0u);
  CHECK(ord_p(u128{531441}, u128{3}) == 12u);
  CHECK_THROWS_AS(ord_p(u128{0}, u128{2}), ContractError);
  for (std::uint64_t p : {2u, 3u, 5u, 13u})
    for (unsigned a = 0; a < 20; ++a)
      for (std::uint64_t m : {1u, 7u, 11u, 1001u}) {
        if (m % p == 0) continue;
        REQUIRE(ord_p(Natural(pow(Natural(p), a) * m), Natural(p)) == a);
      }
}

TEST_CASE("smooth_enumerate examples") {
  CHECK(smooth_enumerate(PrimeSet({2, 3}), 10) == std::vector<u128>{1, 2, 3, 4, 6, 8, 9});
  CHECK(smooth_enumerate(PrimeSet({2}), 1) == std::vector<u128>{1});
  CHECK(smooth_enumerate(PrimeSet({2, 3, 5, 7, 11, 13}), 100).size() == 62);
}

TEST_CASE("smooth_enumerate matches trial division") {
  const std::vector<std::vector<std::uint64_t>> sets{{2}, {2, 3}, {3, 5, 7}, {2, 3, 5, 7, 11, 13}};
  for (const auto& ps : sets) {
    const auto got = smooth_enumerate(PrimeSet(ps), 20000);
    const auto want = oracle::smooth(ps, 20000);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i] == want[i]);
  }
}

TEST_CASE("smooth_enumerate is monotone in limit and prime set") {
  std::size_t prev = 0;
  for (u128 lim : {u128{10}, u128{1000}, u128{100000}, u128{10000000}}) {
    const auto n = smooth_enumerate(PrimeSet({2, 3, 5}), lim).size();
    CHECK(n >= prev);
    prev = n;
    CHECK(smooth_enumerate(PrimeSet({2, 3, 5, 7}), lim).size() >= n);
  }
}

TEST_CASE("PrimeSet rejects composites and normalizes order") {
  CHECK_THROWS_AS(PrimeSet({2, 4}), ContractError);
  CHECK_THROWS_AS(PrimeSet({1}), ContractError);
  CHECK(PrimeSet({5, 2, 3, 2}).primes() == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("parse shorthands") {
  CHECK(parse_u128("1e12") == u128{1000000000000ULL});
  CHECK(parse_u128("10^8") == u128{100000000});
  CHECK(parse_u128("12345") == u128{12345});
  CHECK_THROWS_AS(parse_u128("12x"), ContractError);
  CHECK_THROWS_AS(parse_u128("1e40"), ContractError);
  CHECK(parse_natural("2^200") == pow(Natural(2), 200));
}

TEST_CASE("roots and primality") {
  CHECK(integer_root(u128{1000000}, 3) == 100);
  CHECK(integer_root(u128{999999}, 3) == 99);
  CHECK(exact_root(u128{529}, 2) == u128{23});
  CHECK_FALSE(exact_root(u128{530}, 2).has_value());
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));
}
