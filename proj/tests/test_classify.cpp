#include "apsum/classify.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace apsum;

namespace {
ApTuple tup(unsigned a, unsigned b, unsigned n, unsigned d) { return {Natural(a), Natural(b), Natural(n), Natural(d)}; }

std::vector<ApTuple> hit_tuples(const SweepReport& r) {
  std::vector<ApTuple> out;
  for (const auto& h : r.hits) out.push_back({Natural(h.a), Natural(h.b), h.prog.start, h.prog.step});
  return out;
}
}  // namespace

TEST_CASE("family formulas") {
  CHECK(family1(1).tuple == tup(2, 3, 3, 2));
  CHECK(family1(3).tuple == tup(2, 9, 9, 8));
  CHECK(family2(1).tuple == tup(3, 5, 2, 2));
  CHECK(family2(2).tuple == tup(3, 13, 4, 6));
  CHECK(family2(3).tuple == tup(3, 37, 10, 18));
  CHECK_THROWS_AS(family1(0), ContractError);
}

TEST_CASE("theorem1_match examples") {
  auto m = theorem1_match(2, 3, 3, 2);
  REQUIRE(m);
  CHECK(m->kind == ClassKind::Family1);
  CHECK(m->k == 1u);
  m = theorem1_match(2, 9, 41, 24);
  REQUIRE(m);
  CHECK(m->kind == ClassKind::Sporadic);
  CHECK_FALSE(theorem1_match(2, 3, 100, 1).has_value());
  CHECK_THROWS_AS(theorem1_match(3, 2, 3, 2), ContractError);
  CHECK_THROWS_AS(theorem1_match(2, 3, 1, 2), ContractError);
  CHECK_THROWS_AS(theorem1_match(2, 3, 3, 0), ContractError);
}

TEST_CASE("theorem1_match recovers k for both families, k <= 64") {
  for (unsigned k = 1; k <= 64; ++k) {
    for (const auto& e : {family1(k), family2(k)}) {
      auto m = theorem1_match(e.tuple[0], e.tuple[1], e.tuple[2], e.tuple[3]);
      REQUIRE(m);
      REQUIRE(m->kind == e.kind);
      REQUIRE(m->k == k);
    }
  }
}

TEST_CASE("every sporadic tuple is a genuine 5-term progression") {
  const auto& sp = sporadic_entries();
  REQUIRE(sp.size() == 9);
  for (const auto& e : sp) {
    const SumsetParams s(e.tuple[0], e.tuple[1]);
    for (int i = 0; i < 5; ++i) REQUIRE(contains(s, Natural(e.tuple[2] + e.tuple[3] * i)));
  }
}

TEST_CASE("five-term sweep over b <= 10") {
  const SweepConfig cfg{10, 10, 1000000000, 5};
  const auto r = verify_theorem1(cfg);
  CHECK(r.ok);
  CHECK(r.unclassified.empty());
  CHECK(r.missing.empty());
  std::size_t sporadic = 0;
  for (const auto& e : r.witnessed) sporadic += e.kind == ClassKind::Sporadic;
  CHECK(sporadic == 9);
}

TEST_CASE("Family2 k=2 witnessed once b_max >= 13") {
  const auto r = verify_theorem1({13, 13, 1000000, 5});
  CHECK(r.ok);
  CHECK(std::find(r.witnessed.begin(), r.witnessed.end(), family2(2)) != r.witnessed.end());
}

TEST_CASE("corollary sweeps") {
  auto r6 = verify_corollary({10, 10, 1000000, 6});
  CHECK(r6.ok);
  CHECK(hit_tuples(r6) == std::vector<ApTuple>{tup(2, 3, 3, 2), tup(2, 3, 17, 24), tup(2, 9, 17, 24)});
  auto r7 = verify_corollary({10, 10, 1000000, 7});
  CHECK(r7.ok);
  CHECK(r7.hits.empty());
  auto tiny = verify_corollary({5, 5, 100, 6});
  CHECK(tiny.ok);
  CHECK(hit_tuples(tiny) == std::vector<ApTuple>{tup(2, 3, 3, 2)});
}

TEST_CASE("sweep hits agree with the pairwise oracle") {
  const SweepConfig cfg{6, 8, 1000000, 4};
  const auto hits = sweep_grid(cfg, 2);
  std::vector<ApTuple> want;
  for (const auto& [a, b] : sweep_pairs(cfg))
    for (const auto& [n, d] : oracle::progressions(a, b, 4, 1000000))
      want.push_back({Natural(a), Natural(b), Natural(n), Natural(d)});
  std::vector<ApTuple> got;
  for (const auto& h : hits) got.push_back({Natural(h.a), Natural(h.b), h.prog.start, h.prog.step});
  CHECK(got == want);
}

TEST_CASE("sweep config validation and grid") {
  CHECK_THROWS_AS(SweepConfig({1, 5, 100, 5}).validate(), ContractError);
  CHECK_THROWS_AS(SweepConfig({2, 5, 1, 5}).validate(), ContractError);
  CHECK_THROWS_AS(SweepConfig({2, 5, 100, 2}).validate(), ContractError);
  const auto pairs = sweep_pairs({3, 4, 100, 5});
  CHECK(pairs == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("family_nonextension") {
  const auto r = family_nonextension(64);
  CHECK(r.ok);
  for (const auto& row : r.rows) {
    CHECK(row.five_terms_ok);
    const bool first = row.kind == ClassKind::Family1 && row.k == 1;
    CHECK(row.extends == first);
    if (first) CHECK(row.next == 13);
    if (row.kind == ClassKind::Family1 && row.k == 2) CHECK(row.next == 25);
    if (row.kind == ClassKind::Family2 && row.k == 1) CHECK(row.next == 12);
  }
  CHECK_THROWS_AS(family_nonextension(0), ContractError);
}
