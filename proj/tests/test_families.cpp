#include "apsum/families.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace apsum;

namespace {
FamilySpec spec(FamilyId id, FamilyParams p) { return {id, std::move(p)}; }

std::vector<Natural> values(const Progression& p) {
  std::vector<Natural> out;
  for (const auto& t : p.terms) out.push_back(t.value);
  return out;
}
}  // namespace

TEST_CASE("family ids round trip") {
  for (auto id : all_families()) CHECK(parse_family_id(to_string(id)) == id);
  CHECK(all_families().size() == 12);
  CHECK_FALSE(parse_family_id("prog8").has_value());
}

TEST_CASE("prog1 n=5") {
  const auto g = generate(spec(FamilyId::Prog1, {{"n", 5}}));
  CHECK(g.params.a() == 5);
  CHECK(g.params.b() == 9);
  CHECK(values(g.prog) == std::vector<Natural>{2, 6, 10, 14});
  CHECK(g.prog.terms[3].reps == std::vector<Representation>{{1, 1}});
  CHECK(verify(g.prog, g.params));
}

TEST_CASE("three-term-A k=3 j=0") {
  const auto g = generate(spec(FamilyId::ThreeTermA, {{"k", 3}, {"j", 0}}));
  CHECK(g.params.a() == 2);
  CHECK(g.params.b() == 9);
  CHECK(values(g.prog) == std::vector<Natural>{9, 10, 11});
  CHECK(verify(g.prog, g.params));
}

TEST_CASE("four-term-powers2-A d=1 c=3 k=4 j=1 m=1") {
  const auto g = generate(spec(FamilyId::FourTermPowers2A, {{"d", 1}, {"c", 3}, {"k", 4}, {"j", 1}, {"m", 1}}));
  CHECK(g.params.a() == 2);
  CHECK(g.params.b() == 8);
  const auto v = values(g.prog);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 24);
  CHECK(v[1] - v[0] == v[2] - v[1]);
  CHECK(v[2] - v[1] == v[3] - v[2]);
  CHECK(verify(g.prog, g.params));
  CHECK_THROWS_AS(generate(spec(FamilyId::FourTermPowers2A, {{"d", 1}, {"c", 3}, {"k", 1}, {"j", 0}, {"m", 1}})),
                  ContractError);
}

TEST_CASE("prog6 t=1 follows the stated tuple") {
  const auto g = generate(spec(FamilyId::Prog6, {{"t", 1}}));
  CHECK(g.params.a() == 3);
  CHECK(g.params.b() == 4);
  CHECK(values(g.prog) == std::vector<Natural>{13, 19, 25, 31});
  CHECK(verify(g.prog, g.params));
}

TEST_CASE("the (22,78) example") {
  const auto g = example_22_78();
  CHECK(values(g.prog) == std::vector<Natural>{6106, 240340, 474574, 708808});
  CHECK(g.prog.step == 234234);
  CHECK(verify(g.prog, g.params));
}

TEST_CASE("verify rejects broken progressions") {
  auto g = generate(spec(FamilyId::Prog1, {{"n", 5}}));
  auto bad = g.prog;
  bad.terms[2].value = 11;
  CHECK_FALSE(verify(bad, g.params));
  bad = g.prog;
  bad.terms[1].reps = {{0, 1}};  // 1 + 9 != 6
  CHECK_FALSE(verify(bad, g.params));
  // AP with a non-member term: 2, 4, 6, 8 in S_{5,9}
  bad = g.prog;
  for (std::size_t i = 0; i < 4; ++i) {
    bad.terms[i].value = 2 + 2 * i;
    bad.terms[i].reps.clear();
  }
  bad.step = 2;
  CHECK_FALSE(verify(bad, g.params));
}

TEST_CASE("constraint violations name the constraint") {
  CHECK_THROWS_AS(generate(spec(FamilyId::Prog7, {{"s", 2}, {"t", 3}})), ContractError);
  CHECK_THROWS_AS(generate(spec(FamilyId::Prog1, {{"n", 1}})), ContractError);
  CHECK_THROWS_AS(generate(spec(FamilyId::ThreeTermB, {{"k", 3}, {"j", 3}})), ContractError);
  CHECK_THROWS_AS(generate(spec(FamilyId::Prog3, {{"a", 5}, {"b", 8}, {"delta1", 0}, {"delta2", 0}})), ContractError);
  CHECK_THROWS_AS(generate(spec(FamilyId::Prog1, {{"m", 5}})), ContractError);
  try {
    generate(spec(FamilyId::Prog7, {{"s", 2}, {"t", 3}}));
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("s") != std::string::npos);
  }
}

TEST_CASE("prog3 pairs") {
  const auto pairs = find_prog3_pairs(100);
  CHECK(std::find(pairs.begin(), pairs.end(), Prog3Pair{5, 7, 0, 0}) != pairs.end());
  for (const auto& p : pairs) {
    CHECK(p.b > p.a);
    const Natural lhs = Natural(p.b) * p.b - pow(Natural(p.b), p.delta2);
    const Natural rhs = 2 * Natural(p.a) * p.a - 2 * pow(Natural(p.a), p.delta1);
    CHECK(lhs == rhs);
    const auto g = generate(spec(FamilyId::Prog3, {{"a", std::int64_t(p.a)},
                                                    {"b", std::int64_t(p.b)},
                                                    {"delta1", p.delta1},
                                                    {"delta2", p.delta2}}));
    CHECK(verify(g.prog, g.params));
  }
}

TEST_CASE("round trip over parameter grids <= 20") {
  for (auto id : all_families()) {
    if (id == FamilyId::ThreeTermMultDep) continue;  // covered below at a smaller grid
    const auto r = round_trip(id, 20, 2);
    INFO(to_string(id));
    CHECK(r.generated > 0);
    CHECK(r.failures.empty());
    CHECK(r.verified == r.generated);
    CHECK(r.skipped == 0);
  }
  const auto m = round_trip(FamilyId::ThreeTermMultDep, 6, 2);
  CHECK(m.failures.empty());
  CHECK(m.verified == m.generated);
}

TEST_CASE("unbounded families keep growing") {
  for (auto id : {FamilyId::ThreeTermA, FamilyId::ThreeTermB, FamilyId::ThreeTermMultDep, FamilyId::FourTermPowers2A,
                  FamilyId::FourTermPowers2B}) {
    INFO(to_string(id));
    const auto c6 = count_instances(id, u128{1000000});
    const auto c9 = count_instances(id, u128{1000000000});
    const auto c12 = count_instances(id, u128{1000000000000ULL});
    CHECK(c6 < c9);
    CHECK(c9 < c12);
  }
}

TEST_CASE("prog2 parameters stay integral") {
  for (std::int64_t k = 1; k <= 10; ++k)
    for (std::int64_t t = 2; t <= 10; ++t) {
      const auto g = generate(spec(FamilyId::Prog2, {{"k", k}, {"t", t}}));
      CHECK(g.params.a() == 2 * k + 1);
      CHECK(verify(g.prog, g.params));
    }
}
