#include "apsum/families.hpp"

#include "apsum/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace apsum {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {FamilyId::ThreeTermA, "three-term-A", {"k", "j"}},
      {FamilyId::ThreeTermB, "three-term-B", {"k", "j"}},
      {FamilyId::ThreeTermMultDep, "three-term-multdep", {"r", "c", "d", "k", "j"}},
      {FamilyId::FourTermPowers2A, "four-term-powers2-A", {"d", "c", "k", "j", "m"}},
      {FamilyId::FourTermPowers2B, "four-term-powers2-B", {"d", "c", "k", "j", "m"}},
      {FamilyId::Prog1, "prog1", {"n"}},
      {FamilyId::Prog2, "prog2", {"k", "t"}},
      {FamilyId::Prog3, "prog3", {"a", "b", "delta1", "delta2"}},
      {FamilyId::Prog4, "prog4", {"t"}},
      {FamilyId::Prog5, "prog5", {"t"}},
      {FamilyId::Prog6, "prog6", {"t"}},
      {FamilyId::Prog7, "prog7", {"s", "t"}},
  };
  return table;
}

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : family_table()) {
    if (f.id == id) return f;
  }
  throw ContractError("unknown family");
}

[[noreturn]] void reject(FamilyId id, const std::string& what) {
  throw ContractError(std::string(to_string(id)) + ": constraint violated: " + what);
}

Natural P(std::uint64_t base, std::int64_t e) { return pow(Natural(base), static_cast<unsigned>(e)); }
Natural P(const Natural& base, std::int64_t e) { return pow(base, static_cast<unsigned>(e)); }

// Exponents are capped so that closed forms stay desk-sized.
constexpr std::int64_t kMaxParam = 4096;

}  // namespace

std::string_view to_string(FamilyId id) { return info(id).name; }

std::optional<FamilyId> parse_family_id(std::string_view text) {
  for (const auto& f : family_table()) {
    if (f.name == text) return f.id;
  }
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> out;
    for (const auto& f : family_table()) out.push_back(f.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& family_parameters(FamilyId id) { return info(id).params; }

void FamilySpec::validate() const {
  const auto& names = family_parameters(id);
  for (const auto& [k, v] : params) {
    if (std::find(names.begin(), names.end(), k) == names.end()) reject(id, "unknown parameter '" + k + "'");
    if (v < 0 || v > kMaxParam) reject(id, k + " must lie in [0, " + std::to_string(kMaxParam) + "]");
  }
  for (const auto& n : names) {
    if (!params.contains(n)) reject(id, "missing parameter '" + n + "'");
  }
  const auto p = [&](const char* n) { return params.find(n)->second; };
  switch (id) {
    case FamilyId::ThreeTermA:
      if (p("k") < 1) reject(id, "k >= 1");
      break;
    case FamilyId::ThreeTermB:
      if (p("k") < 1) reject(id, "k >= 1");
      if (p("j") < p("k") + 1) reject(id, "j >= k + 1");
      break;
    case FamilyId::ThreeTermMultDep:
      if (p("r") < 2) reject(id, "r >= 2");
      if (p("d") < 1 || p("c") <= p("d")) reject(id, "1 <= d < c");
      if (p("j") < 1) reject(id, "j >= 1");
      break;
    case FamilyId::FourTermPowers2A:
    case FamilyId::FourTermPowers2B: {
      if (p("d") < 1 || p("c") <= p("d")) reject(id, "1 <= d < c");
      if (std::gcd(p("d"), p("c")) != 1) reject(id, "gcd(c, d) = 1");
      if (p("k") < 1 || p("j") < 1) reject(id, "k, j >= 1");
      const std::int64_t want = id == FamilyId::FourTermPowers2A ? 1 : -1;
      if (p("d") * p("k") - p("c") * p("j") != want) {
        reject(id, want == 1 ? "dk - cj = 1" : "dk - cj = -1");
      }
      if (p("m") < 1) reject(id, "m >= 1");
      break;
    }
    case FamilyId::Prog1:
      if (p("n") < 2) reject(id, "n >= 2");
      break;
    case FamilyId::Prog2:
      if (p("k") < 1) reject(id, "k >= 1");
      if (p("t") < 2) reject(id, "t >= 2");
      break;
    case FamilyId::Prog3: {
      if (p("delta1") > 1 || p("delta2") > 1) reject(id, "delta1, delta2 in {0, 1}");
      if (p("a") < 2 || p("b") <= p("a")) reject(id, "b > a > 1");
      const Natural a(p("a")), b(p("b"));
      if (b * b - P(b, p("delta2")) != 2 * a * a - 2 * P(a, p("delta1"))) {
        reject(id, "b^2 - b^delta2 = 2a^2 - 2a^delta1");
      }
      break;
    }
    case FamilyId::Prog4:
    case FamilyId::Prog5:
    case FamilyId::Prog6:
      if (p("t") < 1) reject(id, "t >= 1");
      break;
    case FamilyId::Prog7:
      if (p("s") < 1 || p("s") > p("t") - 2) reject(id, "1 <= s <= t - 2");
      break;
  }
}

FamilyProgression generate(const FamilySpec& spec) {
  spec.validate();
  const auto p = [&](const char* n) { return spec.params.find(n)->second; };
  const auto u = [&](const char* n) { return static_cast<unsigned>(p(n)); };
  Natural a, b, N, D;
  std::vector<Representation> reps;  // in progression order
  switch (spec.id) {
    case FamilyId::ThreeTermA: {
      const unsigned k = u("k"), j = u("j");
      a = 2;
      b = P(2, k) + 1;
      N = b;
      D = P(2, j);
      reps = {{k, 0}, {j, 1}, {j + 1, 1}};
      break;
    }
    case FamilyId::ThreeTermB: {
      const unsigned k = u("k"), j = u("j");
      a = 2;
      b = P(2, k) + 1;
      N = P(2, k + 1) + 1;
      D = P(2, j) - P(2, k);
      reps = {{k + 1, 0}, {j, 1}, {j + 1, 0}};
      break;
    }
    case FamilyId::ThreeTermMultDep: {
      const unsigned c = u("c"), d = u("d"), k = u("k"), j = u("j");
      a = P(p("r"), d);
      b = P(p("r"), c);
      N = P(a, k * c) + P(b, k * d);
      D = P(a, (k + j) * c) - P(a, k * c);
      reps = {{k * c, k * d}, {(k + j) * c, k * d}, {(k + j) * c, (k + j) * d}};
      break;
    }
    case FamilyId::FourTermPowers2A:
    case FamilyId::FourTermPowers2B: {
      const unsigned d = u("d"), c = u("c"), k = u("k"), j = u("j"), m = u("m");
      a = P(2, d);
      b = P(2, c);
      N = P(2, k * d) + P(2, j * c);
      if (spec.id == FamilyId::FourTermPowers2A) {
        D = P(2, j * c + m * c * d) - P(2, j * c);
        reps = {{k, j}, {k, j + m * d}, {k + m * c, j}, {k + m * c, j + m * d}};
      } else {
        D = P(2, k * d + m * c * d) - P(2, k * d);
        reps = {{k, j}, {k + m * c, j}, {k, j + m * d}, {k + m * c, j + m * d}};
      }
      break;
    }
    case FamilyId::Prog1:
      a = p("n");
      b = 2 * p("n") - 1;
      N = 2;
      D = p("n") - 1;
      reps = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
      break;
    case FamilyId::Prog2: {
      const unsigned t = u("t");
      a = 2 * p("k") + 1;
      b = (P(a, t) + 1) / 2;
      N = 2;
      D = (P(a, t) - 1) / 2;
      reps = {{0, 0}, {0, 1}, {t, 0}, {t, 1}};
      break;
    }
    case FamilyId::Prog3: {
      const unsigned d1 = u("delta1"), d2 = u("delta2");
      a = p("a");
      b = p("b");
      N = P(a, d1) + P(b, d2);
      D = a * a - P(a, d1);
      reps = {{d1, d2}, {2, d2}, {d1, 2}, {2, 2}};
      break;
    }
    case FamilyId::Prog4: {
      const unsigned t = u("t");
      a = 8;
      b = P(2, 3 * t + 1) - 1;
      N = P(8, t + 1) + 1;
      D = b * b - 1;
      reps = {{t + 1, 0}, {t + 1, 2}, {2 * t + 1, 0}, {2 * t + 1, 2}};
      break;
    }
    case FamilyId::Prog5: {
      const unsigned t = u("t");
      a = 2;
      b = P(2, t + 1) - 1;
      N = P(2, t + 3) + 1;
      D = b * b - 1;
      reps = {{t + 3, 0}, {t + 3, 2}, {2 * t + 3, 0}, {2 * t + 3, 2}};
      break;
    }
    case FamilyId::Prog6: {
      // The fourth term is a^(2t+1) + b; a^(3t) + b agrees only at t = 1.
      const unsigned t = u("t");
      a = 3;
      b = P(3, t) + 1;
      N = 4 * P(3, t) + 1;
      D = P(3, 2 * t) - P(3, t);
      reps = {{t + 1, 1}, {t, 2}, {2 * t, 2}, {2 * t + 1, 1}};
      break;
    }
    case FamilyId::Prog7: {
      const unsigned s = u("s"), t = u("t");
      a = 2;
      b = P(2, t) - 3 * P(2, s) + 1;
      N = P(2, t) - P(2, s + 1) + 1;
      D = P(2, s);
      reps = {{s, 1}, {s + 1, 1}, {t, 0}, {s + 2, 1}};
      break;
    }
  }
  FamilyProgression out{SumsetParams(a, b), Progression{N, D, {}}};
  for (const auto& r : reps) out.prog.terms.push_back({P(a, r.x) + P(b, r.y), {r}});
  return out;
}

bool verify(const Progression& prog, const SumsetParams& params) {
  if (prog.step < 1 || prog.terms.empty()) return false;
  for (std::size_t i = 0; i < prog.terms.size(); ++i) {
    const auto& t = prog.terms[i];
    if (t.value != prog.term(i)) return false;
    for (const auto& r : t.reps) {
      if (pow(params.a(), r.x) + pow(params.b(), r.y) != t.value) return false;
    }
    if (!contains(params, t.value)) return false;
  }
  return true;
}

FamilyProgression example_22_78() {
  const SumsetParams params(22, 78);
  const std::vector<Representation> reps{{1, 2}, {4, 2}, {1, 3}, {4, 3}};
  FamilyProgression out{params, {}};
  for (const auto& r : reps) out.prog.terms.push_back({pow(params.a(), r.x) + pow(params.b(), r.y), {r}});
  out.prog.start = out.prog.terms[0].value;
  out.prog.step = out.prog.terms[1].value - out.prog.terms[0].value;
  return out;
}

std::vector<Prog3Pair> find_prog3_pairs(std::uint64_t limit) {
  if (limit < 2) throw ContractError("find_prog3_pairs: limit must be >= 2");
  std::vector<Prog3Pair> out;
  for (std::uint64_t a = 2; a <= limit; ++a) {
    for (unsigned d1 = 0; d1 <= 1; ++d1) {
      const u128 rhs = 2 * u128(a) * a - 2 * (d1 ? u128(a) : u128(1));
      // d2 = 0: b^2 = rhs + 1
      if (const auto b = exact_root(rhs + 1, 2); b && *b > a) out.push_back({a, std::uint64_t(*b), d1, 0});
      // d2 = 1: b^2 - b = rhs, so (2b - 1)^2 = 4 rhs + 1
      if (const auto s = exact_root(4 * rhs + 1, 2); s && (*s + 1) / 2 > a) {
        out.push_back({a, std::uint64_t((*s + 1) / 2), d1, 1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_instances(FamilyId id, u128 limit) {
  const Natural L = to_natural(limit);
  std::set<std::pair<Natural, Natural>> seen;
  const auto add = [&](const FamilySpec& spec) {
    const auto g = generate(spec);
    if (g.prog.terms.back().value > L) return false;
    seen.emplace(g.prog.start, g.prog.step);
    return true;
  };
  switch (id) {
    case FamilyId::ThreeTermA:
      for (std::int64_t j = 0; add({id, {{"k", 1}, {"j", j}}}); ++j) {}
      break;
    case FamilyId::ThreeTermB:
      for (std::int64_t j = 2; add({id, {{"k", 1}, {"j", j}}}); ++j) {}
      break;
    case FamilyId::ThreeTermMultDep:
      for (std::int64_t k = 0; generate({id, {{"r", 2}, {"c", 2}, {"d", 1}, {"k", k}, {"j", 1}}}).prog.terms[0].value <= L; ++k) {
        for (std::int64_t j = 1; add({id, {{"r", 2}, {"c", 2}, {"d", 1}, {"k", k}, {"j", j}}}); ++j) {}
      }
      break;
    case FamilyId::FourTermPowers2A:
    case FamilyId::FourTermPowers2B: {
      // d = 1, c = 3: k = 3j + 1 (A) or k = 3j - 1 (B).
      const std::int64_t shift = id == FamilyId::FourTermPowers2A ? 1 : -1;
      for (std::int64_t j = 1;; ++j) {
        const FamilyParams base{{"d", 1}, {"c", 3}, {"k", 3 * j + shift}, {"j", j}, {"m", 1}};
        if (generate({id, base}).prog.terms[0].value > L) break;
        for (std::int64_t m = 1;; ++m) {
          auto params = base;
          params["m"] = m;
          if (!add({id, params})) break;
        }
      }
      break;
    }
    default:
      throw ContractError(std::string(to_string(id)) + ": no unboundedness witness for this family");
  }
  return seen.size();
}

namespace {

// Valid assignments only; the constraint checks in validate() still run on each.
std::vector<FamilySpec> grid_specs(FamilyId id, std::int64_t M, unsigned max_bits, std::size_t& skipped) {
  std::vector<FamilySpec> out;
  switch (id) {
    case FamilyId::ThreeTermA:
      for (std::int64_t k = 1; k <= M; ++k)
        for (std::int64_t j = 0; j <= M; ++j) out.push_back({id, {{"k", k}, {"j", j}}});
      break;
    case FamilyId::ThreeTermB:
      for (std::int64_t k = 1; k <= M; ++k)
        for (std::int64_t j = k + 1; j <= M; ++j) out.push_back({id, {{"k", k}, {"j", j}}});
      break;
    case FamilyId::ThreeTermMultDep:
      for (std::int64_t r = 2; r <= M; ++r) {
        const auto r_bits = static_cast<std::int64_t>(boost::multiprecision::msb(Natural(r))) + 1;
        for (std::int64_t d = 1; d <= M; ++d)
          for (std::int64_t c = d + 1; c <= M; ++c)
            for (std::int64_t k = 0; k <= M; ++k)
              for (std::int64_t j = 1; j <= M; ++j) {
                // The last term is 2 a^((k+j)c) = 2 r^((k+j)cd).
                if ((k + j) * c * d * r_bits + 1 > max_bits) {
                  ++skipped;
                  continue;
                }
                out.push_back({id, {{"r", r}, {"c", c}, {"d", d}, {"k", k}, {"j", j}}});
              }
      }
      break;
    case FamilyId::FourTermPowers2A:
    case FamilyId::FourTermPowers2B: {
      const std::int64_t want = id == FamilyId::FourTermPowers2A ? 1 : -1;
      for (std::int64_t d = 1; d <= M; ++d)
        for (std::int64_t c = d + 1; c <= M; ++c) {
          if (std::gcd(c, d) != 1) continue;
          for (std::int64_t k = 1; k <= M; ++k)
            for (std::int64_t j = 1; j <= M; ++j) {
              if (d * k - c * j != want) continue;
              for (std::int64_t m = 1; m <= M; ++m) {
                // The last term is 2^(kd + mcd) + 2^(jc + mcd).
                if (std::max(k * d, j * c) + m * c * d + 1 > max_bits) {
                  ++skipped;
                  continue;
                }
                out.push_back({id, {{"d", d}, {"c", c}, {"k", k}, {"j", j}, {"m", m}}});
              }
            }
        }
      break;
    }
    case FamilyId::Prog1:
      for (std::int64_t n = 2; n <= M; ++n) out.push_back({id, {{"n", n}}});
      break;
    case FamilyId::Prog2:
      for (std::int64_t k = 1; k <= M; ++k)
        for (std::int64_t t = 2; t <= M; ++t) out.push_back({id, {{"k", k}, {"t", t}}});
      break;
    case FamilyId::Prog3:
      for (const auto& pr : find_prog3_pairs(static_cast<std::uint64_t>(std::max<std::int64_t>(M, 2)))) {
        out.push_back({id, {{"a", std::int64_t(pr.a)}, {"b", std::int64_t(pr.b)}, {"delta1", pr.delta1}, {"delta2", pr.delta2}}});
      }
      break;
    case FamilyId::Prog4:
    case FamilyId::Prog5:
    case FamilyId::Prog6:
      for (std::int64_t t = 1; t <= M; ++t) out.push_back({id, {{"t", t}}});
      break;
    case FamilyId::Prog7:
      for (std::int64_t t = 3; t <= M; ++t)
        for (std::int64_t s = 1; s <= t - 2; ++s) out.push_back({id, {{"s", s}, {"t", t}}});
      break;
  }
  return out;
}

}  // namespace

RoundTripReport round_trip(FamilyId id, std::int64_t max_param, unsigned threads, unsigned max_bits) {
  RoundTripReport rep;
  const auto specs = grid_specs(id, max_param, max_bits, rep.skipped);
  std::vector<char> ok(specs.size(), 0);
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    const auto g = generate(specs[i]);
    ok[i] = verify(g.prog, g.params);
  });
  rep.generated = specs.size();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (ok[i]) {
      ++rep.verified;
    } else {
      rep.failures.push_back(specs[i]);
    }
  }
  return rep;
}

}  // namespace apsum
