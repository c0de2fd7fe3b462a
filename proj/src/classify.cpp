#include "apsum/classify.hpp"

#include "apsum/parallel.hpp"

#include <algorithm>

namespace apsum {

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Family1: return "family1";
    case ClassKind::Family2: return "family2";
    case ClassKind::Sporadic: return "sporadic";
  }
  return "sporadic";
}

ClassEntry family1(unsigned k) {
  if (k < 1) throw ContractError("family1: k must be >= 1");
  const Natural t = pow(Natural(2), k);
  return {ClassKind::Family1, k, {Natural(2), t + 1, t + 1, t}};
}

ClassEntry family2(unsigned k) {
  if (k < 1) throw ContractError("family2: k must be >= 1");
  const Natural t = pow(Natural(3), k - 1);
  return {ClassKind::Family2, k, {Natural(3), 4 * t + 1, t + 1, 2 * t}};
}

const std::vector<ClassEntry>& sporadic_entries() {
  static const std::vector<ClassEntry> list = [] {
    const std::array<std::array<unsigned, 4>, 9> raw{{{2, 3, 5, 2},
                                                      {2, 3, 7, 6},
                                                      {2, 3, 9, 8},
                                                      {2, 3, 17, 24},
                                                      {2, 3, 41, 24},
                                                      {2, 5, 5, 8},
                                                      {2, 9, 17, 24},
                                                      {2, 9, 41, 24},
                                                      {3, 4, 7, 6}}};
    std::vector<ClassEntry> out;
    for (const auto& r : raw) {
      out.push_back({ClassKind::Sporadic, std::nullopt, {Natural(r[0]), Natural(r[1]), Natural(r[2]), Natural(r[3])}});
    }
    return out;
  }();
  return list;
}

std::optional<ClassEntry> theorem1_match(const Natural& a, const Natural& b, const Natural& N, const Natural& D) {
  if (a < 2 || b <= a || N < 2 || D < 1) throw ContractError("theorem1_match: need b > a > 1, N >= 2, D >= 1");
  if (a == 2 && b > 2) {
    if (const auto k = power_exponent(Natural(b - 1), Natural(2)); k && *k >= 1) {
      const auto e = family1(*k);
      if (e.tuple[2] == N && e.tuple[3] == D) return e;
    }
  }
  if (a == 3 && (b - 1) % 4 == 0) {
    if (const auto j = power_exponent(Natural((b - 1) / 4), Natural(3))) {
      const auto e = family2(*j + 1);
      if (e.tuple[2] == N && e.tuple[3] == D) return e;
    }
  }
  const ApTuple key{a, b, N, D};
  for (const auto& e : sporadic_entries()) {
    if (e.tuple == key) return e;
  }
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (a_max < 2 || b_max < 3) throw ContractError("sweep: need a_max >= 2 and b_max >= 3");
  if (term_limit < 2) throw ContractError("sweep: term limit must be >= 2");
  if (k < 3) throw ContractError("sweep: progression length must be >= 3");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sweep_pairs(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> grid;
  for (std::uint64_t a = 2; a <= cfg.a_max; ++a) {
    for (std::uint64_t b = a + 1; b <= cfg.b_max; ++b) grid.emplace_back(a, b);
  }
  return grid;
}

std::vector<SweepHit> sweep_grid(const SweepConfig& cfg, unsigned threads) {
  const auto grid = sweep_pairs(cfg);
  std::vector<std::vector<SweepHit>> per_pair(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const auto [a, b] = grid[i];
    auto rep = find_progressions(SumsetParams(a, b), cfg.k, cfg.term_limit, 1);
    for (std::size_t j = 0; j < rep.progressions.size(); ++j) {
      per_pair[i].push_back({a, b, std::move(rep.progressions[j]), rep.maximal[j], std::nullopt});
    }
  });
  std::vector<SweepHit> out;
  for (auto& v : per_pair) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;  // grid order is (a, b) ascending, each block sorted by (N, D)
}

namespace {

bool fits(const ClassEntry& e, const SweepConfig& cfg) {
  const auto& [a, b, N, D] = e.tuple;
  return a <= cfg.a_max && b <= cfg.b_max && N + D * (cfg.k - 1) <= to_natural(cfg.term_limit);
}

bool same_entry(const ClassEntry& l, const ClassEntry& r) { return l.tuple == r.tuple; }

std::vector<ClassEntry> missing_entries(const std::vector<ClassEntry>& expected, const std::vector<ClassEntry>& found) {
  std::vector<ClassEntry> out;
  for (const auto& e : expected) {
    if (std::none_of(found.begin(), found.end(), [&](const auto& f) { return same_entry(e, f); })) out.push_back(e);
  }
  return out;
}

ApTuple tuple_of(const SweepHit& h) { return {Natural(h.a), Natural(h.b), h.prog.start, h.prog.step}; }

}  // namespace

SweepReport verify_theorem1(const SweepConfig& cfg, unsigned threads) {
  if (cfg.k != 5) throw ContractError("verify_theorem1: k must be 5");
  SweepReport rep;
  rep.config = cfg;
  rep.pairs = sweep_pairs(cfg).size();
  rep.hits = sweep_grid(cfg, threads);
  for (auto& h : rep.hits) {
    h.entry = theorem1_match(Natural(h.a), Natural(h.b), h.prog.start, h.prog.step);
    if (!h.entry) {
      rep.unclassified.push_back(tuple_of(h));
    } else if (std::none_of(rep.witnessed.begin(), rep.witnessed.end(),
                            [&](const auto& w) { return same_entry(w, *h.entry); })) {
      rep.witnessed.push_back(*h.entry);
    }
  }
  for (unsigned k = 1; family1(k).tuple[1] <= cfg.b_max; ++k) {
    if (fits(family1(k), cfg)) rep.expected.push_back(family1(k));
  }
  for (unsigned k = 1; family2(k).tuple[1] <= cfg.b_max; ++k) {
    if (fits(family2(k), cfg)) rep.expected.push_back(family2(k));
  }
  for (const auto& e : sporadic_entries()) {
    if (fits(e, cfg)) rep.expected.push_back(e);
  }
  rep.missing = missing_entries(rep.expected, rep.witnessed);
  rep.ok = rep.unclassified.empty() && rep.missing.empty();
  return rep;
}

SweepReport verify_corollary(const SweepConfig& cfg, unsigned threads) {
  if (cfg.k < 6) throw ContractError("verify_corollary: k must be >= 6");
  SweepReport rep;
  rep.config = cfg;
  rep.pairs = sweep_pairs(cfg).size();
  rep.hits = sweep_grid(cfg, threads);
  if (cfg.k == 6) {
    for (const auto& t : {family1(1).tuple, sporadic_entries()[3].tuple, sporadic_entries()[6].tuple}) {
      const ClassEntry e{t == family1(1).tuple ? ClassKind::Family1 : ClassKind::Sporadic,
                         t == family1(1).tuple ? std::optional<unsigned>(1) : std::nullopt, t};
      if (fits(e, cfg)) rep.expected.push_back(e);
    }
  }
  for (auto& h : rep.hits) {
    const auto t = tuple_of(h);
    const auto it = std::find_if(rep.expected.begin(), rep.expected.end(), [&](const auto& e) { return e.tuple == t; });
    if (it == rep.expected.end()) {
      rep.unclassified.push_back(t);
    } else {
      h.entry = *it;
      rep.witnessed.push_back(*it);
    }
  }
  rep.missing = missing_entries(rep.expected, rep.witnessed);
  rep.ok = rep.unclassified.empty() && rep.missing.empty();
  return rep;
}

NonExtensionReport family_nonextension(unsigned k_max) {
  if (k_max < 1) throw ContractError("family_nonextension: k_max must be >= 1");
  NonExtensionReport rep;
  rep.ok = true;
  for (const auto kind : {ClassKind::Family1, ClassKind::Family2}) {
    for (unsigned k = 1; k <= k_max; ++k) {
      const auto e = kind == ClassKind::Family1 ? family1(k) : family2(k);
      const auto& [a, b, N, D] = e.tuple;
      const SumsetParams params(a, b);
      NonExtensionRow row{kind, k, e.tuple, N + 5 * D, false, false};
      row.five_terms_ok = make_progression(params, N, D, 5).has_value();
      row.extends = contains(params, row.next);
      const bool should_extend = kind == ClassKind::Family1 && k == 1;
      rep.ok = rep.ok && row.five_terms_ok && row.extends == should_extend;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace apsum
