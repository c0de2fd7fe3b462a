#include "apsum/catalog.hpp"

#include "apsum/expr.hpp"
#include "apsum/parallel.hpp"
#include "apsum/sunit.hpp"

#include "catalog_data.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace apsum {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Lemma

std::string_view to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::SmoothPlusOne: return "smooth-plus-one";
    case LemmaCase::BaseThreeStepOne: return "base3-step1";
    case LemmaCase::BaseThreeStepTwo: return "base3-step2";
    case LemmaCase::BaseNineStepOne: return "base9-step1";
    case LemmaCase::BaseFourStepOne: return "base4-step1";
    case LemmaCase::Sporadic: return "sporadic";
    case LemmaCase::PaperDiscrepancy: return "paper-discrepancy";
    case LemmaCase::OutsideHypothesis: return "outside-hypothesis";
    case LemmaCase::Unlisted: return "UNLISTED";
  }
  return "UNLISTED";
}

const std::vector<std::array<std::uint64_t, 4>>& lemma_printed_sporadic() {
  static const std::vector<std::array<std::uint64_t, 4>> list = {
      {2, 2, 0, 1}, {5, 2, 3, 1}, {7, 2, 4, 1}, {17, 1, 5, 2}};
  return list;
}

std::vector<LemmaSolution> lemma21_solve(std::uint64_t b, unsigned x_max, unsigned alpha_max, unsigned beta_max) {
  if (b < 2) throw ContractError("lemma21_solve: b must be >= 2");
  if (x_max < 1 || alpha_max < 1 || beta_max < 1) throw ContractError("lemma21_solve: bounds must be >= 1");
  std::vector<LemmaSolution> out;
  std::vector<Natural> powers{Natural(1)};
  for (unsigned e = 1; e <= x_max; ++e) powers.push_back(powers.back() * b);
  for (unsigned x = 1; x <= x_max; ++x) {
    for (unsigned y = 0; y < x; ++y) {
      Natural d = powers[x] - powers[y];
      const unsigned alpha = ord_p(d, Natural(2));
      if (alpha > alpha_max) continue;
      d >>= alpha;
      const auto beta = power_exponent(d, Natural(3));
      if (!beta || *beta > beta_max) continue;
      out.push_back({b, x, y, alpha, *beta});
    }
  }
  return out;
}

LemmaCase lemma21_classify(const LemmaSolution& s) {
  const auto smooth = checked_mul(*checked_pow(2, s.alpha), *checked_pow(3, s.beta));
  if (s.x == 1 && s.y == 0 && smooth && *smooth + 1 == s.b) return LemmaCase::SmoothPlusOne;
  if (s.b == 3 && s.x == s.y + 1 && s.beta == s.y && s.alpha == 1) return LemmaCase::BaseThreeStepOne;
  if (s.b == 3 && s.x == s.y + 2 && s.beta == s.y && s.alpha == 3) return LemmaCase::BaseThreeStepTwo;
  if (s.b == 9 && s.x == s.y + 1 && s.beta == 2 * s.y && s.alpha == 3) return LemmaCase::BaseNineStepOne;
  if (s.b == 4 && s.x == s.y + 1 && s.alpha == 2 * s.y && s.beta == 1) return LemmaCase::BaseFourStepOne;
  if (s.y == 0) {
    const std::array<std::uint64_t, 4> key{s.b, s.x, s.alpha, s.beta};
    const auto& printed = lemma_printed_sporadic();
    if (std::find(printed.begin(), printed.end(), key) != printed.end()) return LemmaCase::Sporadic;
    // 17^2 - 1 = 288 = 2^5 3^2; the printed entry has x = 1.
    if (key == std::array<std::uint64_t, 4>{17, 2, 5, 2}) return LemmaCase::PaperDiscrepancy;
  }
  if (s.b == 2) return LemmaCase::OutsideHypothesis;
  return LemmaCase::Unlisted;
}

// ---------------------------------------------------------------------------
// Registry parsing

namespace {

std::int64_t to_i64(const Natural& v, std::string_view what) {
  if (v > Natural(std::numeric_limits<std::int64_t>::max()) || v < Natural(std::numeric_limits<std::int64_t>::min())) {
    throw ContractError(std::string(what) + ": value out of 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

Natural json_natural(const json& j) {
  if (j.is_string()) return parse_natural(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer()) return Natural(j.get<std::int64_t>());
  throw ContractError("expected an integer or a decimal string");
}

std::vector<Tuple> parse_tuples(const json& j) {
  std::vector<Tuple> out;
  for (const auto& t : j) out.push_back(t.get<Tuple>());
  return out;
}

NamedCheck parse_check(const json& j) {
  NamedCheck c;
  try {
    c.id = j.at("id").get<std::string>();
    c.description = get_or<std::string>(j, "description", "");
    c.location = get_or<std::string>(j, "location", "");
    c.solver = j.at("solver").get<std::string>();
    c.params = j.value("params", json::object());
    c.tuple = j.at("tuple").get<std::vector<std::string>>();
    c.recheck = j.value("recheck", std::vector<std::string>{});
    if (j.contains("expected")) c.expected = parse_tuples(j.at("expected"));
    for (const auto& f : j.value("families", json::array())) {
      ParametricFamily fam;
      fam.name = f.at("name").get<std::string>();
      fam.parameter = f.at("parameter").get<std::string>();
      const auto range = f.at("range").get<std::array<std::int64_t, 2>>();
      fam.first = range[0];
      fam.last = range[1];
      fam.components = f.at("tuple").get<std::vector<std::string>>();
      if (fam.components.size() != c.tuple.size()) throw ContractError("family '" + fam.name + "' has the wrong arity");
      c.families.push_back(std::move(fam));
    }
    for (const auto& d : j.value("documented_discrepancies", json::array())) {
      DocumentedDiscrepancy dd;
      dd.printed = parse_tuples(d.value("printed", json::array()));
      dd.found = parse_tuples(d.value("found", json::array()));
      dd.note = d.value("note", "");
      c.discrepancies.push_back(std::move(dd));
    }
  } catch (const json::exception& e) {
    throw ContractError("registry entry " + (c.id.empty() ? std::string("?") : c.id) + ": " + e.what());
  }
  for (const auto& t : c.expected) {
    if (t.size() != c.tuple.size()) throw ContractError("registry entry " + c.id + ": expected tuple has the wrong arity");
  }
  static const std::set<std::string> solvers{"pattern", "trinomial-powers", "kruk-scan", "lemma-sweep"};
  if (!solvers.contains(c.solver)) throw ContractError("registry entry " + c.id + ": unknown solver '" + c.solver + "'");
  return c;
}

}  // namespace

Registry::Registry(std::vector<NamedCheck> checks) : checks_(std::move(checks)) {
  std::sort(checks_.begin(), checks_.end(), [](const auto& l, const auto& r) { return l.id < r.id; });
  for (std::size_t i = 1; i < checks_.size(); ++i) {
    if (checks_[i].id == checks_[i - 1].id) throw ContractError("duplicate check id '" + checks_[i].id + "'");
  }
}

Registry Registry::from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("checks")) throw ContractError("registry: missing 'checks' array");
  const auto version = doc.value("format", 0);
  if (version != 1) throw ContractError("registry: unsupported format version " + std::to_string(version));
  std::vector<NamedCheck> checks;
  for (const auto& entry : doc.at("checks")) checks.push_back(parse_check(entry));
  return Registry(std::move(checks));
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open registry file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ContractError("registry file '" + path + "': " + e.what());
  }
  return from_json(doc);
}

const Registry& Registry::builtin() {
  static const Registry reg = from_json(json::parse(detail::kCatalogJson));
  return reg;
}

const NamedCheck* Registry::find(std::string_view id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::PaperDiscrepancy: return "paper-discrepancy";
    case CheckStatus::Fail: return "fail";
  }
  return "fail";
}

// ---------------------------------------------------------------------------
// Solvers. Each produces raw bindings; the entry's tuple spec maps them.

namespace {

struct SolverOutput {
  std::vector<Bindings> rows;
  json bounds;
};

ExponentRef parse_exponent(const json& j, const Pattern& pat) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw ContractError("pattern: negative fixed exponent");
    return ExponentRef::constant(static_cast<unsigned>(v));
  }
  const auto name = j.get<std::string>();
  const int idx = pat.variable_index(name);
  if (idx < 0) throw ContractError("pattern: unknown variable '" + name + "'");
  return ExponentRef::variable(idx);
}

std::vector<PatternTerm> parse_terms(const json& arr, const Pattern& pat) {
  std::vector<PatternTerm> out;
  for (const auto& t : arr) {
    PatternTerm term;
    term.coefficient = t.value("coef", std::int64_t{1});
    term.p_exp = parse_exponent(t.value("p", json(0)), pat);
    term.q_exp = parse_exponent(t.value("q", json(0)), pat);
    out.push_back(term);
  }
  return out;
}

VariableConstraint parse_constraint(const std::string& text, const Pattern& pat) {
  std::istringstream in(text);
  std::string lhs, op, rhs;
  in >> lhs >> op >> rhs;
  static const std::map<std::string, Relation> rels{{"<", Relation::Less},        {"<=", Relation::LessEqual},
                                                    {">", Relation::Greater},     {">=", Relation::GreaterEqual},
                                                    {"=", Relation::Equal},       {"==", Relation::Equal},
                                                    {"!=", Relation::NotEqual}};
  const auto rel = rels.find(op);
  const int l = pat.variable_index(lhs);
  const int r = pat.variable_index(rhs);
  if (rel == rels.end() || l < 0 || r < 0 || !(in >> std::ws).eof()) {
    throw ContractError("pattern: bad constraint '" + text + "' (expected 'var REL var')");
  }
  return {l, rel->second, r};
}

Bindings bind_assignment(const Pattern& pat, const std::vector<unsigned>& a) {
  Bindings b;
  for (std::size_t i = 0; i < pat.variables.size(); ++i) b[pat.variables[i].name] = a[i];
  b["p"] = pat.p;
  b["q"] = pat.q;
  return b;
}

}  // namespace

Pattern pattern_from_json(const json& params, std::uint64_t p, std::uint64_t q) {
  Pattern pat;
  pat.p = p;
  pat.q = q;
  for (const auto& v : params.at("variables")) {
    pat.variables.push_back({v.at("name").get<std::string>(), v.value("min", 0u), v.at("max").get<unsigned>()});
  }
  pat.terms = parse_terms(params.at("terms"), pat);
  pat.require_primitive = params.value("require_primitive", false);
  pat.forbid_vanishing_subsums = params.value("forbid_vanishing_subsums", false);
  if (params.contains("value_bound")) pat.value_bound = json_natural(params.at("value_bound"));
  for (const auto& c : params.value("constraints", std::vector<std::string>{})) {
    pat.constraints.push_back(parse_constraint(c, pat));
  }
  for (const auto& sc : params.value("side_conditions", json::array())) {
    pat.side_conditions.push_back({parse_terms(sc.at("terms"), pat), sc.value("base", std::uint64_t{2})});
  }
  const auto filters = params.value("filters", std::vector<std::string>{});
  if (!filters.empty()) {
    // Copy what the filter needs; the pattern itself is moved around.
    std::vector<std::string> names;
    for (const auto& v : pat.variables) names.push_back(v.name);
    pat.post_filter = [filters, names, p, q](const PatternSolution& s) {
      Bindings b;
      for (std::size_t i = 0; i < names.size(); ++i) b[names[i]] = s.assignment[i];
      b["p"] = p;
      b["q"] = q;
      return std::all_of(filters.begin(), filters.end(), [&](const auto& f) { return eval_assertion(f, b); });
    };
  }
  pat.validate();
  return pat;
}

Pattern pattern_from_json(const json& params) {
  try {
    return pattern_from_json(params, params.at("p").get<std::uint64_t>(), params.at("q").get<std::uint64_t>());
  } catch (const json::exception& e) {
    throw ContractError(std::string("pattern: ") + e.what());
  }
}

namespace {

SolverOutput run_pattern(const json& params, unsigned threads) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (params.contains("prime_pairs")) {
    for (const auto& pr : params.at("prime_pairs")) pairs.emplace_back(pr.at(0).get<std::uint64_t>(), pr.at(1).get<std::uint64_t>());
  } else {
    pairs.emplace_back(params.at("p").get<std::uint64_t>(), params.at("q").get<std::uint64_t>());
  }
  SolveOptions opts;
  opts.threads = threads;
  if (params.contains("budget")) opts.budget = json_natural(params.at("budget"));
  SolverOutput out;
  Natural space = 0;
  for (const auto& [p, q] : pairs) {
    const Pattern pat = pattern_from_json(params, p, q);
    space += pat.search_space();
    for (const auto& sol : solve_pattern(pat, opts)) out.rows.push_back(bind_assignment(pat, sol.assignment));
  }
  out.bounds = params;
  out.bounds["search_space"] = space.str();
  return out;
}

// b^m = 2^A + 2^B + 1 with A > B >= 0, m >= 2, b >= b_min.
SolverOutput run_trinomial(const json& params) {
  const unsigned a_max = params.value("A_max", 100u);
  const unsigned m_min = params.value("m_min", 2u);
  const std::uint64_t b_min = params.value("b_min", std::uint64_t{3});
  if (a_max > 120) throw ContractError("trinomial-powers: A_max must be <= 120");
  SolverOutput out;
  for (unsigned A = 1; A <= a_max; ++A) {
    for (unsigned B = 0; B < A; ++B) {
      const u128 v = (u128(1) << A) + (u128(1) << B) + 1;
      for (unsigned m = m_min; (u128(1) << m) <= v; ++m) {
        const auto root = exact_root(v, m);
        if (!root || *root < b_min) continue;
        out.rows.push_back({{"b", Natural(*root)}, {"m", Natural(m)}, {"A", Natural(A)}, {"B", Natural(B)}});
      }
    }
  }
  out.bounds = {{"A_max", a_max}, {"m_min", m_min}, {"b_min", b_min}};
  return out;
}

// 1 + b^y2 + 2^x0 = 2 b^y1.
SolverOutput run_kruk(const json& params, unsigned threads) {
  const std::uint64_t b_min = params.value("b_min", std::uint64_t{3});
  const std::uint64_t b_max = params.at("b_max").get<std::uint64_t>();
  const unsigned y_max = params.at("y_max").get<unsigned>();
  const unsigned x_max = params.at("x_max").get<unsigned>();
  if (b_min < 2 || b_max < b_min) throw ContractError("kruk-scan: need 2 <= b_min <= b_max");
  const std::size_t count = b_max - b_min + 1;
  std::vector<std::vector<Bindings>> per_b(count);
  parallel_for(count, threads, [&](std::size_t i) {
    const std::uint64_t b = b_min + i;
    std::vector<Natural> pw{Natural(1)};
    for (unsigned e = 1; e <= y_max; ++e) pw.push_back(pw.back() * b);
    const Natural two_x_max = Natural(1) << x_max;
    for (unsigned y1 = 0; y1 <= y_max; ++y1) {
      for (unsigned y2 = 0; y2 <= y_max; ++y2) {
        const Natural rest = 2 * pw[y1] - 1 - pw[y2];
        if (rest < 1 || rest > two_x_max) continue;
        const auto x0 = power_exponent(rest, Natural(2));
        if (!x0) continue;
        per_b[i].push_back({{"b", Natural(b)}, {"x0", Natural(*x0)}, {"y1", Natural(y1)}, {"y2", Natural(y2)}});
      }
    }
  });
  SolverOutput out;
  for (auto& rows : per_b) std::move(rows.begin(), rows.end(), std::back_inserter(out.rows));
  out.bounds = {{"b_min", b_min}, {"b_max", b_max}, {"x_max", x_max}, {"y_max", y_max}};
  return out;
}

struct LemmaSweep {
  SolverOutput raw;
  std::vector<Tuple> classified;  // found solutions matching a listed case
};

LemmaSweep run_lemma_sweep(const json& params, unsigned threads) {
  const std::uint64_t b_min = params.value("b_min", std::uint64_t{2});
  const std::uint64_t b_max = params.at("b_max").get<std::uint64_t>();
  const unsigned x_max = params.at("x_max").get<unsigned>();
  const unsigned alpha_max = params.at("alpha_max").get<unsigned>();
  const unsigned beta_max = params.at("beta_max").get<unsigned>();
  if (b_min < 2 || b_max < b_min) throw ContractError("lemma-sweep: need 2 <= b_min <= b_max");
  std::vector<std::vector<LemmaSolution>> per_b(b_max - b_min + 1);
  parallel_for(per_b.size(), threads,
               [&](std::size_t i) { per_b[i] = lemma21_solve(b_min + i, x_max, alpha_max, beta_max); });
  LemmaSweep out;
  std::map<std::string, std::size_t> tally;
  for (const auto& sols : per_b) {
    for (const auto& s : sols) {
      out.raw.rows.push_back({{"b", Natural(s.b)},
                              {"x", Natural(s.x)},
                              {"y", Natural(s.y)},
                              {"alpha", Natural(s.alpha)},
                              {"beta", Natural(s.beta)}});
      const auto c = lemma21_classify(s);
      ++tally[std::string(to_string(c))];
      if (c != LemmaCase::Unlisted && c != LemmaCase::PaperDiscrepancy) {
        out.classified.push_back({static_cast<std::int64_t>(s.b), s.x, s.y, s.alpha, s.beta});
      }
    }
  }
  out.raw.bounds = {{"b_min", b_min}, {"b_max", b_max}, {"x_max", x_max}, {"alpha_max", alpha_max},
                    {"beta_max", beta_max}, {"cases", tally}};
  return out;
}

struct TupleSlot {
  std::string name;
  std::string expr;
};

std::vector<TupleSlot> parse_slots(const std::vector<std::string>& spec) {
  std::vector<TupleSlot> out;
  for (const auto& s : spec) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      out.push_back({s, s});
    } else {
      out.push_back({s.substr(0, eq), s.substr(eq + 1)});
    }
  }
  return out;
}

Bindings bind_tuple(const std::vector<TupleSlot>& slots, const Tuple& t) {
  Bindings b;
  for (std::size_t i = 0; i < slots.size(); ++i) b[slots[i].name] = t[i];
  return b;
}

bool recheck_ok(const NamedCheck& check, const Bindings& b) {
  for (const auto& a : check.recheck) {
    try {
      if (!eval_assertion(a, b)) return false;
    } catch (const ContractError&) {
      return false;  // e.g. a negative exponent from a misprinted tuple
    }
  }
  return true;
}

std::vector<Tuple> set_difference(const std::vector<Tuple>& l, const std::vector<Tuple>& r) {
  std::vector<Tuple> out;
  std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

void sort_unique(std::vector<Tuple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

VerificationReport run_check(const NamedCheck& check, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check_id = check.id;
  const auto slots = parse_slots(check.tuple);
  for (const auto& s : slots) rep.tuple_names.push_back(s.name);

  SolverOutput raw;
  std::vector<Tuple> predicate_expected;
  if (check.solver == "pattern") {
    raw = run_pattern(check.params, threads);
  } else if (check.solver == "trinomial-powers") {
    raw = run_trinomial(check.params);
  } else if (check.solver == "kruk-scan") {
    raw = run_kruk(check.params, threads);
  } else if (check.solver == "lemma-sweep") {
    auto sweep = run_lemma_sweep(check.params, threads);
    raw = std::move(sweep.raw);
    predicate_expected = std::move(sweep.classified);
  } else {
    throw ContractError("unknown solver '" + check.solver + "'");
  }
  rep.bounds_used = std::move(raw.bounds);

  for (const auto& row : raw.rows) {
    Tuple t;
    for (const auto& s : slots) t.push_back(to_i64(eval_expr(s.expr, row), check.id));
    rep.found.push_back(std::move(t));
  }
  sort_unique(rep.found);

  rep.expected = check.expected;
  for (const auto& fam : check.families) {
    for (std::int64_t v = fam.first; v <= fam.last; ++v) {
      const Bindings b{{fam.parameter, Natural(v)}};
      Tuple t;
      for (const auto& c : fam.components) t.push_back(to_i64(eval_expr(c, b), check.id));
      rep.expected.push_back(std::move(t));
    }
  }
  // Solutions matched by a predicate-defined case (lemma sweep) count as expected.
  rep.expected.insert(rep.expected.end(), predicate_expected.begin(), predicate_expected.end());
  sort_unique(rep.expected);

  for (const auto& t : rep.expected) {
    if (!recheck_ok(check, bind_tuple(slots, t))) rep.expected_recheck_failures.push_back(t);
  }
  for (const auto& t : rep.found) {
    if (!recheck_ok(check, bind_tuple(slots, t))) rep.found_recheck_failures.push_back(t);
  }
  rep.missing = set_difference(rep.expected, rep.found);
  rep.extra = set_difference(rep.found, rep.expected);

  const bool clean = rep.missing.empty() && rep.extra.empty() && rep.expected_recheck_failures.empty() &&
                     rep.found_recheck_failures.empty();
  if (clean) {
    rep.status = CheckStatus::Pass;
  } else {
    std::vector<Tuple> printed, corrected;
    for (const auto& d : check.discrepancies) {
      printed.insert(printed.end(), d.printed.begin(), d.printed.end());
      corrected.insert(corrected.end(), d.found.begin(), d.found.end());
    }
    sort_unique(printed);
    sort_unique(corrected);
    const auto covered = [](const std::vector<Tuple>& xs, const std::vector<Tuple>& allowed) {
      return std::all_of(xs.begin(), xs.end(),
                         [&](const Tuple& t) { return std::binary_search(allowed.begin(), allowed.end(), t); });
    };
    const bool documented = rep.found_recheck_failures.empty() && covered(rep.missing, printed) &&
                            covered(rep.expected_recheck_failures, printed) && covered(rep.extra, corrected);
    rep.status = documented ? CheckStatus::PaperDiscrepancy : CheckStatus::Fail;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport run_check(const Registry& registry, std::string_view id, unsigned threads) {
  const NamedCheck* c = registry.find(id);
  if (!c) throw ContractError("unknown check id '" + std::string(id) + "'");
  return run_check(*c, threads);
}

std::vector<VerificationReport> run_all(const Registry& registry, unsigned threads) {
  std::vector<VerificationReport> out;
  for (const auto& c : registry.checks()) out.push_back(run_check(c, threads));
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status != CheckStatus::Fail; });
}

json to_json(const VerificationReport& r) {
  return {{"check", r.check_id},
          {"status", to_string(r.status)},
          {"tuple", r.tuple_names},
          {"found", r.found},
          {"expected", r.expected},
          {"missing", r.missing},
          {"extra", r.extra},
          {"expected_recheck_failures", r.expected_recheck_failures},
          {"found_recheck_failures", r.found_recheck_failures},
          {"bounds", r.bounds_used}};
}

}  // namespace apsum
