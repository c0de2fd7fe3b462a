#include "apsum/cli.hpp"

#include "apsum/apsearch.hpp"
#include "apsum/catalog.hpp"
#include "apsum/classify.hpp"
#include "apsum/families.hpp"
#include "apsum/parallel.hpp"
#include "apsum/sunit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef APSUM_VERSION
#define APSUM_VERSION "0.0.0"
#endif

namespace apsum {

using nlohmann::json;

const char* version() { return APSUM_VERSION; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string str(const Natural& v) { return v.str(); }
std::string str(u128 v) { return to_string(v); }

json reps_json(const std::vector<Representation>& reps) {
  json out = json::array();
  for (const auto& r : reps) out.push_back({r.x, r.y});
  return out;
}

json progression_json(const Natural& a, const Natural& b, const Progression& p) {
  json terms = json::array();
  for (const auto& t : p.terms) terms.push_back({{"value", str(t.value)}, {"reps", reps_json(t.reps)}});
  return {{"a", str(a)}, {"b", str(b)}, {"N", str(p.start)}, {"D", str(p.step)}, {"length", p.length()}, {"terms", terms}};
}

json tuple_json(const ApTuple& t) { return {str(t[0]), str(t[1]), str(t[2]), str(t[3])}; }

json entry_json(const ClassEntry& e) {
  json j{{"kind", to_string(e.kind)}, {"tuple", tuple_json(e.tuple)}};
  if (e.k) j["k"] = *e.k;
  return j;
}

std::vector<u128> parse_list(const std::string& text) {
  std::vector<u128> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_u128(item));
  if (out.empty()) throw ContractError("empty list");
  return out;
}

// Collects result lines so the digest covers exactly what was printed.
struct Output {
  std::string buffer;
  void line(const json& j) {
    buffer += j.dump();
    buffer += '\n';
  }
};

struct Context {
  unsigned threads = 1;
  json params = json::object();
  Output out;
  int code = kExitOk;
};

void cmd_member(Context& ctx, const std::string& a, const std::string& b, const std::string& n) {
  const SumsetParams params(parse_natural(a), parse_natural(b));
  const Natural value = parse_natural(n);
  ctx.params = {{"a", a}, {"b", b}, {"n", n}};
  const auto reps = value >= 2 ? representations(params, value) : std::vector<Representation>{};
  ctx.out.line({{"a", str(params.a())}, {"b", str(params.b())}, {"n", str(value)}, {"member", !reps.empty()},
                {"reps", reps_json(reps)}});
}

void cmd_enum(Context& ctx, const std::string& a, const std::string& b, const std::string& limit) {
  const SumsetParams params(parse_natural(a), parse_natural(b));
  const Natural L = parse_natural(limit);
  if (L < 2) throw ContractError("--limit must be >= 2");
  ctx.params = {{"a", a}, {"b", b}, {"limit", str(L)}};
  for (const auto& e : enumerate(params, L)) ctx.out.line({{"value", str(e.value)}, {"reps", reps_json(e.reps)}});
}

void cmd_ap(Context& ctx, const std::string& a, const std::string& b, unsigned len, const std::string& limit,
            bool maximal_only) {
  const SumsetParams params(parse_natural(a), parse_natural(b));
  const u128 L = parse_u128(limit);
  ctx.params = {{"a", a}, {"b", b}, {"len", len}, {"limit", str(L)}, {"maximal_only", maximal_only}};
  const auto rep = find_progressions(params, len, L, ctx.threads);
  for (std::size_t i = 0; i < rep.progressions.size(); ++i) {
    if (maximal_only && !rep.maximal[i]) continue;
    auto j = progression_json(params.a(), params.b(), rep.progressions[i]);
    j["maximal"] = static_cast<bool>(rep.maximal[i]);
    ctx.out.line(j);
  }
}

void cmd_sweep(Context& ctx, std::uint64_t a_max, std::uint64_t b_max, unsigned len, const std::string& limit) {
  const SweepConfig cfg{a_max, b_max, parse_u128(limit), len};
  cfg.validate();
  ctx.params = {{"a_max", a_max}, {"b_max", b_max}, {"len", len}, {"limit", str(cfg.term_limit)}};
  SweepReport rep;
  if (len == 5) {
    rep = verify_theorem1(cfg, ctx.threads);
  } else if (len >= 6) {
    rep = verify_corollary(cfg, ctx.threads);
  } else {
    rep.config = cfg;
    rep.pairs = sweep_pairs(cfg).size();
    rep.hits = sweep_grid(cfg, ctx.threads);
    rep.ok = true;
  }
  for (const auto& h : rep.hits) {
    json j{{"a", std::to_string(h.a)}, {"b", std::to_string(h.b)}, {"N", str(h.prog.start)}, {"D", str(h.prog.step)},
           {"length", h.prog.length()}, {"maximal", h.maximal}};
    if (len >= 5) j["class"] = h.entry ? entry_json(*h.entry) : json(nullptr);
    ctx.out.line(j);
  }
  json summary{{"pairs", rep.pairs}, {"progressions", rep.hits.size()}, {"ok", rep.ok}};
  if (len >= 5) {
    json unclassified = json::array(), witnessed = json::array(), missing = json::array();
    for (const auto& t : rep.unclassified) unclassified.push_back(tuple_json(t));
    for (const auto& e : rep.witnessed) witnessed.push_back(entry_json(e));
    for (const auto& e : rep.missing) missing.push_back(entry_json(e));
    summary["unclassified"] = unclassified;
    summary["witnessed"] = witnessed;
    summary["missing"] = missing;
  }
  ctx.out.line({{"summary", summary}});
  if (!rep.ok) ctx.code = kExitMismatch;
}

void cmd_count3(Context& ctx, const std::string& a, const std::string& b, const std::string& limits) {
  const SumsetParams params(parse_natural(a), parse_natural(b));
  const auto ls = parse_list(limits);
  json jl = json::array();
  for (auto l : ls) jl.push_back(str(l));
  ctx.params = {{"a", a}, {"b", b}, {"limits", jl}};
  const auto rep = count_3term_stable(params, ls, ctx.threads);
  for (const auto& r : rep.rows) ctx.out.line({{"limit", str(r.limit)}, {"windows", r.windows}, {"maximal", r.maximal}});
  ctx.out.line({{"summary", {{"final_windows", rep.rows.back().windows},
                             {"final_maximal", rep.rows.back().maximal},
                             {"stabilized", rep.stabilized}}}});
}

void cmd_deweger(Context& ctx, const std::string& primes_text, const std::string& limit) {
  std::vector<std::uint64_t> ps;
  for (auto v : parse_list(primes_text)) ps.push_back(static_cast<std::uint64_t>(v));
  const PrimeSet primes(ps);
  const u128 L = parse_u128(limit);
  json jp = json::array();
  for (auto p : primes.primes()) jp.push_back(p);
  ctx.params = {{"primes", jp}, {"z_limit", str(L)}};
  const auto sols = deweger_3term(primes, L, ctx.threads);
  std::vector<unsigned> max_ord(primes.size(), 0);
  for (const auto& s : sols) {
    ctx.out.line({{"x", str(s.x)}, {"y", str(s.y)}, {"z", str(s.z)}});
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const u128 p = primes.primes()[i];
      max_ord[i] = std::max(max_ord[i], ord_p(s.x, p) + ord_p(s.y, p) + ord_p(s.z, p));
    }
  }
  json ords = json::object();
  for (std::size_t i = 0; i < primes.size(); ++i) ords[std::to_string(primes.primes()[i])] = max_ord[i];
  ctx.out.line({{"summary", {{"count", sols.size()}, {"max_ord", ords}}}});
}

void cmd_dt(Context& ctx, std::uint64_t p, std::uint64_t q) {
  ctx.params = {{"p", p}, {"q", q}, {"power_bound", kFourTermPowerBound}};
  const auto sols = deze_tijdeman_4term(p, q);
  for (const auto& s : sols) {
    json values = json::array();
    for (auto v : s.values) values.push_back(to_string(v));
    ctx.out.line({{"shape", s.shape == FourTermShape::MixedUnit ? "mixed-unit" : "two-pairs"},
                  {"exponents", s.exponents},
                  {"signs", s.signs},
                  {"values", values}});
  }
  ctx.out.line({{"summary", {{"count", sols.size()}}}});
}

void cmd_bb5(Context& ctx, unsigned alpha_max, unsigned beta_max, const std::string& value_max) {
  const FiveTermBounds bounds{alpha_max, beta_max, static_cast<std::uint64_t>(parse_u128(value_max))};
  ctx.params = {{"alpha_max", alpha_max}, {"beta_max", beta_max}, {"value_max", bounds.value_max}};
  const auto sols = bajpai_bennett_5term(bounds, ctx.threads);
  for (const auto& s : sols) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back({{"sign", t.sign}, {"alpha", t.alpha}, {"beta", t.beta}});
    ctx.out.line({{"terms", terms}});
  }
  ctx.out.line({{"summary", {{"count", sols.size()}}}});
}

void cmd_pattern(Context& ctx, const std::string& file, const std::string& budget) {
  std::ifstream in(file);
  if (!in) throw ContractError("cannot open pattern file '" + file + "'");
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ContractError("pattern file '" + file + "': " + e.what());
  }
  const Pattern pat = pattern_from_json(spec);
  SolveOptions opts;
  opts.threads = ctx.threads;
  opts.budget = parse_natural(budget);
  ctx.params = {{"pattern", spec}, {"budget", str(opts.budget)}, {"search_space", str(pat.search_space())}};
  const auto sols = solve_pattern(pat, opts);
  for (const auto& s : sols) {
    json assignment = json::object();
    for (std::size_t i = 0; i < pat.variables.size(); ++i) assignment[pat.variables[i].name] = s.assignment[i];
    json terms = json::array();
    for (const auto& v : s.term_values) terms.push_back(str(v));
    ctx.out.line({{"assignment", assignment}, {"terms", terms}});
  }
  ctx.out.line({{"summary", {{"count", sols.size()}}}});
}

void cmd_check(Context& ctx, const std::string& id, bool all, const std::string& registry_path) {
  if (all == !id.empty()) throw ContractError("check: give exactly one of <id> or --all");
  const Registry loaded = registry_path.empty() ? Registry() : Registry::load(registry_path);
  const Registry& reg = registry_path.empty() ? Registry::builtin() : loaded;
  ctx.params = {{"id", all ? json("--all") : json(id)}, {"registry", registry_path.empty() ? "builtin" : registry_path}};
  std::vector<VerificationReport> reports;
  if (all) {
    reports = run_all(reg, ctx.threads);
  } else {
    reports.push_back(run_check(reg, id, ctx.threads));
  }
  json elapsed = json::object();
  for (const auto& r : reports) {
    ctx.out.line(to_json(r));
    elapsed[r.check_id] = r.elapsed_ms;
  }
  ctx.params["elapsed_ms"] = elapsed;
  if (!all_passed(reports)) ctx.code = kExitMismatch;
}

FamilyParams parse_family_params(const std::vector<std::string>& items) {
  FamilyParams out;
  for (const auto& item : items) {
    std::stringstream in(item);
    std::string kv;
    while (std::getline(in, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ContractError("--params expects name=value, got '" + kv + "'");
      const auto v = parse_u128(kv.substr(eq + 1));
      if (v > u128(std::numeric_limits<std::int64_t>::max())) throw ContractError("parameter out of range: " + kv);
      out[kv.substr(0, eq)] = static_cast<std::int64_t>(v);
    }
  }
  return out;
}

void cmd_family(Context& ctx, const std::string& id_text, const std::vector<std::string>& params) {
  const auto id = parse_family_id(id_text);
  if (!id) throw ContractError("unknown family '" + id_text + "'");
  const FamilySpec spec{*id, parse_family_params(params)};
  ctx.params = {{"family", id_text}, {"params", spec.params}};
  const auto g = generate(spec);
  auto j = progression_json(g.params.a(), g.params.b(), g.prog);
  j["family"] = id_text;
  j["params"] = spec.params;
  j["verified"] = verify(g.prog, g.params);
  ctx.out.line(j);
  if (!j["verified"].get<bool>()) ctx.code = kExitMismatch;
}

void cmd_family_verify(Context& ctx, std::int64_t max_param, unsigned max_bits, const std::string& limits) {
  const auto ls = parse_list(limits);
  json jl = json::array();
  for (auto l : ls) jl.push_back(str(l));
  ctx.params = {{"max_param", max_param}, {"max_bits", max_bits}, {"unbounded_limits", jl}};
  bool ok = true;
  for (const auto id : all_families()) {
    const auto rep = round_trip(id, max_param, ctx.threads, max_bits);
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back(f.params);
    ok = ok && rep.failures.empty() && rep.generated > 0;
    ctx.out.line({{"family", to_string(id)},
                  {"generated", rep.generated},
                  {"verified", rep.verified},
                  {"skipped", rep.skipped},
                  {"failures", failures}});
  }
  const auto ex = example_22_78();
  const bool ex_ok = verify(ex.prog, ex.params) && ex.prog.step == 234234;
  auto j = progression_json(ex.params.a(), ex.params.b(), ex.prog);
  j["family"] = "example-22-78";
  j["verified"] = ex_ok;
  ctx.out.line(j);
  ok = ok && ex_ok;
  for (const auto id : {FamilyId::ThreeTermA, FamilyId::ThreeTermB, FamilyId::ThreeTermMultDep,
                        FamilyId::FourTermPowers2A, FamilyId::FourTermPowers2B}) {
    json counts = json::array();
    bool increasing = true;
    std::size_t prev = 0;
    for (auto l : ls) {
      const auto c = count_instances(id, l);
      increasing = increasing && (counts.empty() || c > prev);
      prev = c;
      counts.push_back(c);
    }
    ok = ok && increasing;
    ctx.out.line({{"family", to_string(id)}, {"instance_counts", counts}, {"strictly_increasing", increasing}});
  }
  ctx.out.line({{"summary", {{"ok", ok}}}});
  if (!ok) ctx.code = kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Arithmetic progressions in S_{a,b} = {a^x + b^y}: search and verification", "apsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  unsigned threads = default_threads();
  std::string manifest_path;
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")->check(CLI::Range(1u, 1024u));
  app.add_option("--manifest", manifest_path, "write the run manifest to FILE instead of stderr");
  app.fallthrough();

  Context ctx;
  std::function<void()> action;
  std::string subcommand;

  std::string a, b, n, limit = "1000000", limits = "1e8,1e10,1e12";
  auto* member = app.add_subcommand("member", "membership and representations of n");
  member->add_option("a", a)->required();
  member->add_option("b", b)->required();
  member->add_option("n", n)->required();
  member->callback([&] { action = [&] { cmd_member(ctx, a, b, n); }; });

  auto* en = app.add_subcommand("enum", "elements of S_{a,b} up to a limit");
  en->add_option("a", a)->required();
  en->add_option("b", b)->required();
  en->add_option("--limit", limit, "largest value")->required();
  en->callback([&] { action = [&] { cmd_enum(ctx, a, b, limit); }; });

  unsigned len = 3;
  bool maximal_only = false;
  auto* ap = app.add_subcommand("ap", "k-term progressions in S_{a,b}");
  ap->add_option("a", a)->required();
  ap->add_option("b", b)->required();
  ap->add_option("--len", len, "progression length k >= 3")->required()->check(CLI::Range(3u, 64u));
  ap->add_option("--limit", limit, "bound on the last term")->required();
  ap->add_flag("--maximal-only", maximal_only, "only progressions that extend in neither direction");
  ap->callback([&] { action = [&] { cmd_ap(ctx, a, b, len, limit, maximal_only); }; });

  std::uint64_t a_max = 10, b_max = 10;
  auto* sweep = app.add_subcommand("sweep", "progressions over the grid 2 <= a < b, checked against the classification");
  sweep->add_option("--a-max", a_max)->required();
  sweep->add_option("--b-max", b_max)->required();
  sweep->add_option("--len", len)->required()->check(CLI::Range(3u, 64u));
  sweep->add_option("--limit", limit)->required();
  sweep->callback([&] { action = [&] { cmd_sweep(ctx, a_max, b_max, len, limit); }; });

  auto* sunit = app.add_subcommand("sunit", "bounded S-unit solvers");
  sunit->require_subcommand(1);
  std::string primes = "2,3,5,7,11,13", z_limit = "1e12";
  auto* dw = sunit->add_subcommand("deweger", "x + y = z over a prime set");
  dw->add_option("--primes", primes, "comma-separated primes")->capture_default_str();
  dw->add_option("--z-limit", z_limit, "bound on z")->capture_default_str();
  dw->callback([&] { action = [&] { cmd_deweger(ctx, primes, z_limit); }; });
  std::uint64_t p = 2, q = 3;
  auto* dt = sunit->add_subcommand("dt", "four-term two-prime equations, powers <= 2^15");
  dt->add_option("--p", p)->capture_default_str();
  dt->add_option("--q", q)->capture_default_str();
  dt->callback([&] { action = [&] { cmd_dt(ctx, p, q); }; });
  unsigned alpha_max = 19, beta_max = 12;
  std::string value_max = "531441";
  auto* bb5 = sunit->add_subcommand("bb5", "five-term {2,3}-unit equation");
  bb5->add_option("--alpha-max", alpha_max)->capture_default_str();
  bb5->add_option("--beta-max", beta_max)->capture_default_str();
  bb5->add_option("--value-max", value_max)->capture_default_str();
  bb5->callback([&] { action = [&] { cmd_bb5(ctx, alpha_max, beta_max, value_max); }; });
  std::string pattern_file, budget = "500000000";
  auto* pat = sunit->add_subcommand("pattern", "generic two-prime pattern from a JSON file");
  pat->add_option("file", pattern_file)->required();
  pat->add_option("--budget", budget, "largest search space accepted")->capture_default_str();
  pat->callback([&] { action = [&] { cmd_pattern(ctx, pattern_file, budget); }; });

  std::string check_id, registry;
  bool check_all = false;
  auto* check = app.add_subcommand("check", "run registered finite computations");
  check->add_option("id", check_id);
  check->add_flag("--all", check_all);
  check->add_option("--registry", registry, "registry file (default: the compiled-in copy of data/catalog.json)");
  check->callback([&] { action = [&] { cmd_check(ctx, check_id, check_all, registry); }; });

  std::string family_id;
  std::vector<std::string> family_params;
  std::int64_t max_param = 20;
  unsigned max_bits = 8192;
  std::string family_limits = "1e6,1e9,1e12";
  auto* family = app.add_subcommand("family", "constructive families of progressions");
  family->add_option("id", family_id, "family id, or 'verify'")->required();
  family->add_option("--params", family_params, "name=value[,name=value...]");
  family->add_option("--max-param", max_param, "verify: largest grid parameter")->capture_default_str();
  family->add_option("--max-bits", max_bits, "verify: skip instances with larger terms")->capture_default_str();
  family->add_option("--limits", family_limits, "verify: limits for the unboundedness counts")->capture_default_str();
  family->callback([&] {
    action = [&] {
      if (family_id == "verify") {
        cmd_family_verify(ctx, max_param, max_bits, family_limits);
      } else {
        cmd_family(ctx, family_id, family_params);
      }
    };
  });

  auto* count3 = app.add_subcommand("count3", "3-term progression counts at increasing limits");
  count3->add_option("a", a)->required();
  count3->add_option("b", b)->required();
  count3->add_option("--limits", limits, "ascending, comma-separated")->capture_default_str();
  count3->callback([&] { action = [&] { cmd_count3(ctx, a, b, limits); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  for (const auto* sub : app.get_subcommands()) {
    subcommand = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) subcommand += " " + inner->get_name();
  }

  ctx.threads = threads;
  try {
    action();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    ctx.code = kExitBudget;
    ctx.params["refused_estimate"] = e.estimate().str();
    ctx.params["budget"] = e.budget().str();
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << ctx.out.buffer;

  std::ostringstream digest;
  digest << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(ctx.out.buffer);
  const json manifest{
      {"command", subcommand},
      {"argv", args},
      {"params", ctx.params},
      {"threads", ctx.threads},
      {"version", version()},
      {"duration_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()},
      {"result_digest", digest.str()},
      {"result_lines", std::count(ctx.out.buffer.begin(), ctx.out.buffer.end(), '\n')},
      {"exit_code", ctx.code},
  };
  if (manifest_path.empty()) {
    err << manifest.dump() << "\n";
  } else {
    std::ofstream mf(manifest_path);
    if (!mf) {
      err << "error: cannot write manifest '" << manifest_path << "'\n";
      return kExitUsage;
    }
    mf << manifest.dump(2) << "\n";
  }
  return ctx.code;
}

}  // namespace apsum
