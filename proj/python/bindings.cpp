#include "apsum/apsearch.hpp"
#include "apsum/catalog.hpp"
#include "apsum/classify.hpp"
#include "apsum/cli.hpp"
#include "apsum/families.hpp"
#include "apsum/sumset.hpp"
#include "apsum/sunit.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace apsum;

namespace {

// Python ints of any size pass through decimal strings.
py::int_ to_py(const Natural& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}
py::int_ to_py(u128 n) { return to_py(Natural(n)); }

Natural from_py(const py::int_& v) {
  const auto s = py::str(v).cast<std::string>();
  if (!s.empty() && s[0] == '-') throw ContractError("expected a nonnegative integer, got " + s);
  return Natural(s);
}

u128 limit_from_py(const py::int_& v) {
  auto w = to_u128(from_py(v));
  if (!w) throw ContractError("limit exceeds 128 bits");
  return *w;
}

SumsetParams params(const py::int_& a, const py::int_& b) { return SumsetParams(from_py(a), from_py(b)); }

py::list reps(const std::vector<Representation>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(py::make_tuple(r.x, r.y));
  return out;
}

py::dict progression(const Progression& p) {
  py::dict d;
  d["N"] = to_py(p.start);
  d["D"] = to_py(p.step);
  py::list terms;
  for (const auto& t : p.terms) terms.append(py::make_tuple(to_py(t.value), reps(t.reps)));
  d["terms"] = terms;
  return d;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple class_tuple(const ApTuple& t) { return py::make_tuple(to_py(t[0]), to_py(t[1]), to_py(t[2]), to_py(t[3])); }

py::dict sweep_dict(const SweepReport& r) {
  py::dict d;
  py::list hits, unclassified, witnessed, missing;
  for (const auto& h : r.hits) {
    auto p = progression(h.prog);
    p["a"] = h.a;
    p["b"] = h.b;
    p["maximal"] = h.maximal;
    if (h.entry) p["class"] = std::string(to_string(h.entry->kind));
    hits.append(p);
  }
  for (const auto& t : r.unclassified) unclassified.append(class_tuple(t));
  for (const auto& e : r.witnessed) witnessed.append(class_tuple(e.tuple));
  for (const auto& e : r.missing) missing.append(class_tuple(e.tuple));
  d["pairs"] = r.pairs;
  d["hits"] = hits;
  d["unclassified"] = unclassified;
  d["witnessed"] = witnessed;
  d["missing"] = missing;
  d["ok"] = r.ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arithmetic progressions in S_{a,b} = {a^x + b^y}";
  m.attr("__version__") = version();

  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("power_exponent", [](const py::int_& n, const py::int_& base) { return power_exponent(from_py(n), from_py(base)); },
        py::arg("n"), py::arg("base"));
  m.def("ord_p", [](const py::int_& n, const py::int_& p) { return ord_p(from_py(n), from_py(p)); }, py::arg("n"),
        py::arg("p"));
  m.def(
      "smooth_enumerate",
      [](std::vector<std::uint64_t> primes, const py::int_& limit) {
        py::list out;
        for (auto v : smooth_enumerate(PrimeSet(std::move(primes)), limit_from_py(limit))) out.append(to_py(v));
        return out;
      },
      py::arg("primes"), py::arg("limit"));

  m.def("representations", [](const py::int_& a, const py::int_& b, const py::int_& n) {
    return reps(representations(params(a, b), from_py(n)));
  });
  m.def("contains", [](const py::int_& a, const py::int_& b, const py::int_& n) {
    return contains(params(a, b), from_py(n));
  });
  m.def("enumerate", [](const py::int_& a, const py::int_& b, const py::int_& limit) {
    py::list out;
    for (const auto& e : enumerate(params(a, b), from_py(limit))) out.append(py::make_tuple(to_py(e.value), reps(e.reps)));
    return out;
  });

  m.def(
      "find_progressions",
      [](const py::int_& a, const py::int_& b, unsigned k, const py::int_& limit, unsigned threads) {
        const auto r = find_progressions(params(a, b), k, limit_from_py(limit), threads);
        py::list out;
        for (std::size_t i = 0; i < r.progressions.size(); ++i) {
          auto d = progression(r.progressions[i]);
          d["maximal"] = static_cast<bool>(r.maximal[i]);
          out.append(d);
        }
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("limit"), py::arg("threads") = 1);
  m.def(
      "count_3term",
      [](const py::int_& a, const py::int_& b, std::vector<py::int_> limits) {
        std::vector<u128> ls;
        for (const auto& l : limits) ls.push_back(limit_from_py(l));
        const auto r = count_3term_stable(params(a, b), ls);
        py::list rows;
        for (const auto& row : r.rows) rows.append(py::make_tuple(to_py(row.limit), row.windows, row.maximal));
        return py::make_tuple(rows, r.stabilized);
      },
      py::arg("a"), py::arg("b"), py::arg("limits"));

  m.def("theorem1_match", [](const py::int_& a, const py::int_& b, const py::int_& N, const py::int_& D) -> py::object {
    const auto e = theorem1_match(from_py(a), from_py(b), from_py(N), from_py(D));
    if (!e) return py::none();
    return py::make_tuple(std::string(to_string(e->kind)), e->k ? py::object(py::int_(*e->k)) : py::none());
  });
  m.def(
      "sweep",
      [](std::uint64_t a_max, std::uint64_t b_max, unsigned k, const py::int_& limit, unsigned threads) {
        const SweepConfig cfg{a_max, b_max, limit_from_py(limit), k};
        cfg.validate();
        if (k == 5) return sweep_dict(verify_theorem1(cfg, threads));
        if (k >= 6) return sweep_dict(verify_corollary(cfg, threads));
        SweepReport r;
        r.config = cfg;
        r.pairs = sweep_pairs(cfg).size();
        r.hits = sweep_grid(cfg, threads);
        r.ok = true;
        return sweep_dict(r);
      },
      py::arg("a_max"), py::arg("b_max"), py::arg("k"), py::arg("limit"), py::arg("threads") = 1);

  m.def(
      "deweger_3term",
      [](std::vector<std::uint64_t> primes, const py::int_& z_limit) {
        py::list out;
        for (const auto& t : deweger_3term(PrimeSet(std::move(primes)), limit_from_py(z_limit)))
          out.append(py::make_tuple(to_py(t.x), to_py(t.y), to_py(t.z)));
        return out;
      },
      py::arg("primes") = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}, py::arg("z_limit"));
  m.def(
      "bajpai_bennett_5term",
      [](unsigned alpha_max, unsigned beta_max, std::uint64_t value_max) {
        py::list out;
        for (const auto& s : bajpai_bennett_5term({alpha_max, beta_max, value_max})) {
          py::list terms;
          for (const auto& t : s.terms) terms.append(t.sign * static_cast<std::int64_t>(t.magnitude));
          out.append(py::tuple(terms));
        }
        return out;
      },
      py::arg("alpha_max") = 19, py::arg("beta_max") = 12, py::arg("value_max") = 531441);
  m.def(
      "lemma21_solve",
      [](std::uint64_t b, unsigned x_max, unsigned alpha_max, unsigned beta_max) {
        py::list out;
        for (const auto& s : lemma21_solve(b, x_max, alpha_max, beta_max))
          out.append(py::make_tuple(s.x, s.y, s.alpha, s.beta, std::string(to_string(lemma21_classify(s)))));
        return out;
      },
      py::arg("b"), py::arg("x_max") = 8, py::arg("alpha_max") = 30, py::arg("beta_max") = 20);

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : Registry::builtin().checks()) ids.push_back(c.id);
    return ids;
  });
  m.def(
      "run_check",
      [](const std::string& id, const std::string& registry) {
        if (registry.empty()) return json_to_py(to_json(run_check(Registry::builtin(), id)));
        return json_to_py(to_json(run_check(Registry::load(registry), id)));
      },
      py::arg("id"), py::arg("registry") = "");

  m.def(
      "family",
      [](const std::string& id, std::map<std::string, std::int64_t> values) {
        auto fid = parse_family_id(id);
        if (!fid) throw ContractError("unknown family '" + id + "'");
        FamilySpec spec{*fid, {values.begin(), values.end()}};
        const auto g = generate(spec);
        auto d = progression(g.prog);
        d["a"] = to_py(g.params.a());
        d["b"] = to_py(g.params.b());
        d["verified"] = verify(g.prog, g.params);
        return d;
      },
      py::arg("id"), py::arg("params"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
