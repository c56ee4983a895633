#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sandwich/errors.hpp"
#include "sandwich/forms.hpp"
#include "sandwich/io.hpp"
#include "sandwich/suites.hpp"

namespace py = pybind11;
using namespace sandwich;
using io::json;

namespace {

ModelPtr model(const std::string& tag, int l) {
  CaseTag t = parse_case_tag(tag);
  if (t == CaseTag::a && (l < 5 || l > 10)) throw UsageError("case a needs 5 <= l <= 10");
  return Model::build(t, l);
}

json suites_json(const std::vector<SuiteResult>& rs) {
  json out = json::array();
  for (const auto& r : rs)
    out.push_back({{"name", r.name}, {"pass", r.pass}, {"checks", r.checks},
                   {"counterexample", r.pass ? json(nullptr) : json(r.counterexample)}});
  return out;
}

std::string info(const std::string& tag, int l) {
  ModelPtr m = model(tag, l);
  const RootSystem& rs = m->rs();
  json comps = json::array();
  for (int i = 0; i < m->wm().ncomponents(); ++i) comps.push_back(m->wm().component_members(i).size());
  json roots = json::array();
  for (int a = 0; a < rs.size(); ++a) roots.push_back(rs.root(a));
  return json{{"name", rs.name()},
              {"rank", rs.rank()},
              {"roots", roots},
              {"delta", rs.delta().size()},
              {"omega_plus", rs.omega_plus().size()},
              {"max_root", rs.root(rs.max_root())},
              {"weights", m->dim()},
              {"components", comps},
              {"type", m->type() == CaseType::first ? "first" : "second"}}
      .dump();
}

std::string lemmas(const std::string& tag, int l, const std::string& ring, std::uint64_t seed) {
  ModelPtr m = model(tag, l);
  std::vector<SuiteResult> rs = lemma_suite(*m);
  rs.push_back(steinberg_suite(*m, Ring::parse(ring), seed));
  return suites_json(rs).dump();
}

std::string root_element(const std::string& tag, int l, const std::string& ring, const std::string& gen) {
  ModelPtr m = model(tag, l);
  Ring r = Ring::parse(ring);
  return io::matrix_to_json(*m, io::generator_from_string(*m, r, gen, "x").mat).dump();
}

std::string decompose(const std::string& matrix) {
  json j = json::parse(matrix);
  ModelPtr m = model(j.at("case").get<std::string>(), j.value("l", 0));
  GroupElement g = m->from_matrix(io::matrix_from_json(*m, j));
  if (!g(0, 0).is_unit()) throw DomainError("corner entry is not a unit");
  CMDecomposition d = chevalley_matsumoto(*m, g);
  return json{{"v", io::matrix_to_json(*m, d.v.mat)},
              {"g1", io::matrix_to_json(*m, d.g1.mat)},
              {"u", io::matrix_to_json(*m, d.u.mat)}}
      .dump();
}

std::string pi_form(const std::string& tag, int l, std::uint64_t seed) {
  ModelPtr m = model(tag, l);
  if (m->type() == CaseType::first) throw DomainError("not applicable: first type");
  PiForm pf = build_pi_form(*m, seed);
  json q = json::array();
  for (const auto& [k, v] : pf.q.coeffs) q.push_back({k.first, k.second, v});
  return json{{"h_signs", build_bilinear(*m).eps}, {"q", q}, {"mu1", pf.mu1}, {"path", pf.path}}.dump();
}

std::string normcheck(const std::string& tag, int l, const std::string& ring, const std::string& sigma, int samples,
                      int transporter, std::uint64_t seed) {
  ModelPtr m = model(tag, l);
  Ring r = Ring::parse(ring);
  return suites_json({normalizer_suite(*m, SigmaPair::parse(r, sigma), samples, transporter, seed)}).dump();
}

std::string level(const std::string& tag, int l, const std::string& ring, const std::vector<std::string>& gens,
                  const std::optional<std::string>& target, std::uint64_t seed, int budget, int samples) {
  ModelPtr m = model(tag, l);
  Ring r = Ring::parse(ring);
  std::vector<GroupElement> extra;
  for (const auto& g : gens) extra.push_back(io::generator_from_string(*m, r, g, "extra" + std::to_string(extra.size())));
  LevelOptions opt;
  opt.seed = seed;
  opt.budget = budget;
  opt.samples = samples;
  std::optional<SigmaPair> t;
  if (target) t = SigmaPair::parse(r, *target);
  LevelCertificate c = level_certificate(*m, r, extra, t, opt);
  json ws = json::array();
  for (const Witness& w : c.witnesses) ws.push_back(io::witness_to_json(*m, w));
  return json{{"lower", io::sigma_to_json(c.lower)},
              {"verdict", verdict_name(c.verdict)},
              {"rounds", c.rounds},
              {"samples_checked", c.samples_checked},
              {"escape", c.escape},
              {"witnesses", ws}}
      .dump();
}

std::string selftest(std::uint64_t seed) {
  const Ring z4 = Ring::parse("z4"), z8 = Ring::parse("z8"), z9 = Ring::parse("z9");
  ModelPtr a6 = Model::build(CaseTag::a, 6), b = Model::build(CaseTag::b);
  std::vector<SuiteResult> rs = lemma_suite(*b);
  rs.push_back(steinberg_suite(*b, z8, seed));
  rs.push_back(root_type_suite(*b, z8, 20, seed));
  rs.push_back(forms_suite(*a6, z9, 20, seed));
  rs.push_back(matsumoto_suite(*b, z8, 10, seed));
  rs.push_back(normalizer_suite(*b, SigmaPair::parse(z4, "(2),(0)"), 20, 2, seed));
  for (auto& r : extraction_suite(*b, z4, 5, seed)) rs.push_back(r);
  rs.push_back(reduction_suite(*b, z4, Ideal::parse(z4, "(2)"), seed));
  return suites_json(rs).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Overgroups of subsystem subgroups in Chevalley groups";

  py::register_exception<Error>(m, "SandwichError", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("info", &info, py::arg("case"), py::arg("l") = 0);
  m.def("lemmas", &lemmas, py::arg("case"), py::arg("l") = 0, py::arg("ring") = "z8", py::arg("seed") = 1);
  m.def("root_element", &root_element, py::arg("case"), py::arg("l"), py::arg("ring"), py::arg("gen"));
  m.def("decompose", &decompose, py::arg("matrix"));
  m.def("pi_form", &pi_form, py::arg("case"), py::arg("l") = 0, py::arg("seed") = 1);
  m.def("normcheck", &normcheck, py::arg("case"), py::arg("l") = 0, py::arg("ring") = "z4",
        py::arg("sigma") = "(2),(0)", py::arg("samples") = 50, py::arg("transporter") = 0, py::arg("seed") = 1);
  m.def("level", &level, py::arg("case"), py::arg("l") = 0, py::arg("ring") = "z4",
        py::arg("gens") = std::vector<std::string>{}, py::arg("target") = std::nullopt, py::arg("seed") = 1,
        py::arg("budget") = 200, py::arg("samples") = 50);
  m.def("selftest", &selftest, py::arg("seed") = 1);
}
