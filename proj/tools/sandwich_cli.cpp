// sandwich: command-line front end.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/forms.hpp"
#include "sandwich/io.hpp"
#include "sandwich/suites.hpp"

using namespace sandwich;
using io::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kIncomplete = 3;

struct RunConfig {
  std::string case_tag = "b";
  int l = 0;
  std::string ring = "z4";
  std::string sigma = "(2),(0)";
  std::string target;
  std::string ideal = "(2)";
  std::uint64_t seed = 1;
  int budget = 200;
  int samples = 50;
  int transporter = 0;
  int values = 1;
  int length = 6;
  bool weights = false;
  std::string in, out, extra, config;
  std::vector<std::string> gens;
};

json config_json(const RunConfig& c) {
  json j{{"case", c.case_tag}, {"l", c.l},        {"ring", c.ring},         {"sigma", c.sigma},
         {"target", c.target}, {"ideal", c.ideal}, {"seed", c.seed},         {"budget", c.budget},
         {"samples", c.samples}, {"transporter", c.transporter}, {"values", c.values}, {"length", c.length}};
  if (!c.extra.empty()) j["extra"] = c.extra;
  if (!c.gens.empty()) j["gen"] = c.gens;
  if (!c.in.empty()) j["in"] = c.in;
  return j;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Report {
  json config;
  json suites = json::array();
  json witnesses = json::array();
  json result = json::object();
  bool pass = true;
  bool incomplete = false;

  void add(const SuiteResult& r) {
    suites.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"checks", r.checks},
                      {"counterexample", r.pass ? json(nullptr) : json(r.counterexample)}});
    pass = pass && r.pass;
  }
  void add(const std::vector<SuiteResult>& rs) {
    for (const auto& r : rs) add(r);
  }
};

ModelPtr build_model(const RunConfig& c) {
  CaseTag tag = parse_case_tag(c.case_tag);
  if (tag == CaseTag::a && (c.l < 5 || c.l > 10)) throw UsageError("case a needs 5 <= l <= 10");
  return Model::build(tag, c.l);
}

std::vector<GroupElement> load_extra(const Model& m, const Ring& ring, const RunConfig& c) {
  std::vector<GroupElement> out;
  if (!c.extra.empty()) {
    json j = json::parse(io::read_file(c.extra));
    const json& list = j.is_object() && j.contains("generators") ? j.at("generators") : j;
    if (!list.is_array()) throw UsageError("extra file must hold an array of generators");
    for (const json& g : list) out.push_back(io::element_from_json(m, ring, g, "extra" + std::to_string(out.size())));
  }
  for (const std::string& g : c.gens) out.push_back(io::generator_from_string(m, ring, g, "extra" + std::to_string(out.size())));
  return out;
}

int cmd_info(const RunConfig& c, Report& rep) {
  ModelPtr m = build_model(c);
  const RootSystem& rs = m->rs();
  const WeightModule& wm = m->wm();
  json comps = json::array();
  for (int i = 0; i < wm.ncomponents(); ++i) comps.push_back(wm.component_members(i).size());
  json& r = rep.result;
  r["name"] = rs.name();
  r["roots"] = rs.size();
  r["delta"] = rs.delta().size();
  r["omega_plus"] = rs.omega_plus().size();
  r["omega_minus"] = rs.omega_minus().size();
  r["max_root"] = rs.root(rs.max_root());
  r["alpha1_vertex"] = rs.alpha1_vertex() + 1;
  r["alpha2_vertex"] = rs.alpha2_vertex() + 1;
  r["weights"] = wm.dim();
  r["components"] = comps;
  r["type"] = m->type() == CaseType::first ? "first" : "second";
  r["diameter"] = wm.diameter();
  if (c.weights) {
    json ws = json::array();
    for (int i = 0; i < wm.dim(); ++i) ws.push_back({{"index", i}, {"coords", wm.weight(i)}, {"component", wm.component(i)}});
    r["weight_list"] = ws;
  }
  return kPass;
}

int cmd_lemmas(const RunConfig& c, Report& rep) {
  ModelPtr m = build_model(c);
  rep.add(lemma_suite(*m));
  rep.add(steinberg_suite(*m, Ring::parse(c.ring), c.seed, c.values));
  return rep.pass ? kPass : kFail;
}

int cmd_relcheck(const RunConfig& c, Report& rep) {
  ModelPtr m = build_model(c);
  rep.add(steinberg_suite(*m, Ring::parse(c.ring), c.seed, c.values));
  return rep.pass ? kPass : kFail;
}

int cmd_forms(const RunConfig& c, Report& rep) {
  ModelPtr m = build_model(c);
  if (m->type() == CaseType::first) {
    rep.result["forms"] = "not applicable: first type";
    return kPass;
  }
  BilinearForm h = build_bilinear(*m);
  PiForm pf = build_pi_form(*m, c.seed);
  json q = json::array();
  for (const auto& [k, v] : pf.q.coeffs) q.push_back({k.first, k.second, v});
  rep.result["h_signs"] = h.eps;
  rep.result["q"] = q;
  rep.result["mu1"] = pf.mu1;
  rep.result["path"] = pf.path;
  rep.result["square"] = pf.square.members;
  rep.add(forms_suite(*m, Ring::parse(c.ring), c.samples, c.seed));
  return rep.pass ? kPass : kFail;
}

int cmd_decompose(RunConfig c, Report& rep) {
  if (c.in.empty()) throw UsageError("decompose needs --in");
  json j = json::parse(io::read_file(c.in));
  if (j.contains("case")) c.case_tag = j.at("case").get<std::string>();
  if (j.contains("l")) c.l = j.at("l").get<int>();
  if (!j.contains("ring")) j["ring"] = c.ring;
  ModelPtr m = build_model(c);
  GroupElement g = m->from_matrix(io::matrix_from_json(*m, j));
  ParabolicProfile p = profile(*m, g);
  rep.result["profile"] = {{"P", p.P}, {"Pminus", p.Pminus}, {"L", p.L}, {"P_lambda1", p.P_lambda1},
                           {"Pminus_lambda1", p.Pminus_lambda1}};
  if (!g(0, 0).is_unit()) {
    rep.result["decomposition"] = "corner entry is not a unit";
    return kFail;
  }
  CMDecomposition d = chevalley_matsumoto(*m, g);
  rep.result["v"] = io::matrix_to_json(*m, d.v.mat)["rows"];
  rep.result["g1"] = io::matrix_to_json(*m, d.g1.mat)["rows"];
  rep.result["u"] = io::matrix_to_json(*m, d.u.mat)["rows"];
  SuiteResult r{"round_trip"};
  r.expect(d.v.mat * d.g1.mat * d.u.mat == g.mat, "v g1 u != g");
  rep.add(r);
  return rep.pass ? kPass : kFail;
}

int cmd_normcheck(const RunConfig& c, Report& rep) {
  ModelPtr m = build_model(c);
  Ring ring = Ring::parse(c.ring);
  rep.add(normalizer_suite(*m, SigmaPair::parse(ring, c.sigma), c.samples, c.transporter, c.seed));
  return rep.pass ? kPass : kFail;
}

int run_level(const RunConfig& c, Report& rep, bool experiment) {
  ModelPtr m = build_model(c);
  Ring ring = Ring::parse(c.ring);
  std::vector<GroupElement> extra = load_extra(*m, ring, c);
  std::optional<SigmaPair> target;
  if (!c.target.empty()) target = SigmaPair::parse(ring, c.target);
  LevelOptions opt;
  opt.seed = c.seed;
  opt.budget = c.budget;
  opt.samples = c.samples;
  opt.word_length = c.length;
  LevelCertificate cert = level_certificate(*m, ring, extra, target, opt);
  for (const Witness& w : cert.witnesses) rep.witnesses.push_back(io::witness_to_json(*m, w));
  json& r = rep.result;
  r["lower"] = io::sigma_to_json(cert.lower);
  if (target) r["target"] = io::sigma_to_json(*target);
  r["verdict"] = verdict_name(cert.verdict);
  r["rounds"] = cert.rounds;
  r["samples_checked"] = cert.samples_checked;
  if (!cert.escape.empty()) r["escape"] = cert.escape;
  if (experiment) {
    r["sandwich"] = cert.escape.empty()
                        ? "E(Phi,Delta,R," + cert.lower.to_string() + ") <= H <= N(E(Phi,Delta,R," + cert.lower.to_string() + "))"
                        : "undetermined";
    SuiteResult s{"sampled_normalizer"};
    s.checks = static_cast<std::size_t>(cert.samples_checked);
    if (!cert.escape.empty()) {
      s.pass = false;
      s.counterexample = cert.escape;
    }
    rep.suites.push_back({{"name", s.name}, {"pass", s.pass}, {"checks", s.checks},
                          {"counterexample", s.pass ? json(nullptr) : json(s.counterexample)}});
  }
  switch (cert.verdict) {
    case LevelVerdict::reached:
    case LevelVerdict::consistent:
      return kPass;
    case LevelVerdict::exceeds:
      rep.pass = false;
      return kFail;
    case LevelVerdict::incomplete:
      rep.incomplete = true;
      return kIncomplete;
  }
  return kFail;
}

int cmd_selftest(const RunConfig& c, Report& rep) {
  const std::uint64_t s = c.seed;
  const Ring z4 = Ring::parse("z4"), z8 = Ring::parse("z8"), z9 = Ring::parse("z9");
  ModelPtr a5 = Model::build(CaseTag::a, 5), a6 = Model::build(CaseTag::a, 6);
  ModelPtr b = Model::build(CaseTag::b), cc = Model::build(CaseTag::c);
  for (const ModelPtr& m : {a5, a6, b, cc}) rep.add(lemma_suite(*m));
  rep.add(steinberg_suite(*b, z8, s));
  rep.add(root_type_suite(*b, z8, 50, s));
  rep.add(forms_suite(*a6, z9, 100, s));
  rep.add(matsumoto_suite(*b, z8, 20, s));
  rep.add(normalizer_suite(*b, SigmaPair::parse(z4, "(2),(0)"), 50, 5, s));
  rep.add(extraction_suite(*b, z4, 10, s));
  rep.add(ideal_bounds_suite(*b, SigmaPair::parse(z4, "(2),(0)"), 20, s));
  rep.add(reduction_suite(*b, z4, Ideal::parse(z4, "(2)"), s));
  return rep.pass ? kPass : kFail;
}

void load_config_file(RunConfig& c, const CLI::App& sub) {
  if (c.config.empty()) return;
  json j = json::parse(io::read_file(c.config));
  auto take = [&](const char* key, auto& field) {
    if (j.contains(key) && sub.get_option(std::string("--") + key)->count() == 0) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  take("case", c.case_tag);
  take("l", c.l);
  take("ring", c.ring);
  take("sigma", c.sigma);
  take("target", c.target);
  take("ideal", c.ideal);
  take("seed", c.seed);
  take("budget", c.budget);
  take("samples", c.samples);
  take("transporter", c.transporter);
  take("values", c.values);
  take("length", c.length);
  take("extra", c.extra);
  take("gen", c.gens);
  take("in", c.in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overgroups of subsystem subgroups in Chevalley groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, Report&);
  };
  std::vector<Cmd> cmds{
      {"info", "root and weight data of a case", cmd_info},
      {"lemmas", "combinatorial lemma suite and Steinberg relations", cmd_lemmas},
      {"relcheck", "Steinberg relation suite", cmd_relcheck},
      {"forms", "invariant bilinear form and quadratic form", cmd_forms},
      {"decompose", "Chevalley-Matsumoto decomposition of a matrix", [](const RunConfig& c, Report& r) { return cmd_decompose(c, r); }},
      {"normcheck", "normalizer and transporter conditions on sampled elements", cmd_normcheck},
      {"level", "level certificate for <E(Delta,R), extra>", [](const RunConfig& c, Report& r) { return run_level(c, r, false); }},
      {"experiment", "level certificate plus sandwich check", [](const RunConfig& c, Report& r) { return run_level(c, r, true); }},
      {"selftest", "every acceptance suite at reduced sizes", cmd_selftest},
  };
  std::vector<CLI::App*> subs;
  for (const Cmd& cmd : cmds) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--case", cfg.case_tag, "a, b or c");
    sub->add_option("--l", cfg.l, "rank for case a");
    sub->add_option("--ring", cfg.ring, "ring, e.g. z4, z12, f2t2, z8*f3t2");
    sub->add_option("--sigma", cfg.sigma, "level pair, e.g. \"(2),(0)\"");
    sub->add_option("--target", cfg.target, "expected level");
    sub->add_option("--ideal", cfg.ideal, "ideal for reductions");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--budget", cfg.budget, "random rounds");
    sub->add_option("--samples", cfg.samples, "sample count");
    sub->add_option("--transporter", cfg.transporter, "samples given the full transporter check");
    sub->add_option("--values", cfg.values, "ring values per root pair");
    sub->add_option("--length", cfg.length, "word length");
    sub->add_option("--extra", cfg.extra, "JSON file with extra generators");
    sub->add_option("--gen", cfg.gens, "extra generator ROOT:XI, e.g. max:2");
    sub->add_option("--in", cfg.in, "input matrix file");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--config", cfg.config, "JSON config file; flags override it");
    sub->add_flag("--weights", cfg.weights, "list the weights");
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  std::size_t which = 0;
  while (!subs[which]->parsed()) ++which;
  Report rep;
  int code;
  try {
    load_config_file(cfg, *subs[which]);
    rep.config = config_json(cfg);
    rep.config["command"] = cmds[which].name;
    rep.config["hash"] = fnv1a(rep.config.dump());
    code = cmds[which].run(cfg, rep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  json out{{"config", rep.config}, {"suites", rep.suites}, {"witnesses", rep.witnesses}};
  if (!rep.result.empty()) out["result"] = rep.result;
  std::string text = out.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    f << text;
  }
  return code;
}
