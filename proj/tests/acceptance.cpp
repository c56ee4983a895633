// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sandwich/suites.hpp"

using namespace sandwich;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;

  void add(const SuiteResult& r) {
    checks += r.checks;
    if (!r.pass && pass) {
      pass = false;
      detail = r.name + ": " + r.counterexample;
    }
  }
  void add(const std::vector<SuiteResult>& rs) {
    for (const auto& r : rs) add(r);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no time limit
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::uint64_t seed = 20240601;
  const Ring z4 = Ring::parse("z4"), z8 = Ring::parse("z8"), z9 = Ring::parse("z9"), f2t2 = Ring::parse("f2t2");
  ModelPtr a5 = Model::build(CaseTag::a, 5), a6 = Model::build(CaseTag::a, 6);
  ModelPtr b = Model::build(CaseTag::b), c = Model::build(CaseTag::c);
  const std::vector<ModelPtr> all{a5, a6, b, c};

  std::vector<Criterion> crit{
      {1, "combinatorial lemmas, a5 a6 b c", 10,
       [&](Outcome& o) {
         for (const auto& m : all) o.add(lemma_suite(*m));
       }},
      {2, "Steinberg relations, E7 over z8 z9 f2t2", 60,
       [&](Outcome& o) {
         for (const Ring& r : {z8, z9, f2t2}) o.add(steinberg_suite(*c, r, seed));
       }},
      {3, "root-type identities, 500 per case over z8", 0,
       [&](Outcome& o) {
         for (const auto& m : all) o.add(root_type_suite(*m, z8, 500, seed));
       }},
      {4, "invariant forms, a6 and c, 1000 columns over Z and z9", 120,
       [&](Outcome& o) {
         for (const auto& m : {a6, c}) o.add(forms_suite(*m, z9, 1000, seed));
       }},
      {5, "Chevalley-Matsumoto round trip, 200 per case over z8", 0,
       [&](Outcome& o) {
         for (const auto& m : all) o.add(matsumoto_suite(*m, z8, 200, seed));
       }},
      {6, "normalizer and transporter, b and c over z4", 0,
       [&](Outcome& o) {
         for (const auto& m : {b, c})
           for (const char* s : {"(2),(0)", "(2),(2)"}) o.add(normalizer_suite(*m, SigmaPair::parse(z4, s), 500, 50, seed));
       }},
      {7, "extraction soundness, 100 per route", 0,
       [&](Outcome& o) {
         for (const auto& m : {b, c}) o.add(extraction_suite(*m, z4, 100, seed));
       }},
      {8, "ideal bounds, 200 root-type members, b and c over z4", 0,
       [&](Outcome& o) {
         for (const auto& m : {b, c})
           for (const char* s : {"(2),(0)", "(0),(2)"}) o.add(ideal_bounds_suite(*m, SigmaPair::parse(z4, s), 200, seed));
       }},
      {9, "level reduction from z4 modulo (2)", 0,
       [&](Outcome& o) {
         for (const auto& m : {b, c}) o.add(reduction_suite(*m, z4, Ideal::parse(z4, "(2)"), seed));
       }},
  };

  bool all_pass = true;
  for (const Criterion& k : crit) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      k.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (k.limit_s > 0 && s > k.limit_s && o.pass) {
      o.pass = false;
      o.detail = "over the time limit of " + std::to_string(static_cast<int>(k.limit_s)) + " s";
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %d: %s  [%s] checks=%zu time=%.2fs%s%s\n", k.id, o.pass ? "PASS" : "FAIL", k.title.c_str(),
                o.checks, s, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
