#include "doctest.h"
#include "sandwich/level.hpp"
#include "sandwich/suites.hpp"

using namespace sandwich;

TEST_CASE("level certificates for single generators") {
  const Ring r = Ring::parse("z4");
  for (ModelPtr m : {Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    const RootSystem& rs = m->rs();
    const RingElem two = r.from_int(2);
    LevelOptions opt;
    opt.seed = 7;

    LevelCertificate none = level_certificate(*m, r, {}, std::nullopt, opt);
    CHECK(none.lower == SigmaPair::zero(r));
    CHECK(none.verdict == LevelVerdict::consistent);
    CHECK(none.witnesses.empty());

    auto extra = std::vector<GroupElement>{m->root_elt(rs.max_root(), two)};
    LevelCertificate c = level_certificate(*m, r, extra, SigmaPair::parse(r, "(2),(0)"), opt);
    CHECK(c.verdict == LevelVerdict::reached);
    for (const Witness& w : c.witnesses) CHECK(check_witness(*m, r, w));

    LevelCertificate over = level_certificate(*m, r, extra, SigmaPair::zero(r), opt);
    CHECK(over.verdict == LevelVerdict::exceeds);

    LevelCertificate open = level_certificate(*m, r, extra, std::nullopt, opt);
    CHECK(open.lower == SigmaPair::parse(r, "(2),(0)"));
    CHECK(open.verdict == LevelVerdict::consistent);

    // a Delta-conjugate of x_{-delta}(2) x_{omega}(1)
    GroupElement g = m->mul(m->root_elt(rs.neg(rs.max_root()), two), m->root_elt(rs.omega_plus()[0], r.one()));
    g = m->conjugate(m->root_elt(rs.delta()[3], r.from_int(3)), g);
    LevelCertificate both = level_certificate(*m, r, {g}, std::nullopt, opt);
    CAPTURE(both.lower.to_string());
    CAPTURE(both.escape);
    CHECK(both.lower == SigmaPair::parse(r, "(1),(2)"));
    CHECK(both.escape.empty());
  }
}

TEST_CASE("certificates are reproducible") {
  const Ring r = Ring::parse("z8");
  ModelPtr m = Model::build(CaseTag::b);
  auto extra = std::vector<GroupElement>{m->root_elt(m->rs().omega_minus()[2], r.from_int(4))};
  LevelOptions opt;
  opt.seed = 99;
  LevelCertificate a = level_certificate(*m, r, extra, std::nullopt, opt);
  LevelCertificate b = level_certificate(*m, r, extra, std::nullopt, opt);
  CHECK(a.lower == b.lower);
  CHECK(a.lower == SigmaPair::parse(r, "(0),(4)"));
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i)
    CHECK(word::to_string(*m, a.witnesses[i].word) == word::to_string(*m, b.witnesses[i].word));
}

TEST_CASE("transporter check on normalizer samples") {
  const Ring r = Ring::parse("z4");
  ModelPtr m = Model::build(CaseTag::b);
  SigmaPair sigma = SigmaPair::parse(r, "(2),(2)");
  Rng rng(1);
  for (int s = 0; s < 3; ++s) {
    GroupElement g = sample_normalizer_element(*m, sigma, 6, rng);
    TransporterResult t = transporter_check(*m, g, sigma);
    CHECK(t.pass);
    CHECK(t.checked == sigma_generators(*m, sigma).size());
  }
  // x_delta(1) does not carry x_{-delta}(2) into G(sigma)
  TransporterResult bad = transporter_check(*m, m->root_elt(m->rs().max_root(), r.one()), sigma);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("level reduction modulo (2)") {
  const Ring r = Ring::parse("z4");
  ModelPtr m = Model::build(CaseTag::b);
  SuiteResult s = reduction_suite(*m, r, Ideal::parse(r, "(2)"), 5);
  CAPTURE(s.counterexample);
  CHECK(s.pass);
}

TEST_CASE("ideal bounds") {
  const Ring r = Ring::parse("z8");
  ModelPtr m = Model::build(CaseTag::b);
  for (const char* s : {"(2),(0)", "(0),(2)", "(4),(2)"}) {
    SuiteResult res = ideal_bounds_suite(*m, SigmaPair::parse(r, s), 20, 5);
    CAPTURE(res.counterexample);
    CHECK(res.pass);
  }
}
