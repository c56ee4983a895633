#include "doctest.h"
#include "sandwich/errors.hpp"
#include "sandwich/extraction.hpp"
#include "sandwich/rng.hpp"
#include "sandwich/suites.hpp"

using namespace sandwich;

TEST_CASE("extraction from P: a witness exactly when a unipotent coordinate leaves the ideal") {
  const Ring r = Ring::parse("z8");
  Rng rng(21);
  auto elems = r.elements();
  auto ideals = all_ideals(r);
  for (ModelPtr m : {Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    const RootSystem& rs = m->rs();
    for (int side : {1, -1}) {
      for (int s = 0; s < 25; ++s) {
        const Ideal& ideal = ideals[rng.below(static_cast<int>(ideals.size()))];
        if (ideal.is_unit()) continue;
        auto iel = ideal.elements();
        std::vector<RingElem> xi(rs.size(), r.zero());
        bool outside = false;
        for (int b : unipotent_roots(*m, 0, side)) {
          xi[b] = rng.below(4) == 0 ? elems[rng.below(static_cast<int>(elems.size()))]
                                    : iel[rng.below(static_cast<int>(iel.size()))];
          outside = outside || !ideal.contains(xi[b]);
        }
        GroupElement l = m->identity(r);
        for (int i = 0; i < 6; ++i)
          m->right_mul(l, rs.delta()[rng.below(static_cast<int>(rs.delta().size()))], elems[rng.below(8)]);
        GroupElement g = ensure_word(m->mul(unipotent_from_coords(*m, r, xi, 0, side), l));
        Extraction e = extract_from_P(*m, g, ideal, side);
        CAPTURE(side);
        CAPTURE(ideal.to_string());
        REQUIRE(e.witness.has_value() == outside);
        if (!outside) continue;
        const Witness& w = *e.witness;
        CHECK(w.root == (side > 0 ? rs.max_root() : rs.neg(rs.max_root())));
        CHECK_FALSE(ideal.contains(w.value));
        CHECK(check_witness(*m, r, w));
        CHECK(replay(*m, r, w.word).mat == m->root_elt(w.root, w.value).mat);
      }
    }
  }
}

TEST_CASE("extraction routes on generated instances") {
  const Ring r = Ring::parse("z4");
  ModelPtr m = Model::build(CaseTag::b);
  for (const SuiteResult& s : extraction_suite(*m, r, 15, 3)) {
    CAPTURE(s.name);
    CAPTURE(s.counterexample);
    CHECK(s.pass);
    CHECK(s.checks > 0);
  }
}

TEST_CASE("nilpotent step leaves P^-") {
  const Ring r = Ring::parse("z4");
  ModelPtr m = Model::build(CaseTag::c);
  const Ideal b = Ideal::parse(r, "(2)");
  Rng rng(8);
  int tried = 0;
  for (int s = 0; s < 40; ++s) {
    GroupElement g = m->identity(r);
    for (int i = 0; i < 5; ++i) m->right_mul(g, rng.below(m->rs().size()), r.from_int(2));
    if (in_Pminus(*m, g)) continue;
    ++tried;
    NilpotentStep st = nilpotent_step(*m, g, b);
    CHECK(in_P(*m, st.h, st.lambda1));
    CHECK_FALSE(in_Pminus(*m, st.h));
    CHECK(m->wm().component(st.lambda1) == 1);
    CHECK(st.h.mat == g.mat * m->root_elt(st.alpha, r.one()).mat * g.inv);
  }
  CHECK(tried > 10);
}

TEST_CASE("words replay and reject bad projections") {
  const Ring r = Ring::parse("z4");
  ModelPtr m = Model::build(CaseTag::b);
  GroupElement x = m->root_elt(m->rs().neg(m->rs().max_root()), r.one());
  Word w = word::levi(word::input("x", x), 0, 1, "test");
  CHECK_THROWS_AS(replay(*m, r, w), DecompositionError);
  Word c = word::comm(word::root(0, r.one()), word::root(1, r.from_int(3)));
  CHECK(replay(*m, r, c).mat == m->commutator(m->root_elt(0, r.one()), m->root_elt(1, r.from_int(3))).mat);
  CHECK(word::size(c) == 3);
}
