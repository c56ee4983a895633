#include "doctest.h"
#include "sandwich/level.hpp"
#include "sandwich/overgroup.hpp"
#include "sandwich/rng.hpp"

using namespace sandwich;

namespace {

GroupElement random_word(const Model& m, const Ring& r, const std::vector<int>& roots, int len, Rng& rng) {
  auto elems = r.elements();
  GroupElement g = m.identity(r);
  for (int i = 0; i < len; ++i)
    m.right_mul(g, roots[rng.below(static_cast<int>(roots.size()))], elems[rng.below(static_cast<int>(elems.size()))]);
  return g;
}

std::vector<int> all_roots(const Model& m) {
  std::vector<int> v(m.rs().size());
  for (int i = 0; i < m.rs().size(); ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("parabolic membership of root elements") {
  const Ring r = Ring::parse("z8");
  for (ModelPtr m : {Model::build(CaseTag::a, 5), Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    const RootSystem& rs = m->rs();
    for (int a = 0; a < rs.size(); ++a) {
      GroupElement x = m->root_elt(a, r.one());
      int s = rs.in_delta(a) ? 0 : rs.omega_sign(a);
      CHECK(in_P(*m, x) == (s >= 0));
      CHECK(in_Pminus(*m, x) == (s <= 0));
      CHECK(in_L(*m, x) == (s == 0));
    }
    // x_alpha lies in P_lambda iff lambda + alpha is not a weight
    for (int lam = 0; lam < m->dim(); lam += 3)
      for (int a = 0; a < rs.size(); a += 2) CHECK(in_P(*m, m->root_elt(a, r.one()), lam) == (m->wm().shift(lam, a) < 0));
  }
}

TEST_CASE("Chevalley-Matsumoto factors have the stated profiles") {
  const Ring r = Ring::parse("z8");
  Rng rng(11);
  for (ModelPtr m : {Model::build(CaseTag::a, 6), Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    int done = 0;
    for (int s = 0; s < 200 && done < 40; ++s) {
      GroupElement g = random_word(*m, r, all_roots(*m), 10, rng);
      if (!g(0, 0).is_unit()) {
        CHECK_THROWS(chevalley_matsumoto(*m, g));
        continue;
      }
      ++done;
      CMDecomposition d = chevalley_matsumoto(*m, g);
      CHECK(d.v.mat * d.g1.mat * d.u.mat == g.mat);
      CHECK(in_Pminus(*m, d.v));
      CHECK(in_L(*m, d.g1));
      CHECK(in_P(*m, d.u));
      auto cu = unipotent_coords(*m, d.u);
      CHECK(unipotent_from_coords(*m, r, cu).mat == d.u.mat);
      auto cv = unipotent_coords(*m, d.v, 0, -1);
      CHECK(unipotent_from_coords(*m, r, cv, 0, -1).mat == d.v.mat);
    }
    CHECK(done >= 20);
  }
}

TEST_CASE("Levi-unipotent split on both sides") {
  const Ring r = Ring::parse("z4*f3t2");
  Rng rng(2);
  ModelPtr m = Model::build(CaseTag::c);
  const RootSystem& rs = m->rs();
  for (int side : {1, -1}) {
    std::vector<int> roots = rs.delta();
    for (int a : side > 0 ? rs.omega_plus() : rs.omega_minus()) roots.push_back(a);
    for (int s = 0; s < 20; ++s) {
      GroupElement g = random_word(*m, r, roots, 12, rng);
      LeviSplit sp = levi_unipotent_split(*m, g, 0, side);
      CHECK(sp.u.mat * sp.l.mat == g.mat);
      CHECK(in_L(*m, sp.l));
      CHECK(unipotent_from_coords(*m, r, unipotent_coords(*m, sp.u, 0, side), 0, side).mat == sp.u.mat);
    }
  }
}

TEST_CASE("root-type elements") {
  const Ring r = Ring::parse("z8");
  Rng rng(4);
  for (ModelPtr m : {Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    const RootSystem& rs = m->rs();
    for (int s = 0; s < 30; ++s) {
      GroupElement g = random_word(*m, r, all_roots(*m), 8, rng);
      GroupElement x = m->conj_root(g, rng.below(rs.size()), r.one());
      CHECK_FALSE(root_type_violation(*m, x).has_value());
      CHECK(distance_vanishing(*m, x));
    }
    // x_a(1) x_{-a}(1) fixes no line of root type: (g - e)^2 != 0
    GroupElement y = m->mul(m->root_elt(0, r.one()), m->root_elt(rs.neg(0), r.one()));
    CHECK(root_type_violation(*m, y).has_value());
  }
}

TEST_CASE("level membership and normalizer conditions") {
  const Ring r = Ring::parse("z4");
  Rng rng(9);
  for (ModelPtr m : {Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    for (const char* text : {"(0),(0)", "(2),(0)", "(2),(2)", "(1),(2)"}) {
      SigmaPair sigma = SigmaPair::parse(r, text);
      for (int s = 0; s < 20; ++s) {
        GroupElement g = sample_word(*m, r, sigma_generators(*m, sigma), 10, rng);
        CHECK(in_G_sigma(*m, g, sigma));
        CHECK(in_normalizer(*m, g, sigma));
        GroupElement n = sample_normalizer_element(*m, sigma, 6, rng);
        CHECK(in_normalizer(*m, n, sigma));
      }
    }
    // x_delta(1) is outside G(sigma) for sigma = ((2),(0)) and does not normalize it
    SigmaPair sigma = SigmaPair::parse(r, "(2),(0)");
    GroupElement x = m->root_elt(m->rs().max_root(), r.one());
    CHECK_FALSE(in_G_sigma(*m, x, sigma));
    CHECK_FALSE(in_normalizer(*m, m->root_elt(m->rs().neg(m->rs().max_root()), r.one()), sigma));
  }
}

TEST_CASE("distance vanishing on congruence elements with square-zero ideal") {
  const Ring r = Ring::parse("z4*f2t2");
  Rng rng(6);
  ModelPtr m = Model::build(CaseTag::b);
  for (const Ideal& b : all_ideals(r)) {
    if (b.is_zero() || !b.square().is_zero()) continue;
    auto bel = b.elements();
    for (int s = 0; s < 10; ++s) {
      GroupElement g = m->identity(r);
      for (int i = 0; i < 8; ++i) m->right_mul(g, rng.below(m->rs().size()), bel[rng.below(static_cast<int>(bel.size()))]);
      CHECK(nilpotent_vanishing_check(*m, g, b));
    }
  }
}

TEST_CASE("level parsing") {
  const Ring r = Ring::parse("z8");
  SigmaPair s = SigmaPair::parse(r, "(2),(4)");
  CHECK(s.plus == Ideal::parse(r, "(2)"));
  CHECK(s.minus == Ideal::parse(r, "(4)"));
  CHECK(SigmaPair::parse(r, "(2),(0)").contains(SigmaPair::parse(r, "(4),(0)")));
  CHECK_FALSE(SigmaPair::parse(r, "(4),(0)").contains(SigmaPair::parse(r, "(2),(0)")));
  CHECK(s.reduce(Ideal::parse(r, "(2)")) == SigmaPair::zero(Ideal::parse(r, "(2)").quotient_ring()));
}
