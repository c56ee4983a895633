#include <string>

#include "doctest.h"
#include "sandwich/forms.hpp"
#include "sandwich/rng.hpp"

using namespace sandwich;

namespace {

Matrix transpose(const Matrix& a) {
  Matrix t(a.ring(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) t.at(i, j) = a.at(j, i);
  return t;
}

std::vector<RingElem> column(const Matrix& g, int j) {
  std::vector<RingElem> v;
  for (int i = 0; i < g.dim(); ++i) v.push_back(g.elem(i, j));
  return v;
}

}  // namespace

TEST_CASE("h is invariant under every root element") {
  for (const char* ring : {"z9", "z8"}) {
    const Ring r = Ring::parse(ring);
    for (ModelPtr m : {Model::build(CaseTag::a, 6), Model::build(CaseTag::c)}) {
      BilinearForm h = build_bilinear(*m);
      Matrix H = h.matrix(*m, r);
      for (int a = 0; a < m->rs().size(); ++a)
        for (int x : {1, 2, 5}) {
          Matrix g = m->root_elt(a, r.from_int(x)).mat;
          CHECK(transpose(g) * H * g == H);
        }
      for (int i = 0; i < m->dim(); ++i) {
        CHECK((h.eps[i] == 1 || h.eps[i] == -1));
        CHECK(h.opp[h.opp[i]] == i);
      }
    }
  }
}

TEST_CASE("h is skew for D6 and E7, symmetric for D8") {
  for (ModelPtr m : {Model::build(CaseTag::a, 6), Model::build(CaseTag::c)}) {
    BilinearForm h = build_bilinear(*m);
    for (int i = 0; i < m->dim(); ++i) CHECK(h.eps[h.opp[i]] == -h.eps[i]);
  }
  ModelPtr d8 = Model::build(CaseTag::a, 8);
  BilinearForm h = build_bilinear(*d8);
  for (int i = 0; i < d8->dim(); ++i) CHECK(h.eps[h.opp[i]] == h.eps[i]);
}

TEST_CASE("pi-form shape and vanishing on orbit columns") {
  for (ModelPtr m : {Model::build(CaseTag::a, 6), Model::build(CaseTag::c)}) {
    PiForm pf = build_pi_form(*m, 1);
    const int top = 0, bottom = m->wm().negative(0);
    CHECK(!pf.q.has_diagonal());
    std::int64_t c = pf.q.coeff(std::min(top, bottom), std::max(top, bottom));
    CHECK((c == 1 || c == -1));
    for (const auto& [k, v] : pf.q.coeffs) {
      CHECK(k.first < k.second);
      CHECK(v != 0);
    }

    // over the integers: columns of short words
    const Ring z = Ring::integers();
    Rng rng(17);
    for (int s = 0; s < 60; ++s) {
      GroupElement g = m->identity(z);
      for (int i = 0; i < 5; ++i) m->right_mul(g, rng.below(m->rs().size()), z.from_int(rng.below(5) - 2));
      std::vector<std::int64_t> v;
      for (const RingElem& x : column(g.mat, 0)) v.push_back(std::stoll(x.to_string()));
      CHECK(pf.q.eval_int(v) == 0);
    }
    // over z9, on every column in the orbit of lambda0 and not on generic vectors
    const Ring z9 = Ring::parse("z9");
    for (int s = 0; s < 60; ++s) {
      GroupElement g = m->identity(z9);
      for (int i = 0; i < 12; ++i) m->right_mul(g, rng.below(m->rs().size()), z9.from_int(rng.below(9)));
      CHECK(pf.q(column(g.mat, 0)).is_zero());
    }
    std::vector<RingElem> e(m->dim(), z9.zero());
    e[top] = z9.one();
    e[bottom] = z9.one();
    CHECK_FALSE(pf.q(e).is_zero());
  }
}

TEST_CASE("bilinear form on vectors") {
  ModelPtr m = Model::build(CaseTag::c);
  const Ring r = Ring::parse("z9");
  BilinearForm h = build_bilinear(*m);
  Rng rng(3);
  std::vector<RingElem> u, v;
  for (int i = 0; i < m->dim(); ++i) {
    u.push_back(r.from_int(rng.below(9)));
    v.push_back(r.from_int(rng.below(9)));
  }
  GroupElement g = m->identity(r);
  for (int i = 0; i < 20; ++i) m->right_mul(g, rng.below(m->rs().size()), r.from_int(rng.below(9)));
  CHECK(h(m->act_on_vector(g, u), m->act_on_vector(g, v)) == h(u, v));
}
