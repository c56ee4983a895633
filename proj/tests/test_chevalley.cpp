#include "doctest.h"
#include "sandwich/chevalley.hpp"
#include "sandwich/rng.hpp"

using namespace sandwich;

namespace {

Matrix root_matrix(const Model& m, int a, const RingElem& xi) { return m.root_elt(a, xi).mat; }

bool is_root_element(const Model& m, const Matrix& g, int a, const RingElem& v) { return g == root_matrix(m, a, v); }

}  // namespace

TEST_CASE("root elements are unipotent, additive and match the weight shifts") {
  const Ring r = Ring::parse("z8");
  for (ModelPtr m : {Model::build(CaseTag::a, 5), Model::build(CaseTag::b), Model::build(CaseTag::c)}) {
    const RootSystem& rs = m->rs();
    const WeightModule& wm = m->wm();
    const Matrix e = Matrix::identity(r, m->dim());
    for (int a = 0; a < rs.size(); ++a) {
      Matrix x = root_matrix(*m, a, r.from_int(3));
      Matrix n = x - e;
      CHECK((n * n).is_zero());
      CHECK(root_matrix(*m, a, r.from_int(3)) * root_matrix(*m, a, r.from_int(6)) == root_matrix(*m, a, r.from_int(1)));
      for (int lam = 0; lam < m->dim(); ++lam) {
        int dst = wm.shift(lam, a);
        for (int row = 0; row < m->dim(); ++row) {
          RingElem entry = n.elem(row, lam);
          if (row == dst) {
            CHECK((entry == r.from_int(3) || entry == r.from_int(-3)));
            CHECK(entry == r.from_int(3 * m->sign(lam, a)));
          } else {
            CHECK(entry.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("commutators of root elements") {
  const Ring r = Ring::parse("z9");
  ModelPtr m = Model::build(CaseTag::b);
  const RootSystem& rs = m->rs();
  const RingElem s = r.from_int(2), t = r.from_int(4);
  for (int a = 0; a < rs.size(); ++a)
    for (int b = 0; b < rs.size(); ++b) {
      if (b == rs.neg(a)) continue;
      Matrix xa = root_matrix(*m, a, s), xb = root_matrix(*m, b, t);
      Matrix c = xa * xb * root_matrix(*m, a, -s) * root_matrix(*m, b, -t);
      auto sum = rs.add(a, b);
      if (!sum) {
        CHECK(c.is_identity());
      } else {
        bool plus = is_root_element(*m, c, *sum, s * t), minus = is_root_element(*m, c, *sum, -(s * t));
        CHECK((plus || minus));
      }
    }
}

TEST_CASE("Weyl elements permute weights by reflection") {
  const Ring r = Ring::parse("z8");
  for (ModelPtr m : {Model::build(CaseTag::a, 6), Model::build(CaseTag::c)}) {
    const RootSystem& rs = m->rs();
    const WeightModule& wm = m->wm();
    for (int a = 0; a < rs.size(); a += 5) {
      Matrix w = root_matrix(*m, a, r.one()) * root_matrix(*m, rs.neg(a), -r.one()) * root_matrix(*m, a, r.one());
      CHECK(w == m->weyl(a, r.one()).mat);
      for (int lam = 0; lam < m->dim(); ++lam) {
        // s_a(lambda) = lambda - <lambda, a> a
        IVec v = wm.weight(lam);
        int p = wm.pairing(lam, a);
        for (int i = 0; i < rs.rank(); ++i)
          for (int j = 0; j < rs.rank(); ++j) v[j] -= p * rs.root(a)[i] * rs.cartan()[i][j];
        int image = *wm.find(v);
        for (int row = 0; row < m->dim(); ++row) {
          RingElem x = w.elem(row, lam);
          if (row == image) CHECK((x.is_one() || (-x).is_one()));
          else CHECK(x.is_zero());
        }
      }
    }
  }
}

TEST_CASE("torus elements act diagonally by eps^<lambda, alpha>") {
  const Ring r = Ring::parse("z9");
  ModelPtr m = Model::build(CaseTag::b);
  const RingElem eps = r.from_int(2);
  for (int a = 0; a < m->rs().size(); a += 7) {
    Matrix h = m->torus(a, eps).mat;
    for (int i = 0; i < m->dim(); ++i)
      for (int j = 0; j < m->dim(); ++j) {
        if (i != j) {
          CHECK(h.elem(i, j).is_zero());
          continue;
        }
        int p = m->wm().pairing(i, a);
        RingElem want = p == 0 ? r.one() : p > 0 ? eps : eps.inv();
        CHECK(h.elem(i, i) == want);
      }
  }
}

TEST_CASE("group elements carry their inverses") {
  const Ring r = Ring::parse("z4*f2t2");
  ModelPtr m = Model::build(CaseTag::c);
  Rng rng(5);
  auto elems = r.elements();
  GroupElement g = m->identity(r);
  for (int i = 0; i < 30; ++i) m->right_mul(g, rng.below(m->rs().size()), elems[rng.below(static_cast<int>(elems.size()))]);
  CHECK((g.mat * g.inv).is_identity());
  CHECK((g.inv * g.mat).is_identity());
  CHECK(g.mat.inverse() == g.inv);
  GroupElement h = m->root_elt(m->rs().max_root(), r.one());
  CHECK(m->conj_root(g, m->rs().max_root(), r.one()).mat == g.mat * h.mat * g.inv);
  CHECK(m->comm_root(g, 3, r.one()).mat == (m->commutator(g, m->root_elt(3, r.one()))).mat);
  CHECK(m->conjugate(h, g).mat == m->mul(m->mul(h, g), h.inverse()).mat);
}
