#include "doctest.h"
#include "sandwich/errors.hpp"
#include "sandwich/io.hpp"
#include "sandwich/rng.hpp"

using namespace sandwich;
using io::json;

TEST_CASE("element and ring round trips") {
  for (const char* name : {"z4", "z12", "f2t3", "z8*f3t2"}) {
    Ring r = Ring::parse(name);
    CHECK(io::ring_from_json(io::ring_to_json(r)) == r);
    CHECK(io::ring_from_json(json(name)) == r);
    for (const RingElem& a : r.elements()) CHECK(io::elem_from_json(r, io::elem_to_json(a)) == a);
  }
  Ring r = Ring::parse("z12");
  CHECK(io::elem_from_json(r, json(-1)) == r.from_int(11));
}

TEST_CASE("matrix round trip") {
  Ring r = Ring::parse("z4*f2t2");
  ModelPtr m = Model::build(CaseTag::b);
  Rng rng(1);
  auto elems = r.elements();
  GroupElement g = m->identity(r);
  for (int i = 0; i < 15; ++i) m->right_mul(g, rng.below(m->rs().size()), elems[rng.below(static_cast<int>(elems.size()))]);
  json j = io::matrix_to_json(*m, g.mat);
  CHECK(j["case"] == "b");
  CHECK(io::matrix_from_json(*m, json::parse(j.dump())) == g.mat);
}

TEST_CASE("generator forms") {
  Ring r = Ring::parse("z4");
  ModelPtr m = Model::build(CaseTag::c);
  const int top = m->rs().max_root();
  json root{{"root", m->rs().root(top)}, {"xi", 2}};
  CHECK(io::element_from_json(*m, r, root, "x").mat == m->root_elt(top, r.from_int(2)).mat);
  json w{{"word", json::array({json::array({m->rs().root(0), 1}), json::array({m->rs().root(top), 3})})}};
  CHECK(io::element_from_json(*m, r, w, "w").mat == m->mul(m->root_elt(0, r.one()), m->root_elt(top, r.from_int(3))).mat);
  CHECK_THROWS_AS(io::element_from_json(*m, r, json{{"root", json::array({5, 5, 5, 5, 5, 5, 5})}, {"xi", 1}}, "x"),
                  UsageError);
  CHECK_THROWS_AS(io::element_from_json(*m, r, json::object(), "x"), UsageError);
  CHECK_THROWS_AS(io::matrix_from_json(*m, json{{"ring", "z4"}, {"rows", json::array()}}), UsageError);
}
