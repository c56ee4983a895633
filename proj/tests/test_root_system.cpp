#include "doctest.h"
#include "oracle.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/root_system.hpp"

using namespace sandwich;

namespace {

struct Case {
  CaseTag tag;
  char name;
  int l;
  int roots, delta, omega;
};

const Case kCases[] = {
    {CaseTag::a, 'a', 5, 40, 20, 10}, {CaseTag::a, 'a', 6, 60, 30, 15}, {CaseTag::a, 'a', 7, 84, 42, 21},
    {CaseTag::a, 'a', 10, 180, 90, 45}, {CaseTag::b, 'b', 6, 72, 40, 16}, {CaseTag::c, 'c', 7, 126, 72, 27},
};

}  // namespace

TEST_CASE("roots agree with reflection closure") {
  for (const Case& c : kCases) {
    RootSystem rs = RootSystem::build(c.tag, c.tag == CaseTag::a ? c.l : 0);
    oracle::Diagram d = oracle::diagram(c.name, c.l);
    auto ref = oracle::roots(d);
    CAPTURE(rs.name());
    REQUIRE(rs.rank() == d.l);
    CHECK(rs.size() == static_cast<int>(ref.size()));
    CHECK(rs.size() == c.roots);
    for (const auto& r : ref) CHECK(rs.find(r).has_value());
    CHECK(rs.alpha1_vertex() == d.a1);
    CHECK(rs.alpha2_vertex() == d.a2);
    CHECK(static_cast<int>(rs.delta().size()) == c.delta);
    CHECK(static_cast<int>(rs.omega_plus().size()) == c.omega);
    CHECK(static_cast<int>(rs.omega_minus().size()) == c.omega);

    int top = 0;
    for (const auto& r : ref) {
      int h = 0;
      for (int x : r) h += x;
      top = std::max(top, h);
    }
    CHECK(rs.height(rs.max_root()) == top);
    CHECK(rs.coeff(rs.max_root(), d.a1) == 1);
    CHECK(rs.coeff(rs.max_root(), d.a2) == 2);
  }
}

TEST_CASE("root order, negation and sums") {
  for (const Case& c : kCases) {
    RootSystem rs = RootSystem::build(c.tag, c.tag == CaseTag::a ? c.l : 0);
    CHECK(rs.max_root() == rs.size() - 1);
    for (int i = 0; i + 1 < rs.size(); ++i) CHECK(rs.height(i) <= rs.height(i + 1));
    for (int a = 0; a < rs.size(); ++a) {
      CHECK(rs.neg(rs.neg(a)) == a);
      CHECK(rs.height(rs.neg(a)) == -rs.height(a));
      CHECK(rs.pairing(a, a) == 2);
      for (int b = 0; b < rs.size(); ++b) {
        oracle::Vec s = rs.root(a);
        for (int i = 0; i < rs.rank(); ++i) s[i] += rs.root(b)[i];
        auto found = rs.find(s);
        auto sum = rs.add(a, b);
        CHECK(found.has_value() == sum.has_value());
        if (sum) CHECK(*sum == *found);
        // simply laced: a + b is a root exactly when (a, b) = -1
        CHECK(sum.has_value() == (rs.pairing(a, b) == -1));
      }
    }
  }
}

TEST_CASE("omega orbits under the reflections of Delta") {
  for (const Case& c : kCases) {
    RootSystem rs = RootSystem::build(c.tag, c.tag == CaseTag::a ? c.l : 0);
    std::vector<int> outside;
    for (int a = 0; a < rs.size(); ++a)
      if (!rs.in_delta(a)) outside.push_back(a);
    auto orbits = rs.orbits(outside, rs.delta());
    REQUIRE(orbits.size() == 2);
    for (const auto& o : orbits) {
      int sign = rs.omega_sign(o.front());
      for (int a : o) CHECK(rs.omega_sign(a) == sign);
      CHECK((sign == 1 || sign == -1));
    }
  }
}

TEST_CASE("invalid ranks") {
  CHECK_THROWS(RootSystem::build(CaseTag::a, 4));
  CHECK_THROWS(RootSystem::build(CaseTag::a, 11));
}
