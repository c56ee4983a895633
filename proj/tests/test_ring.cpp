#include <numeric>
#include <set>

#include "doctest.h"
#include "sandwich/errors.hpp"
#include "sandwich/ring.hpp"

using namespace sandwich;

namespace {

std::set<std::string> names(const std::vector<RingElem>& v) {
  std::set<std::string> out;
  for (const auto& x : v) out.insert(x.to_string());
  return out;
}

}  // namespace

TEST_CASE("z/n arithmetic matches integer arithmetic mod n") {
  for (int n : {4, 8, 9, 12, 36}) {
    Ring r = Ring::zmod_n(n);
    CHECK(r.elements().size() == static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(r.from_int(a) + r.from_int(b) == r.from_int((a + b) % n));
        CHECK(r.from_int(a) * r.from_int(b) == r.from_int((a * b) % n));
        CHECK(r.from_int(a) - r.from_int(b) == r.from_int((a - b + n) % n));
      }
    int units = 0;
    for (int a = 0; a < n; ++a) {
      bool unit = std::gcd(a, n) == 1;
      units += unit;
      REQUIRE(r.from_int(a).is_unit() == unit);
      if (unit) CHECK((r.from_int(a) * r.from_int(a).inv()).is_one());
    }
    CHECK(r.units().size() == static_cast<std::size_t>(units));
  }
}

TEST_CASE("ideals of z/n are the divisor ideals") {
  for (int n : {8, 12, 72}) {
    Ring r = Ring::zmod_n(n);
    int divisors = 0;
    for (int d = 1; d <= n; ++d) divisors += n % d == 0;
    CHECK(all_ideals(r).size() == static_cast<std::size_t>(divisors));
    for (int a = 0; a < n; ++a) {
      Ideal i = Ideal::principal(r.from_int(a));
      int g = std::gcd(a, n);
      CHECK(i.elements().size() == static_cast<std::size_t>(n / g));
      for (int x = 0; x < n; ++x) CHECK(i.contains(r.from_int(x)) == (x % g == 0));
    }
  }
}

TEST_CASE("ideal operations agree with brute force on element sets") {
  for (const char* name : {"z8", "f2t3", "z4*f3t2"}) {
    Ring r = Ring::parse(name);
    auto ideals = all_ideals(r);
    for (const Ideal& i : ideals)
      for (const Ideal& j : ideals) {
        auto ie = i.elements(), je = j.elements();
        std::set<std::string> sum, inter;
        for (const auto& x : ie)
          for (const auto& y : je) sum.insert((x + y).to_string());
        CHECK(names((i + j).elements()) == sum);
        for (const auto& x : ie)
          if (j.contains(x)) inter.insert(x.to_string());
        CHECK(names(i.intersect(j).elements()) == inter);
        // products of generators span I J; check containment both ways
        Ideal p = i * j;
        for (const auto& x : ie)
          for (const auto& y : je) CHECK(p.contains(x * y));
        CHECK(p.contains(Ideal::principal(i.generator() * j.generator())));
        CHECK(Ideal::principal(i.generator() * j.generator()).contains(p));
        bool subset = true;
        for (const auto& y : je) subset = subset && i.contains(y);
        CHECK(i.contains(j) == subset);
      }
  }
}

TEST_CASE("truncated polynomial rings") {
  Ring r = Ring::parse("f2t2");
  CHECK(r.elements().size() == 4);
  CHECK(r.units().size() == 2);
  RingElem t = r.uniformizer();
  CHECK_FALSE(t.is_zero());
  CHECK((t * t).is_zero());
  CHECK(Ideal::principal(t).square().is_zero());
  Ring f3 = Ring::parse("f3t3");
  CHECK(f3.elements().size() == 27);
  CHECK(f3.units().size() == 18);
}

TEST_CASE("quotient maps are ring homomorphisms") {
  Ring r = Ring::parse("z8*f2t2");
  for (const Ideal& i : all_ideals(r)) {
    if (i.is_unit()) continue;
    Ring q = i.quotient_ring();
    CHECK(q.elements().size() * i.elements().size() == r.elements().size());
    for (const auto& a : r.elements())
      for (const auto& b : r.elements()) {
        CHECK(i.reduce(a * b) == i.reduce(a) * i.reduce(b));
        CHECK(i.reduce(a + b) == i.reduce(a) + i.reduce(b));
        CHECK(i.reduce(a).is_zero() == i.contains(a));
      }
  }
}

TEST_CASE("ring names") {
  CHECK(Ring::parse("z12").factors().size() == 2);
  CHECK(Ring::parse("Z").is_integers());
  CHECK_THROWS_AS(Ring::parse("q7"), UsageError);
  CHECK_THROWS_AS(Ring::parse("zq"), UsageError);
  Ring z4 = Ring::parse("z4");
  CHECK(Ideal::parse(z4, "(2)") == Ideal::principal(z4.from_int(2)));
  CHECK(Ideal::parse(z4, "(0)").is_zero());
  CHECK(Ideal::parse(z4, "R").is_unit());
}
