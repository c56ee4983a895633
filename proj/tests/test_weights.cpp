#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "sandwich/root_system.hpp"
#include "sandwich/weights.hpp"

using namespace sandwich;

namespace {

struct Case {
  CaseTag tag;
  char name;
  int l;
  std::vector<long> components;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (int l = 5; l <= 10; ++l) {
    // half-spin: even exterior powers of the l-dimensional space
    std::vector<long> comps;
    for (int k = 0; k <= l; k += 2) comps.push_back(oracle::binom(l, k));
    out.push_back({CaseTag::a, 'a', l, comps});
  }
  out.push_back({CaseTag::b, 'b', 6, {1, 16, 10}});
  out.push_back({CaseTag::c, 'c', 7, {1, 27, 27, 1}});
  return out;
}

}  // namespace

TEST_CASE("weights agree with the reflection orbit") {
  for (const Case& c : cases()) {
    RootSystem rs = RootSystem::build(c.tag, c.tag == CaseTag::a ? c.l : 0);
    WeightModule wm = WeightModule::build(rs);
    auto ref = oracle::weights(oracle::diagram(c.name, c.l));
    CAPTURE(rs.name());
    CHECK(wm.dim() == static_cast<int>(ref.size()));
    REQUIRE(wm.ncomponents() == static_cast<int>(c.components.size()));
    for (int i = 0; i < wm.ncomponents(); ++i) CHECK(static_cast<long>(wm.component_members(i).size()) == c.components[i]);
    for (const auto& [w, depth] : ref) {
      auto idx = wm.find(w);
      REQUIRE(idx.has_value());
      CHECK(wm.component(*idx) == depth);
    }
    CHECK(wm.weight(0) == ref.front().first);
    bool second = c.components.back() == 1;
    CHECK((wm.type() == CaseType::second) == second);
    CHECK((rs.type() == CaseType::second) == second);
  }
}

TEST_CASE("dimensions") {
  CHECK(WeightModule::build(RootSystem::build(CaseTag::a, 5)).dim() == 16);
  CHECK(WeightModule::build(RootSystem::build(CaseTag::b)).dim() == 27);
  CHECK(WeightModule::build(RootSystem::build(CaseTag::c)).dim() == 56);
}

TEST_CASE("weight graph: shifts, differences and distances") {
  for (const Case& c : cases()) {
    if (c.l > 7) continue;
    RootSystem rs = RootSystem::build(c.tag, c.tag == CaseTag::a ? c.l : 0);
    WeightModule wm = WeightModule::build(rs);
    const int n = wm.dim();
    for (int lam = 0; lam < n; ++lam) {
      for (int a = 0; a < rs.size(); ++a) {
        // lambda + alpha in fundamental coordinates
        oracle::Vec v = wm.weight(lam);
        for (int i = 0; i < rs.rank(); ++i)
          for (int j = 0; j < rs.rank(); ++j) v[j] += rs.root(a)[i] * rs.cartan()[i][j];
        auto f = wm.find(v);
        CHECK(wm.shift(lam, a) == (f ? *f : -1));
        if (f) CHECK(wm.pairing(lam, a) == -1);
      }
      for (int mu = 0; mu < n; ++mu) {
        int d = wm.distance(lam, mu);
        CHECK(d == wm.distance(mu, lam));
        CHECK((d == 0) == (lam == mu));
        CHECK((d == 1) == (wm.difference_root(lam, mu) >= 0));
      }
    }
    // distances from a BFS over one-root steps
    for (int src = 0; src < n; src += 3) {
      std::vector<int> dist(n, -1);
      std::vector<int> queue{src};
      dist[src] = 0;
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (int a = 0; a < rs.size(); ++a) {
          int t = wm.shift(queue[k], a);
          if (t >= 0 && dist[t] < 0) {
            dist[t] = dist[queue[k]] + 1;
            queue.push_back(t);
          }
        }
      for (int t = 0; t < n; ++t) CHECK(wm.distance(src, t) == dist[t]);
    }
  }
}

TEST_CASE("sigma split partitions Sigma_lambda1 by orbit") {
  for (const Case& c : cases()) {
    if (c.l > 6) continue;
    RootSystem rs = RootSystem::build(c.tag, c.tag == CaseTag::a ? c.l : 0);
    WeightModule wm = WeightModule::build(rs);
    for (int l1 : wm.component_members(1)) {
      SigmaSplit s = wm.sigma_split(l1);
      std::vector<int> minus, zero, plus;
      for (int a = 0; a < rs.size(); ++a) {
        if (wm.shift(l1, rs.neg(a)) < 0) continue;
        (rs.in_delta(a) ? zero : rs.omega_sign(a) > 0 ? plus : minus).push_back(a);
      }
      CHECK(s.minus == minus);
      CHECK(s.zero == zero);
      CHECK(s.plus == plus);
      REQUIRE(s.minus.size() == 1);
      CHECK(s.minus[0] == wm.difference_root(l1, 0));
      CHECK_FALSE(s.zero.empty());
    }
  }
}
