#include "sandwich/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "sandwich/errors.hpp"

namespace sandwich {

CaseTag parse_case_tag(const std::string& s) {
  if (s == "a") return CaseTag::a;
  if (s == "b") return CaseTag::b;
  if (s == "c") return CaseTag::c;
  throw UsageError("unknown case '" + s + "' (expected a, b or c)");
}

std::string case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::a:
      return "a";
    case CaseTag::b:
      return "b";
    case CaseTag::c:
      return "c";
  }
  return "?";
}

RootSystem RootSystem::build(CaseTag tag, int l) {
  RootSystem rs;
  rs.tag_ = tag;
  switch (tag) {
    case CaseTag::a:
      if (l < 5 || l > 10) throw UsageError("case a needs 5 <= l <= 10");
      rs.l_ = l;
      for (int i = 0; i + 2 < l; ++i) rs.edges_.push_back({i, i + 1});
      rs.edges_.push_back({l - 3, l - 1});
      rs.a1_ = l - 1;
      rs.a2_ = l - 3;
      rs.type_ = l % 2 == 0 ? CaseType::second : CaseType::first;
      break;
    case CaseTag::b:
      if (l != 0 && l != 6) throw UsageError("case b has rank 6");
      rs.l_ = 6;
      rs.edges_ = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      rs.a1_ = 0;
      rs.a2_ = 2;
      rs.type_ = CaseType::first;
      break;
    case CaseTag::c:
      if (l != 0 && l != 7) throw UsageError("case c has rank 7");
      rs.l_ = 7;
      rs.edges_ = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
      rs.a1_ = 6;
      rs.a2_ = 5;
      rs.type_ = CaseType::second;
      break;
  }
  rs.finish();
  return rs;
}

std::string RootSystem::name() const {
  switch (tag_) {
    case CaseTag::a:
      return "(D" + std::to_string(l_) + ",A" + std::to_string(l_ - 1) + ")";
    case CaseTag::b:
      return "(E6,D5)";
    case CaseTag::c:
      return "(E7,E6)";
  }
  return "?";
}

void RootSystem::finish() {
  const int l = l_;
  cartan_.assign(l, IVec(l, 0));
  for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
  for (auto [i, j] : edges_) cartan_[i][j] = cartan_[j][i] = -1;

  auto pair_vec = [&](const IVec& a, const IVec& b) {
    int s = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) s += a[i] * cartan_[i][j] * b[j];
    return s;
  };

  // Positive roots by closure: for simply-laced systems alpha + alpha_i is a
  // root iff <alpha, alpha_i> = -1.
  std::set<IVec> pos;
  std::deque<IVec> queue;
  for (int i = 0; i < l; ++i) {
    IVec e(l, 0);
    e[i] = 1;
    pos.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec a = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      int p = 0;
      for (int j = 0; j < l; ++j) p += a[j] * cartan_[j][i];
      if (p != -1) continue;
      IVec b = a;
      ++b[i];
      if (pos.insert(b).second) queue.push_back(b);
    }
  }
  std::vector<IVec> all(pos.begin(), pos.end());
  for (const IVec& a : pos) {
    IVec n = a;
    for (int& x : n) x = -x;
    all.push_back(n);
  }
  auto ht = [](const IVec& a) { return std::accumulate(a.begin(), a.end(), 0); };
  std::sort(all.begin(), all.end(), [&](const IVec& a, const IVec& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  roots_ = all;
  const int n = size();
  for (int i = 0; i < n; ++i) index_[roots_[i]] = i;
  height_.resize(n);
  wcoords_.resize(n);
  for (int i = 0; i < n; ++i) {
    height_[i] = ht(roots_[i]);
    IVec w(l, 0);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) w[r] += cartan_[r][c] * roots_[i][c];
    wcoords_[i] = w;
  }
  simple_.resize(l);
  for (int i = 0; i < l; ++i) {
    IVec e(l, 0);
    e[i] = 1;
    simple_[i] = index_.at(e);
  }
  neg_.resize(n);
  sum_.assign(n * n, -1);
  pair_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) {
    IVec m = roots_[i];
    for (int& x : m) x = -x;
    neg_[i] = index_.at(m);
    for (int j = 0; j < n; ++j) {
      pair_[i * n + j] = pair_vec(roots_[i], roots_[j]);
      IVec s(l);
      for (int k = 0; k < l; ++k) s[k] = roots_[i][k] + roots_[j][k];
      auto it = index_.find(s);
      if (it != index_.end()) sum_[i * n + j] = it->second;
    }
  }
  max_root_ = n - 1;

  for (int i = 0; i < n; ++i) {
    int c1 = coeff(i, a1_);
    if (c1 == 0) {
      delta_.push_back(i);
      if (coeff(i, a2_) == 0) delta_prime_.push_back(i);
    } else if (c1 == 1) {
      omega_plus_.push_back(i);
    } else if (c1 == -1) {
      omega_minus_.push_back(i);
    } else {
      throw InternalError("alpha^(1) coefficient outside {-1,0,1}");
    }
  }
  if (tag_ == CaseTag::a) {
    for (const auto& comp : components(delta_prime_))
      if (comp.size() != 2) delta_dprime_.insert(delta_dprime_.end(), comp.begin(), comp.end());
    std::sort(delta_dprime_.begin(), delta_dprime_.end());
  } else {
    delta_dprime_ = delta_prime_;
  }
}

std::optional<int> RootSystem::find(const IVec& coeffs) const {
  auto it = index_.find(coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::add(int a, int b) const {
  int s = sum_index(a, b);
  if (s < 0) return std::nullopt;
  return s;
}

int RootSystem::reflect(int a, int b) const {
  int p = pairing(a, b);
  IVec r = roots_[a];
  for (int k = 0; k < l_; ++k) r[k] -= p * roots_[b][k];
  return index_.at(r);
}

std::vector<int> RootSystem::weyl_orbit(int seed, const std::vector<int>& gens) const {
  std::vector<char> seen(size(), 0);
  std::vector<int> out{seed};
  seen[seed] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int g : gens) {
      int r = reflect(out[k], g);
      if (!seen[r]) {
        seen[r] = 1;
        out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> RootSystem::orbits(const std::vector<int>& set, const std::vector<int>& gens) const {
  std::vector<std::vector<int>> out;
  std::vector<char> done(size(), 0);
  std::vector<int> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  for (int r : sorted) {
    if (done[r]) continue;
    auto orb = weyl_orbit(r, gens);
    for (int x : orb) done[x] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<int>> RootSystem::components(const std::vector<int>& sub) const {
  std::vector<int> sorted = sub;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> comp(sorted.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      out[id].push_back(sorted[u]);
      for (std::size_t v = 0; v < sorted.size(); ++v)
        if (comp[v] < 0 && pairing(sorted[u], sorted[v]) != 0) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int RootSystem::partner_root(int beta) const {
  if (in_delta(beta)) throw DomainError("partner_root expects a root outside Delta");
  for (int a : delta_)
    if (sum_index(a, beta) >= 0) return a;
  throw InternalError("no partner root in Delta for " + root_string(beta));
}

std::string RootSystem::root_string(int i) const {
  std::string s = "[";
  for (int k = 0; k < l_; ++k) s += (k ? "," : "") + std::to_string(roots_[i][k]);
  return s + "]";
}

}  // namespace sandwich
