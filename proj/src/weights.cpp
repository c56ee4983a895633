#include "sandwich/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sandwich/errors.hpp"

namespace sandwich {

WeightModule WeightModule::build(const RootSystem& rs, std::size_t max_dim) {
  WeightModule wm;
  wm.rs_ = &rs;
  wm.nroots_ = rs.size();
  const int l = rs.rank();
  const int a1 = rs.alpha1_vertex();

  // Orbit of the fundamental weight by lowering along simple roots; for a
  // minuscule weight every coordinate lies in {-1, 0, 1}.
  IVec top(l, 0);
  top[a1] = 1;
  std::map<IVec, std::pair<int, int>> seen;  // coords -> (depth, alpha1 steps)
  std::deque<IVec> queue{top};
  seen[top] = {0, 0};
  while (!queue.empty()) {
    IVec w = queue.front();
    queue.pop_front();
    auto [d, c] = seen[w];
    for (int i = 0; i < l; ++i) {
      if (w[i] != 1) continue;
      IVec v = w;
      for (int j = 0; j < l; ++j) v[j] -= rs.cartan()[j][i];
      if (seen.count(v)) continue;
      seen[v] = {d + 1, c + (i == a1 ? 1 : 0)};
      queue.push_back(v);
      if (seen.size() > max_dim) throw Unsupported("weight module exceeds the size cap");
    }
  }
  std::vector<IVec> ws;
  for (auto& [w, dc] : seen) ws.push_back(w);
  std::sort(ws.begin(), ws.end(), [&](const IVec& a, const IVec& b) {
    int da = seen[a].first, db = seen[b].first;
    if (da != db) return da < db;
    return a > b;
  });
  wm.weights_ = ws;
  const int n = wm.dim();
  std::vector<int> a1steps(n);
  for (int i = 0; i < n; ++i) {
    wm.index_[ws[i]] = i;
    wm.depth_.push_back(seen[ws[i]].first);
    a1steps[i] = seen[ws[i]].second;
  }
  wm.neg_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    IVec m = ws[i];
    for (int& x : m) x = -x;
    if (auto j = wm.find(m)) wm.neg_[i] = *j;
  }
  wm.shift_.assign(static_cast<std::size_t>(n) * wm.nroots_, -1);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < wm.nroots_; ++a) {
      IVec v = ws[i];
      const IVec& w = rs.weight_coords(a);
      for (int k = 0; k < l; ++k) v[k] += w[k];
      if (auto j = wm.find(v)) wm.shift_[i * wm.nroots_ + a] = *j;
    }
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < l; ++v) {
      int j = wm.shift(i, rs.neg(rs.simple(v)));
      if (j >= 0) wm.diagram_.push_back({i, j, v});
    }

  // All-pairs BFS in the weight graph.
  wm.dist_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < wm.nroots_; ++a)
      if (int j = wm.shift(i, a); j >= 0) adj[i].push_back(j);
  for (int s = 0; s < n; ++s) {
    int* d = &wm.dist_[static_cast<std::size_t>(s) * n];
    d[s] = 0;
    std::vector<int> q{s};
    for (std::size_t k = 0; k < q.size(); ++k)
      for (int t : adj[q[k]])
        if (d[t] < 0) {
          d[t] = d[q[k]] + 1;
          q.push_back(t);
        }
  }

  // Components after cutting alpha^(1)-edges, labelled by the number of
  // alpha^(1) steps below lambda_0; connectivity is checked separately.
  wm.comp_ = a1steps;
  int ncomp = *std::max_element(a1steps.begin(), a1steps.end()) + 1;
  wm.comps_.assign(ncomp, {});
  for (int i = 0; i < n; ++i) wm.comps_[a1steps[i]].push_back(i);
  {
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
      if (label[s] >= 0) continue;
      std::vector<int> q{s};
      label[s] = next;
      for (std::size_t k = 0; k < q.size(); ++k)
        for (const Edge& e : wm.diagram_) {
          if (e.vertex == a1) continue;
          int other = e.upper == q[k] ? e.lower : e.lower == q[k] ? e.upper : -1;
          if (other >= 0 && label[other] < 0) {
            label[other] = next;
            q.push_back(other);
          }
        }
      ++next;
    }
    if (next != ncomp) throw InternalError("diagram components disagree with alpha^(1) levels");
    for (int i = 0; i < n; ++i)
      if (label[i] != label[wm.comps_[a1steps[i]][0]])
        throw InternalError("diagram components disagree with alpha^(1) levels");
  }
  return wm;
}

std::optional<int> WeightModule::find(const IVec& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int WeightModule::pairing(int lambda, int alpha) const {
  int s = 0;
  const IVec& w = weights_[lambda];
  const IVec& r = rs_->root(alpha);
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * r[k];
  return s;
}

int WeightModule::diameter() const { return *std::max_element(dist_.begin(), dist_.end()); }

CaseType WeightModule::type() const {
  const auto& last = comps_.back();
  return last.size() == 1 && last[0] == neg_[0] ? CaseType::second : CaseType::first;
}

int WeightModule::difference_root(int lambda, int mu) const {
  for (int a = 0; a < nroots_; ++a)
    if (shift(mu, a) == lambda) return a;
  return -1;
}

SigmaSplit WeightModule::sigma_split(int lambda1) const {
  if (lambda1 < 0 || lambda1 >= dim() || comp_[lambda1] != 1)
    throw DomainError("sigma_split needs a weight in Lambda_1");
  const RootSystem& rs = *rs_;
  SigmaSplit out;
  for (int a = 0; a < nroots_; ++a) {
    if (shift(lambda1, rs.neg(a)) < 0) continue;
    int s = rs.omega_sign(a);
    (s < 0 ? out.minus : s == 0 ? out.zero : out.plus).push_back(a);
  }
  int gamma = difference_root(0, lambda1);
  if (gamma < 0) throw InternalError("lambda_0 - lambda_1 is not a root");
  std::set<int> image;
  for (int a : rs.delta()) image.insert(rs.reflect(a, gamma));
  out.delta_l1.assign(image.begin(), image.end());
  for (int a : rs.delta())
    if (image.count(a)) out.delta_cap.push_back(a);
  for (const auto& comp : rs.components(out.delta_cap))
    if (comp.size() != 2) out.delta_cap_prime.insert(out.delta_cap_prime.end(), comp.begin(), comp.end());
  std::sort(out.delta_cap_prime.begin(), out.delta_cap_prime.end());
  return out;
}

int WeightModule::neighbor_in_component(int lambda1, std::optional<int> nu) const {
  if (comp_.at(lambda1) != 1) throw DomainError("neighbor_in_component needs a weight in Lambda_1");
  if (nu && (comp_.at(*nu) != 1 || distance(lambda1, *nu) != 1))
    throw DomainError("nu must lie in Lambda_1 at distance 1");
  for (int mu : comps_[1]) {
    if (distance(lambda1, mu) != 1) continue;
    if (nu && distance(mu, *nu) != 1) continue;
    return mu;
  }
  throw InternalError("no neighbour in Lambda_1");
}

std::string WeightModule::weight_string(int i) const {
  std::string s = "[";
  for (std::size_t k = 0; k < weights_[i].size(); ++k) s += (k ? "," : "") + std::to_string(weights_[i][k]);
  return s + "]";
}

}  // namespace sandwich
