#pragma once

// Independent reference data: Dynkin diagrams written out by hand, roots and
// minuscule weights generated by closing under simple reflections.

#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

struct Diagram {
  int l;
  std::vector<std::pair<int, int>> edges;
  int a1, a2;  // crossed vertex and the vertex with max-root coefficient 2
};

inline Diagram diagram(char tag, int l = 0) {
  if (tag == 'b') return {6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}, 0, 2};
  if (tag == 'c') return {7, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}}, 6, 5};
  Diagram d{l, {}, l - 1, l - 3};
  for (int i = 0; i + 2 < l; ++i) d.edges.push_back({i, i + 1});
  d.edges.push_back({l - 3, l - 1});
  return d;
}

inline std::vector<Vec> cartan(const Diagram& d) {
  std::vector<Vec> c(d.l, Vec(d.l, 0));
  for (int i = 0; i < d.l; ++i) c[i][i] = 2;
  for (auto [i, j] : d.edges) c[i][j] = c[j][i] = -1;
  return c;
}

/// All roots in simple-root coordinates.
inline std::set<Vec> roots(const Diagram& d) {
  auto c = cartan(d);
  std::set<Vec> seen;
  std::vector<Vec> todo;
  for (int i = 0; i < d.l; ++i) {
    Vec e(d.l, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Vec b = todo.back();
    todo.pop_back();
    for (int i = 0; i < d.l; ++i) {
      int p = 0;
      for (int j = 0; j < d.l; ++j) p += b[j] * c[j][i];
      Vec r = b;
      r[i] -= p;
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

/// Weights of the orbit of the fundamental weight at a1, in fundamental
/// weight coordinates, with the alpha1-coefficient of lambda0 - lambda.
inline std::vector<std::pair<Vec, int>> weights(const Diagram& d) {
  auto c = cartan(d);
  Vec top(d.l, 0);
  top[d.a1] = 1;
  std::set<Vec> seen{top};
  std::vector<std::pair<Vec, int>> out{{top, 0}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto [w, depth] = out[k];
    for (int i = 0; i < d.l; ++i) {
      if (w[i] == 0) continue;
      Vec v = w;
      for (int j = 0; j < d.l; ++j) v[j] -= w[i] * c[i][j];
      if (seen.insert(v).second) out.push_back({v, depth + (i == d.a1 ? w[i] : 0)});
    }
  }
  return out;
}

inline long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
