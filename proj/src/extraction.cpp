#include "sandwich/extraction.hpp"

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

constexpr const char* kLevelNote = "coefficient lies in the certified level";

// g <- g x_beta(xi) with a level letter
void append_level(const Model& m, GroupElement& g, int beta, const RingElem& xi) {
  m.right_root(g.mat, beta, xi.residues());
  m.left_root(g.inv, beta, (-xi).residues());
  if (g.word) g.word = word::mul({g.word, word::level(beta, xi, kLevelNote)});
}

// g <- g x_beta(xi), a root of Delta or a level letter
void append(const Model& m, GroupElement& g, int beta, const RingElem& xi) {
  if (m.rs().in_delta(beta)) m.right_mul(g, beta, xi);
  else append_level(m, g, beta, xi);
}

Witness finish(const Model& m, const GroupElement& u, int root, const RingElem& value, const char* route) {
  GroupElement x = m.root_elt(root, value);
  if (!(x.mat == u.mat)) throw InternalError("extracted element is not a single root element");
  return {root, value, u.word, route};
}

// u in U (side +1) or U^- (side -1).
Extraction greedy(const Model& m, GroupElement u, const Ideal& ideal, int side, const char* route) {
  const RootSystem& rs = m.rs();
  const int top = side > 0 ? rs.max_root() : rs.neg(rs.max_root());
  const std::vector<int> roots = unipotent_roots(m, 0, side);
  const int bound = static_cast<int>(roots.size()) * (rs.height(rs.max_root()) + 1);
  const RingElem one = u.ring().one();
  for (int steps = 0; steps <= bound; ++steps) {
    std::vector<RingElem> xi = unipotent_coords(m, u, 0, side);
    std::vector<int> support;
    for (int b : roots) {
      if (xi[b].is_zero()) continue;
      if (ideal.contains(xi[b])) append_level(m, u, b, -xi[b]);
      else support.push_back(b);
    }
    if (support.empty()) return {std::nullopt, "every root coordinate lies in the ideal", steps};
    if (support.size() == 1 && support[0] == top) return {finish(m, u, top, xi[top], route), "", steps};
    int gamma = -1;
    for (int b : support)
      if (b != top && (gamma < 0 || (side > 0) == (b > gamma))) gamma = b;
    int am = -1;
    for (int v = 0; v < rs.rank() && am < 0; ++v) {
      if (v == rs.alpha1_vertex()) continue;
      int a = side > 0 ? rs.simple(v) : rs.neg(rs.simple(v));
      if (rs.sum_index(gamma, a) >= 0) am = a;
    }
    if (am < 0) throw InternalError("no simple root of Delta raises " + rs.root_string(gamma));
    u = m.comm_root(u, am, one);
  }
  throw InternalError("extraction from the parabolic did not terminate");
}

}  // namespace

GroupElement ensure_word(const GroupElement& g, const std::string& label) {
  if (g.word) return g;
  return with_word(g, word::input(label, g));
}

bool check_witness(const Model& m, const Ring& ring, const Witness& w) {
  if (!w.word) return false;
  GroupElement g = replay(m, ring, w.word);
  return g.mat == m.root_elt(w.root, w.value).mat;
}

Extraction extract_from_P(const Model& m, const GroupElement& g0, const Ideal& ideal, int side) {
  if (side > 0 ? !in_P(m, g0) : !in_Pminus(m, g0))
    throw DomainError(side > 0 ? "element is not in P" : "element is not in P^-");
  const GroupElement g = ensure_word(g0);
  const char* route = side > 0 ? "P" : "P-";
  LeviSplit s = levi_unipotent_split(m, g, 0, side);
  std::vector<RingElem> xi = unipotent_coords(m, s.u, 0, side);
  int beta = -1;
  for (int b : unipotent_roots(m, 0, side))
    if (!ideal.contains(xi[b])) {
      beta = b;
      break;
    }
  if (beta < 0) return {std::nullopt, "every root coordinate lies in the ideal", 0};
  if (s.l.mat.is_identity()) return greedy(m, g, ideal, side, route);
  // [u, x_a(1)] = ^g[l^-1, x_a(1)] [g, x_a(1)], and [l^-1, x_a(1)] lies in E(Delta, R)
  const RingElem one = g.ring().one();
  int a = m.rs().partner_root(beta);
  GroupElement h = m.comm_root(s.u, a, one);
  Word lw = word::levi(g.word, 0, side, "L normalizes E(Delta,R)");
  Word root = word::root(a, one);
  h.word = word::mul({word::conj(g.word, word::comm(word::inv(lw), root)), word::comm(g.word, root)});
  Extraction r = greedy(m, h, ideal, side, route);
  ++r.steps;
  return r;
}

Extraction extract_from_U_lambda(const Model& m, const GroupElement& u0, int lambda1, const SigmaPair& sigma) {
  const RootSystem& rs = m.rs();
  const SigmaSplit split = m.wm().sigma_split(lambda1);
  const GroupElement u = ensure_word(u0, "u");
  std::vector<RingElem> xi = unipotent_coords(m, u, lambda1, 1);
  const int sm = split.minus.at(0);
  const RingElem one = u.ring().one();
  for (int b1 : split.plus) {
    if (sigma.plus.contains(xi[b1])) continue;
    for (int gamma : split.delta_cap) {
      if (rs.sum_index(b1, gamma) < 0 || rs.sum_index(sm, gamma) >= 0) continue;
      GroupElement v = m.comm_root(u, gamma, one);
      std::vector<RingElem> eta = unipotent_coords(m, v, lambda1, 1);
      for (int b : split.zero)
        if (!eta[b].is_zero()) m.right_mul(v, b, -eta[b]);
      if (!in_P(m, v)) throw InternalError("cleared element of U_lambda1 is not in P");
      Extraction r = greedy(m, v, sigma.plus, 1, "P_lambda");
      r.steps += 1;
      if (r.witness) return r;
    }
  }
  if (!sigma.minus.contains(xi[sm])) {
    GroupElement v = u;
    for (int b : unipotent_roots(m, lambda1, 1))
      if (b != sm && !xi[b].is_zero()) {
        if (rs.omega_sign(b) > 0 && !sigma.plus.contains(xi[b])) return {std::nullopt, "mixed coordinates", 0};
        append(m, v, b, -xi[b]);
      }
    return {finish(m, v, sm, xi[sm], "P_lambda"), "", 1};
  }
  return {std::nullopt, "coordinates of U_lambda1 lie in the level", 0};
}

Extraction extract_from_P_lambda(const Model& m, const GroupElement& g0, int lambda1, const SigmaPair& sigma) {
  const WeightModule& wm = m.wm();
  if (lambda1 < 0 || lambda1 >= m.dim() || wm.component(lambda1) != 1)
    throw DomainError("lambda1 must lie in Lambda_1");
  if (!in_P(m, g0, lambda1)) throw DomainError("element is not in P_lambda1");
  if (auto why = root_type_violation(m, g0)) throw DomainError("element is not root-type: " + *why);
  if (row_in(m, g0, sigma.plus)) return {std::nullopt, "element lies in G(Phi,Delta,R,(I+,R))", 0};
  const GroupElement g = ensure_word(g0);
  const SigmaSplit split = wm.sigma_split(lambda1);
  const RingElem one = g.ring().one();
  for (int g1r : split.delta_cap_prime) {
    GroupElement g1 = m.conj_root(g, g1r, one);
    if (row_in(m, g1, sigma.plus)) continue;
    LeviSplit s1 = levi_unipotent_split(m, g1, lambda1, 1);
    if (!row_in(m, s1.l, sigma.plus)) {
      GroupElement g1i = g1.inverse();
      for (int g2r : split.zero) {
        GroupElement h = m.conj_root(g1i, g2r, one);
        if (row_in(m, h, sigma.plus)) continue;
        Extraction r = extract_from_U_lambda(m, h, lambda1, sigma);
        r.steps += 2;
        if (r.witness) return r;
      }
    } else {
      for (int g2r : split.delta_cap_prime) {
        GroupElement g2 = m.conj_root(g1, g2r, one);
        if (row_in(m, g2, sigma.plus)) continue;
        LeviSplit s2 = levi_unipotent_split(m, g2, lambda1, 1);
        GroupElement u2 = s2.u;
        u2.word = word::unip(g2.word, lambda1, 1, "Levi part l1 x l1^-1 lies in E(Phi,Delta,R,sigma) since l1 lies in G_sigma");
        Extraction r = extract_from_U_lambda(m, u2, lambda1, sigma);
        r.steps += 2;
        if (r.witness) return r;
      }
    }
  }
  return {std::nullopt, "no conjugate escapes G(Phi,Delta,R,(I+,R))", 0};
}

NilpotentStep nilpotent_step(const Model& m, const GroupElement& g0, const Ideal& b) {
  if (!b.square().is_zero()) throw DomainError("the ideal must square to zero");
  if (!g0.mat.reduce(b).is_identity()) throw DomainError("element is not congruent to e modulo the ideal");
  if (in_Pminus(m, g0)) throw DomainError("element lies in P^-");
  const GroupElement g = ensure_word(g0);
  int lambda1 = -1;
  for (int j = 1; j < m.dim() && lambda1 < 0; ++j)
    if (!g(0, j).is_zero()) lambda1 = j;
  if (m.wm().component(lambda1) != 1) throw InternalError("vanishing lemma violated at weight " + std::to_string(lambda1));
  const RingElem one = g.ring().one();
  for (int a : m.rs().delta()) {
    GroupElement h = m.conj_root(g, a, one);
    if (in_P(m, h, lambda1) && !in_Pminus(m, h)) return {h, lambda1, a};
  }
  throw InternalError("no root of Delta stabilizes the line of the column of g^-1");
}

Extraction extract_from_nilpotent(const Model& m, const GroupElement& g, const Ideal& b, const SigmaPair& sigma) {
  NilpotentStep s = nilpotent_step(m, g, b);
  Extraction r = extract_from_P_lambda(m, s.h, s.lambda1, sigma);
  if (r.witness) r.witness->route = "nilpotent";
  r.steps += 1;
  return r;
}

}  // namespace sandwich
