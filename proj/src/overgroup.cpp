#include "sandwich/overgroup.hpp"

#include <algorithm>

#include "sandwich/errors.hpp"
#include "sandwich/word.hpp"

namespace sandwich {

SigmaPair SigmaPair::parse(const Ring& ring, const std::string& text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      return {Ideal::parse(ring, text.substr(0, i)), Ideal::parse(ring, text.substr(i + 1))};
  }
  throw UsageError("sigma must look like \"(2),(0)\"");
}

bool in_P(const Model& m, const GroupElement& g, int lambda) {
  const Ring& r = g.ring();
  for (int i = 0; i < m.dim(); ++i)
    if (i != lambda && !r.is_zero(g.mat.at(i, lambda))) return false;
  return true;
}

bool in_Pminus(const Model& m, const GroupElement& g, int lambda) {
  const Ring& r = g.ring();
  for (int j = 0; j < m.dim(); ++j)
    if (j != lambda && !r.is_zero(g.mat.at(lambda, j))) return false;
  return true;
}

bool in_L(const Model& m, const GroupElement& g, int lambda) {
  const Ring& r = g.ring();
  const WeightModule& wm = m.wm();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (wm.distance(lambda, i) != wm.distance(lambda, j) && !r.is_zero(g.mat.at(i, j))) return false;
  return true;
}

bool row_in(const Model& m, const GroupElement& g, const Ideal& ideal) {
  for (int j = 1; j < m.dim(); ++j)
    if (!ideal.contains(g(0, j))) return false;
  return true;
}

bool col_in(const Model& m, const GroupElement& g, const Ideal& ideal) {
  for (int i = 1; i < m.dim(); ++i)
    if (!ideal.contains(g(i, 0))) return false;
  return true;
}

ParabolicProfile profile(const Model& m, const GroupElement& g) {
  ParabolicProfile p{in_P(m, g), in_Pminus(m, g), in_L(m, g), {}, {}};
  for (int lam : m.wm().component_members(1)) {
    if (in_P(m, g, lam)) p.P_lambda1.push_back(lam);
    if (in_Pminus(m, g, lam)) p.Pminus_lambda1.push_back(lam);
  }
  return p;
}

bool in_G_sigma(const Model& m, const GroupElement& g, const SigmaPair& sigma) {
  return col_in(m, g, sigma.minus) && row_in(m, g, sigma.plus);
}

bool in_normalizer(const Model& m, const GroupElement& g, const SigmaPair& sigma) {
  if (m.type() == CaseType::first) return in_G_sigma(m, g, sigma);
  const int opp = m.wm().negative(0);
  for (int lam = 1; lam < m.dim(); ++lam) {
    if (lam == opp) continue;
    if (!sigma.plus.contains(g(0, lam))) return false;
    if (!sigma.minus.contains(g.inv.elem(lam, 0))) return false;
  }
  Ideal corner = Ideal::principal(g(0, opp));
  if (!sigma.plus.contains(corner * sigma.minus)) return false;
  Ideal corner_inv = Ideal::principal(g.inv.elem(opp, 0));
  return sigma.minus.contains(corner_inv * sigma.plus);
}

std::vector<int> unipotent_roots(const Model& m, int lambda, int side) {
  std::vector<int> out;
  const RootSystem& rs = m.rs();
  for (int b = 0; b < rs.size(); ++b)
    if (m.wm().shift(lambda, rs.neg(b)) >= 0) out.push_back(side > 0 ? b : rs.neg(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RingElem> unipotent_coords(const Model& m, const GroupElement& u, int lambda, int side) {
  const RootSystem& rs = m.rs();
  std::vector<RingElem> xi(rs.size(), u.ring().zero());
  for (int b : unipotent_roots(m, lambda, side)) {
    if (side > 0) {
      int src = m.wm().shift(lambda, rs.neg(b));
      RingElem e = u(lambda, src);
      xi[b] = m.sign(src, b) > 0 ? e : -e;
    } else {
      int dst = m.wm().shift(lambda, b);
      RingElem e = u(dst, lambda);
      xi[b] = m.sign(lambda, b) > 0 ? e : -e;
    }
  }
  return xi;
}

GroupElement unipotent_from_coords(const Model& m, const Ring& ring, const std::vector<RingElem>& xi, int lambda,
                                   int side) {
  GroupElement u = m.identity(ring);
  for (int b : unipotent_roots(m, lambda, side))
    if (!xi[b].is_zero()) m.right_mul(u, b, xi[b]);
  return u;
}

LeviSplit levi_unipotent_split(const Model& m, const GroupElement& g, int lambda, int side) {
  if (side > 0 ? !in_P(m, g, lambda) : !in_Pminus(m, g, lambda))
    throw DecompositionError("element is not in the parabolic subgroup");
  const WeightModule& wm = m.wm();
  const int n = m.dim();
  const Ring& r = g.ring();
  Matrix l(r, n), li(r, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (wm.distance(lambda, i) == wm.distance(lambda, j)) {
        l.at(i, j) = g.mat.at(i, j);
        li.at(i, j) = g.inv.at(i, j);
      }
  if (!(l * li).is_identity()) throw DecompositionError("diagonal blocks are not mutually inverse");
  GroupElement lev{l, li, g.word ? word::levi(g.word, lambda, side, "Levi part") : nullptr};
  GroupElement u{g.mat * li, l * g.inv, g.word ? word::unip(g.word, lambda, side, "unipotent part") : nullptr};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int di = wm.distance(lambda, i), dj = wm.distance(lambda, j);
      const Residues& e = u.mat.at(i, j);
      bool ok = di == dj ? (i == j ? r.is_one(e) : r.is_zero(e)) : ((di < dj) == (side > 0) || r.is_zero(e));
      if (!ok) throw DecompositionError("unipotent part is not unitriangular");
    }
  GroupElement check = unipotent_from_coords(m, r, unipotent_coords(m, u, lambda, side), lambda, side);
  if (!(check.mat == u.mat)) throw DecompositionError("unipotent part is not a product of root elements");
  return {u, lev};
}

CMDecomposition chevalley_matsumoto(const Model& m, const GroupElement& g) {
  const Ring& r = g.ring();
  const RootSystem& rs = m.rs();
  RingElem u0 = g(0, 0);
  if (!u0.is_unit()) throw DecompositionError("corner entry is not a unit");
  RingElem u0i = u0.inv();
  std::vector<RingElem> xi(rs.size(), r.zero());
  for (int a : rs.omega_plus()) {
    int src = m.wm().shift(0, rs.neg(a));
    RingElem e = u0i * g(0, src);
    xi[a] = m.sign(src, a) > 0 ? e : -e;
  }
  GroupElement u = unipotent_from_coords(m, r, xi);
  GroupElement gu = m.mul(g, u.inverse());
  for (int j = 1; j < m.dim(); ++j)
    if (!gu(0, j).is_zero()) throw DecompositionError("row lambda_0 not cleared");
  std::vector<RingElem> eta(rs.size(), r.zero());
  for (int a : rs.omega_plus()) {
    int na = rs.neg(a);
    int dst = m.wm().shift(0, na);
    RingElem e = u0i * gu(dst, 0);
    eta[na] = m.sign(0, na) > 0 ? e : -e;
  }
  GroupElement v = m.identity(r);
  for (int a : rs.omega_plus())
    if (!eta[rs.neg(a)].is_zero()) m.right_mul(v, rs.neg(a), eta[rs.neg(a)]);
  GroupElement g1 = m.mul(v.inverse(), gu);
  if (!in_P(m, g1) || !in_Pminus(m, g1)) throw DecompositionError("middle factor is not in P and P^-");
  if (!in_L(m, g1)) throw DecompositionError("middle factor is not block diagonal");
  return {v, g1, u};
}

bool distance_vanishing(const Model& m, const GroupElement& g) {
  const Ring& r = g.ring();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (m.wm().distance(i, j) >= 2 && !r.is_zero(g.mat.at(i, j))) return false;
  return true;
}

std::optional<std::string> root_type_violation(const Model& m, const GroupElement& g) {
  const Ring& r = g.ring();
  Matrix x = g.mat - Matrix::identity(r, m.dim());
  if (!(x * x).is_zero()) return "(g-e)^2 != 0";
  if (!distance_vanishing(m, g)) return "nonzero entry at distance >= 2";
  const RootSystem& rs = m.rs();
  for (int a = 0; a < rs.size(); ++a) {
    std::optional<Residues> common;
    for (const RootEntry& e : m.support(a)) {
      Residues v = x.at(e.dst, e.src);
      if (e.c < 0) v = r.neg(v);
      if (!common) common = v;
      else if (!(*common == v)) return "entries along root " + rs.root_string(a) + " are not sign-coherent";
    }
  }
  return std::nullopt;
}

bool nilpotent_vanishing_check(const Model& m, const GroupElement& g, const Ideal& b) {
  if (!b.square().is_zero()) throw DomainError("the ideal must square to zero");
  if (!g.mat.reduce(b).is_identity()) throw DomainError("element is not congruent to e modulo the ideal");
  return distance_vanishing(m, g);
}

GroupElement x_mu_nu(const Model& m, const GroupElement& g, int lambda1, int mu, int nu) {
  const WeightModule& wm = m.wm();
  if (wm.distance(lambda1, mu) != 1 || wm.distance(lambda1, nu) != 1 || wm.distance(mu, nu) != 1)
    throw DomainError("x(mu,nu) needs three weights at pairwise distance 1");
  int alpha = wm.difference_root(lambda1, mu);
  int beta = wm.difference_root(lambda1, nu);
  RingElem a = g(nu, lambda1), b = g(mu, lambda1);
  if (m.sign(mu, alpha) < 0) a = -a;
  if (m.sign(nu, beta) > 0) b = -b;
  GroupElement x = m.root_elt(alpha, a);
  m.right_mul(x, beta, b);
  return x;
}

ABIdeals ab_ideals(const Model& m, const GroupElement& g, int lambda1) {
  if (m.wm().component(lambda1) != 1) throw DomainError("ab_ideals needs lambda_1 in Lambda_1");
  std::vector<RingElem> a, ap;
  for (int mu : m.wm().component_members(1)) {
    if (mu == lambda1) continue;
    a.push_back(g(mu, lambda1));
    ap.push_back(g(lambda1, mu));
  }
  const Ring& r = g.ring();
  return {Ideal::from_elems(r, a), Ideal::principal(g(0, lambda1)), Ideal::from_elems(r, ap),
          Ideal::principal(g(lambda1, 0))};
}

}  // namespace sandwich
