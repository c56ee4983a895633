#include "sandwich/chevalley.hpp"

#include "sandwich/errors.hpp"
#include "sandwich/word.hpp"

namespace sandwich {

GroupElement GroupElement::inverse() const {
  GroupElement out{inv, mat, word ? word::inv(word) : nullptr};
  return out;
}

std::shared_ptr<const Model> Model::build(CaseTag tag, int l) {
  std::shared_ptr<Model> m(new Model());
  m->rs_ = RootSystem::build(tag, l);
  m->wm_ = WeightModule::build(m->rs_);
  m->build_signs();
  return m;
}

Model::Monomial Model::simple_weyl(int vertex) const {
  const int n = dim();
  const int a = rs_.simple(vertex);
  Monomial w{std::vector<int>(n), std::vector<int>(n, 1)};
  for (int lam = 0; lam < n; ++lam) {
    int p = wm_.weight(lam)[vertex];
    if (p == -1) {
      w.image[lam] = wm_.shift(lam, a);
    } else if (p == 1) {
      w.image[lam] = wm_.shift(lam, rs_.neg(a));
      w.sign[lam] = -1;
    } else {
      w.image[lam] = lam;
    }
  }
  return w;
}

void Model::build_signs() {
  const int n = dim(), nr = rs_.size();
  sign_.assign(static_cast<std::size_t>(n) * nr, 0);
  std::vector<char> done(nr, 0);
  auto set_simple = [&](int alpha) {
    for (int lam = 0; lam < n; ++lam)
      if (wm_.shift(lam, alpha) >= 0) sign_[lam * nr + alpha] = 1;
    done[alpha] = 1;
  };
  for (int v = 0; v < rs_.rank(); ++v) {
    set_simple(rs_.simple(v));
    set_simple(rs_.neg(rs_.simple(v)));
  }
  std::vector<Monomial> ws;
  for (int v = 0; v < rs_.rank(); ++v) ws.push_back(simple_weyl(v));

  // e_alpha = w_j e_{alpha - alpha_j} w_j^{-1} for the first simple alpha_j
  // with alpha - alpha_j positive; e_{-alpha} uses the same w_j.
  for (int alpha = 0; alpha < nr; ++alpha) {
    if (!rs_.is_positive(alpha) || done[alpha]) continue;
    int vertex = -1, beta = -1;
    for (int v = 0; v < rs_.rank() && vertex < 0; ++v) {
      int b = rs_.sum_index(alpha, rs_.neg(rs_.simple(v)));
      if (b >= 0 && rs_.is_positive(b)) {
        vertex = v;
        beta = b;
      }
    }
    if (vertex < 0 || !done[beta]) throw InternalError("sign construction order broken");
    const Monomial& w = ws[vertex];
    for (auto [src, dst] : {std::pair{beta, alpha}, std::pair{rs_.neg(beta), rs_.neg(alpha)}}) {
      for (int lam = 0; lam < n; ++lam) {
        int c = sign_[lam * nr + src];
        if (c == 0) continue;
        int top = wm_.shift(lam, src);
        int img = w.image[lam];
        if (wm_.shift(img, dst) != w.image[top]) throw InternalError("Weyl conjugation moved the support");
        sign_[img * nr + dst] = w.sign[lam] * w.sign[top] * c;
      }
      done[dst] = 1;
    }
  }
  support_.assign(nr, {});
  for (int alpha = 0; alpha < nr; ++alpha)
    for (int lam = 0; lam < n; ++lam) {
      int dst = wm_.shift(lam, alpha);
      int c = sign_[lam * nr + alpha];
      if ((dst >= 0) != (c != 0)) throw InternalError("sign table does not match the weight shifts");
      if (c != 0 && c != 1 && c != -1) throw InternalError("sign constant outside {+1,-1}");
      if (dst >= 0) support_[alpha].push_back({lam, dst, c});
    }
}

GroupElement Model::identity(const Ring& ring) const {
  Matrix e = Matrix::identity(ring, dim());
  return {e, e, word::mul({})};
}

void Model::left_root(Matrix& m, int alpha, const Residues& xi) const {
  const Ring& r = m.ring();
  if (r.is_zero(xi)) return;
  Residues neg = r.neg(xi);
  for (const RootEntry& e : support_[alpha]) m.add_row_multiple(e.dst, e.src, e.c > 0 ? xi : neg);
}

void Model::right_root(Matrix& m, int alpha, const Residues& xi) const {
  const Ring& r = m.ring();
  if (r.is_zero(xi)) return;
  Residues neg = r.neg(xi);
  for (const RootEntry& e : support_[alpha]) m.add_col_multiple(e.src, e.dst, e.c > 0 ? xi : neg);
}

void Model::left_mul(GroupElement& g, int alpha, const RingElem& xi) const {
  left_root(g.mat, alpha, xi.residues());
  right_root(g.inv, alpha, (-xi).residues());
  if (g.word) g.word = word::mul({word::root(alpha, xi), g.word});
}

void Model::right_mul(GroupElement& g, int alpha, const RingElem& xi) const {
  right_root(g.mat, alpha, xi.residues());
  left_root(g.inv, alpha, (-xi).residues());
  if (g.word) g.word = word::mul({g.word, word::root(alpha, xi)});
}

GroupElement Model::root_elt(int alpha, const RingElem& xi) const {
  Matrix e = Matrix::identity(xi.ring(), dim());
  GroupElement g{e, e, word::root(alpha, xi)};
  left_root(g.mat, alpha, xi.residues());
  left_root(g.inv, alpha, (-xi).residues());
  return g;
}

GroupElement Model::weyl(int alpha, const RingElem& eps) const {
  if (!eps.is_unit()) throw NonUnit("w_alpha needs a unit");
  GroupElement g = identity(eps.ring());
  g.word = nullptr;
  right_mul(g, alpha, eps);
  right_mul(g, rs_.neg(alpha), -eps.inv());
  right_mul(g, alpha, eps);
  g.word = word::weyl(alpha, eps);
  return g;
}

GroupElement Model::torus(int alpha, const RingElem& eps) const {
  GroupElement a = weyl(alpha, eps);
  GroupElement b = weyl(alpha, eps.ring().one());
  GroupElement h = mul(a, b.inverse());
  h.word = word::torus(alpha, eps);
  return h;
}

GroupElement Model::z_gen(int alpha, const RingElem& xi, const RingElem& zeta) const {
  GroupElement g = root_elt(alpha, zeta);
  right_mul(g, rs_.neg(alpha), xi);
  right_mul(g, alpha, -zeta);
  return g;
}

GroupElement Model::from_matrix(const Matrix& m) const {
  if (m.dim() != dim()) throw DomainError("matrix has the wrong size for this case");
  GroupElement g{m, m.inverse(), nullptr};
  return g;
}

GroupElement Model::mul(const GroupElement& a, const GroupElement& b) const {
  Word w = a.word && b.word ? word::mul({a.word, b.word}) : nullptr;
  return {a.mat * b.mat, b.inv * a.inv, w};
}

GroupElement Model::commutator(const GroupElement& a, const GroupElement& b) const {
  Word w = a.word && b.word ? word::comm(a.word, b.word) : nullptr;
  Matrix m = a.mat * b.mat * a.inv * b.inv;
  Matrix mi = b.mat * a.mat * b.inv * a.inv;
  return {m, mi, w};
}

GroupElement Model::conjugate(const GroupElement& a, const GroupElement& b) const {
  Word w = a.word && b.word ? word::conj(a.word, b.word) : nullptr;
  return {a.mat * b.mat * a.inv, a.mat * b.inv * a.inv, w};
}

namespace {
// e + sum over the support of alpha of (c xi) a[:, dst] a^{-1}[src, :]
Matrix conj_update(const Model& m, const Matrix& a, const Matrix& ai, int alpha, const Residues& xi) {
  const Ring& r = a.ring();
  const int n = a.dim();
  Matrix out = Matrix::identity(r, n);
  Residues nxi = r.neg(xi);
  for (const RootEntry& e : m.support(alpha)) {
    const Residues& s = e.c > 0 ? xi : nxi;
    for (int i = 0; i < n; ++i) {
      const Residues& col = a.at(i, e.dst);
      if (r.is_zero(col)) continue;
      Residues f = r.mul(col, s);
      for (int j = 0; j < n; ++j) {
        const Residues& row = ai.at(e.src, j);
        if (!r.is_zero(row)) out.at(i, j) = r.add(out.at(i, j), r.mul(f, row));
      }
    }
  }
  return out;
}
}  // namespace

GroupElement Model::conj_root(const GroupElement& a, int alpha, const RingElem& xi) const {
  Word w = a.word ? word::conj(a.word, word::root(alpha, xi)) : nullptr;
  return {conj_update(*this, a.mat, a.inv, alpha, xi.residues()),
          conj_update(*this, a.mat, a.inv, alpha, (-xi).residues()), w};
}

GroupElement Model::comm_root(const GroupElement& a, int alpha, const RingElem& xi) const {
  GroupElement g = conj_root(a, alpha, xi);
  right_root(g.mat, alpha, (-xi).residues());
  left_root(g.inv, alpha, xi.residues());
  g.word = a.word ? word::comm(a.word, word::root(alpha, xi)) : nullptr;
  return g;
}

GroupElement Model::reduce(const GroupElement& g, const Ideal& ideal) const {
  return {g.mat.reduce(ideal), g.inv.reduce(ideal), nullptr};
}

std::vector<RingElem> Model::act_on_vector(const GroupElement& g, const std::vector<RingElem>& v) const {
  const Ring& r = g.ring();
  std::vector<RingElem> out(dim(), r.zero());
  for (int i = 0; i < dim(); ++i) {
    Residues s = r.zero_res();
    for (int j = 0; j < dim(); ++j) s = r.add(s, r.mul(g.mat.at(i, j), v[j].residues()));
    out[i] = r.elem(s);
  }
  return out;
}

std::vector<RingElem> Model::act_on_covector(const std::vector<RingElem>& y, const GroupElement& g) const {
  const Ring& r = g.ring();
  std::vector<RingElem> out(dim(), r.zero());
  for (int j = 0; j < dim(); ++j) {
    Residues s = r.zero_res();
    for (int i = 0; i < dim(); ++i) s = r.add(s, r.mul(y[i].residues(), g.mat.at(i, j)));
    out[j] = r.elem(s);
  }
  return out;
}

}  // namespace sandwich
