#include "sandwich/forms.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "sandwich/errors.hpp"

namespace sandwich {

namespace mp = boost::multiprecision;

RingElem BilinearForm::operator()(const std::vector<RingElem>& u, const std::vector<RingElem>& v) const {
  RingElem s = u.at(0).ring().zero();
  for (std::size_t lam = 0; lam < eps.size(); ++lam) {
    RingElem t = u[lam] * v[opp[lam]];
    s = eps[lam] > 0 ? s + t : s - t;
  }
  return s;
}

Matrix BilinearForm::matrix(const Model& m, const Ring& ring) const {
  Matrix h(ring, m.dim());
  for (int lam = 0; lam < m.dim(); ++lam) h.at(lam, m.wm().negative(lam)) = ring.from_int_res(eps[lam]);
  return h;
}

BilinearForm build_bilinear(const Model& m) {
  if (m.type() != CaseType::second) throw Unsupported("not applicable: first type");
  const WeightModule& wm = m.wm();
  const RootSystem& rs = m.rs();
  const int n = m.dim();
  BilinearForm h{std::vector<int>(n, 0), {}};
  for (int lam = 0; lam < n; ++lam) h.opp.push_back(wm.negative(lam));
  h.eps[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int lam = queue[k];
    for (int v = 0; v < rs.rank(); ++v)
      for (int a : {rs.simple(v), rs.neg(rs.simple(v))}) {
        int mu = wm.shift(lam, a);
        if (mu < 0) continue;
        // invariance under x_alpha(1) on the pair (v^lambda, v^{-mu})
        int val = -h.eps[lam] * m.sign(lam, a) * m.sign(wm.negative(mu), a);
        if (h.eps[mu] == 0) {
          h.eps[mu] = val;
          queue.push_back(mu);
        } else if (h.eps[mu] != val) {
          throw InternalError("bilinear form signs conflict");
        }
      }
  }
  if (std::find(h.eps.begin(), h.eps.end(), 0) != h.eps.end()) throw InternalError("bilinear form signs incomplete");
  for (int a = 0; a < rs.size(); ++a)
    if (!preserves(m, h, m.root_elt(a, Ring::integers().one())))
      throw InternalError("bilinear form not invariant under " + rs.root_string(a));
  return h;
}

bool preserves(const Model& m, const BilinearForm& h, const GroupElement& g) {
  const Ring& r = g.ring();
  const int n = m.dim();
  const WeightModule& wm = m.wm();
  // (g^T H g)_{ij} = sum_a g_{a,i} eps_a g_{-a,j}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Residues s = r.zero_res();
      for (int a = 0; a < n; ++a) {
        const Residues& x = g.mat.at(a, i);
        if (r.is_zero(x)) continue;
        Residues t = r.mul(x, g.mat.at(wm.negative(a), j));
        s = h.eps[a] > 0 ? r.add(s, t) : r.sub(s, t);
      }
      Residues want = j == wm.negative(i) ? r.from_int_res(h.eps[i]) : r.zero_res();
      if (!(s == want)) return false;
    }
  return true;
}

std::int64_t QuadraticForm::coeff(int a, int b) const {
  auto it = coeffs.find({std::min(a, b), std::max(a, b)});
  return it == coeffs.end() ? 0 : it->second;
}

bool QuadraticForm::has_diagonal() const {
  for (auto& [k, v] : coeffs)
    if (k.first == k.second && v != 0) return true;
  return false;
}

RingElem QuadraticForm::operator()(const std::vector<RingElem>& v) const {
  const Ring& r = v.at(0).ring();
  RingElem s = r.zero();
  for (auto& [k, c] : coeffs) s += r.from_int(c) * v[k.first] * v[k.second];
  return s;
}

std::int64_t QuadraticForm::eval_int(const std::vector<std::int64_t>& v) const {
  __int128 s = 0;
  for (auto& [k, c] : coeffs) s += static_cast<__int128>(c) * v[k.first] * v[k.second];
  if (s > INT64_MAX || s < INT64_MIN) throw DomainError("quadratic form value overflows");
  return static_cast<std::int64_t>(s);
}

QuadraticForm QuadraticForm::substitute(const Model& m, int alpha) const {
  // (x v)_dst = v_dst + c v_src; every other coordinate is unchanged.
  const int n = m.dim();
  std::vector<std::vector<std::pair<int, int>>> lin(n);
  for (int i = 0; i < n; ++i) lin[i].push_back({i, 1});
  for (const RootEntry& e : m.support(alpha)) lin[e.dst].push_back({e.src, e.c});
  QuadraticForm out;
  for (auto& [k, c] : coeffs)
    for (auto [i, ci] : lin[k.first])
      for (auto [j, cj] : lin[k.second]) out.coeffs[{std::min(i, j), std::max(i, j)}] += c * ci * cj;
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

Square find_square(const Model& m, int lambda, int mu) {
  const WeightModule& wm = m.wm();
  if (wm.distance(lambda, mu) != 2) throw DomainError("square needs d(lambda, mu) = 2");
  Square sq;
  for (int nu = 0; nu < m.dim(); ++nu)
    if (nu == lambda || nu == mu || (wm.distance(nu, lambda) == 1 && wm.distance(nu, mu) == 1)) sq.members.push_back(nu);
  if (sq.members.size() < 4) throw DomainError("Omega(lambda, mu) has fewer than 4 weights");
  for (int a : sq.members) {
    std::vector<int> partners;
    for (int b : sq.members)
      if (b != a && wm.distance(a, b) != 1) partners.push_back(b);
    if (partners.size() != 1) throw DomainError("Omega(lambda, mu) is not a square");
    if (a < partners[0]) sq.matching.push_back({a, partners[0]});
  }
  if (sq.matching.size() * 2 != sq.members.size()) throw DomainError("Omega(lambda, mu) matching is not perfect");
  return sq;
}

std::vector<std::vector<std::int64_t>> integer_orbit_vectors(const Model& m, std::size_t count, Rng& rng, int lambda) {
  const RootSystem& rs = m.rs();
  const int n = m.dim();
  std::vector<Model::Monomial> ws;
  for (int v = 0; v < rs.rank(); ++v) ws.push_back(m.simple_weyl(v));
  std::vector<std::vector<std::int64_t>> out;
  constexpr std::int64_t kBound = std::int64_t{1} << 40;
  while (out.size() < count) {
    std::vector<std::int64_t> v(n, 0);
    v[lambda] = 1;
    bool ok = true;
    int len = 8 + rng.below(40);
    for (int step = 0; step < len && ok; ++step) {
      if (rng.coin()) {
        const auto& w = ws[rng.below(rs.rank())];
        std::vector<std::int64_t> nv(n, 0);
        for (int j = 0; j < n; ++j) nv[w.image[j]] = w.sign[j] * v[j];
        v.swap(nv);
      } else {
        int a = rng.below(rs.size());
        std::int64_t xi = rng.coin() ? 1 : -1;
        for (const RootEntry& e : m.support(a)) {
          v[e.dst] += e.c * xi * v[e.src];
          if (v[e.dst] > kBound || v[e.dst] < -kBound) ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(v));
  }
  return out;
}

QuadraticForm square_equation(const Model& m, const Square& sq, int anchor, std::uint64_t seed) {
  const std::size_t k = sq.matching.size();
  Rng rng(seed);
  auto samples = integer_orbit_vectors(m, std::max<std::size_t>(k + 20, 200), rng);
  // Row-reduce the evaluation matrix over Q and read off its kernel.
  std::vector<std::vector<mp::cpp_rational>> a;
  for (const auto& v : samples) {
    std::vector<mp::cpp_rational> row;
    for (auto [i, j] : sq.matching) row.emplace_back(mp::cpp_int(v[i]) * v[j]);
    a.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    mp::cpp_rational s = a[r][c];
    for (auto& x : a[r]) x /= s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mp::cpp_rational f = a[i][c];
      for (std::size_t j = 0; j < k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (pivot_col.size() + 1 != k) throw InternalError("square equation kernel has dimension " + std::to_string(k - pivot_col.size()) + " over " + std::to_string(k) + " pairs");
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
  std::vector<mp::cpp_rational> x(k, 0);
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free_col];
  mp::cpp_int den = 1;
  for (auto& q : x) den = mp::lcm(den, mp::denominator(q));
  std::vector<mp::cpp_int> z;
  mp::cpp_int g = 0;
  for (auto& q : x) {
    z.push_back(mp::numerator(q) * (den / mp::denominator(q)));
    g = mp::gcd(g, z.back());
  }
  QuadraticForm q;
  int anchor_sign = 0;
  for (std::size_t i = 0; i < k; ++i) {
    mp::cpp_int c = z[i] / g;
    if (c != 1 && c != -1) throw InternalError("square equation coefficient is not +-1");
    auto [u, v] = sq.matching[i];
    q.coeffs[{u, v}] = c.convert_to<std::int64_t>();
    if (u == anchor || v == anchor) anchor_sign = c.convert_to<int>();
  }
  if (anchor_sign == 0) throw DomainError("anchor weight is not in the square");
  if (anchor_sign < 0)
    for (auto& [key, c] : q.coeffs) c = -c;
  for (const auto& v : integer_orbit_vectors(m, std::max<std::size_t>(200, k + 20), rng))
    if (q.eval_int(v) != 0) throw InternalError("square equation fails on a fresh orbit vector");
  return q;
}

PiForm build_pi_form(const Model& m, std::uint64_t seed) {
  if (m.type() != CaseType::second) throw Unsupported("not applicable: first type");
  const WeightModule& wm = m.wm();
  const int target = wm.negative(0);
  PiForm out;
  for (int mu : wm.component_members(2)) {
    if (wm.distance(0, mu) != 2) continue;
    if (out.mu1 < 0 || wm.distance(mu, target) < wm.distance(out.mu1, target)) out.mu1 = mu;
  }
  if (out.mu1 < 0) throw InternalError("no weight of Lambda_2 at distance 2 from lambda_0");
  out.path.push_back(out.mu1);
  while (out.path.back() != target) {
    int cur = out.path.back(), next = -1;
    for (int nu = 0; nu < m.dim() && next < 0; ++nu)
      if (wm.distance(cur, nu) == 1 && wm.distance(nu, target) + 1 == wm.distance(cur, target)) next = nu;
    out.path.push_back(next);
  }
  out.square = find_square(m, 0, out.mu1);
  out.q = square_equation(m, out.square, 0, seed);
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
    std::int64_t c = out.q.coeff(0, out.path[i]);
    if (c != 1 && c != -1) throw InternalError("intermediate coefficient q_{lambda_0,mu_i} is not +-1");
    int gamma = wm.difference_root(out.path[i], out.path[i + 1]);
    out.q = out.q.substitute(m, gamma);
  }
  std::int64_t c = out.q.coeff(0, target);
  if (c != 1 && c != -1) throw InternalError("q_{lambda_0,-lambda_0} is not +-1");
  if (out.q.has_diagonal()) throw InternalError("pi-form has diagonal terms");
  return out;
}

std::vector<RingElem> covector_to_vector(const Model& m, const BilinearForm& h, const std::vector<RingElem>& y) {
  std::vector<RingElem> u(y.size());
  for (int lam = 0; lam < m.dim(); ++lam) {
    const RingElem& e = y[m.wm().negative(lam)];
    u[lam] = h.eps[lam] > 0 ? e : -e;
  }
  return u;
}

}  // namespace sandwich
