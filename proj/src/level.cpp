#include "sandwich/level.hpp"

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

RingElem pick(const std::vector<RingElem>& v, Rng& rng) { return v[rng.below(static_cast<int>(v.size()))]; }

std::vector<RingElem> nonzero(std::vector<RingElem> v) {
  std::erase_if(v, [](const RingElem& x) { return x.is_zero(); });
  return v;
}

// Letters of an H-word: extra generators and their inverses, root elements of
// Delta, and level letters for the current lower bound.
struct Alphabet {
  const Model& m;
  std::vector<GroupElement> extra;
  std::vector<RingElem> ring_elems, plus_elems, minus_elems;

  Alphabet(const Model& model, const Ring& ring, const std::vector<GroupElement>& ex) : m(model) {
    for (std::size_t i = 0; i < ex.size(); ++i) {
      GroupElement e = ensure_word(ex[i], "extra" + std::to_string(i));
      extra.push_back(e.inverse());
      extra.push_back(e);
    }
    ring_elems = nonzero(ring.elements());
  }

  void set_level(const SigmaPair& s) {
    plus_elems = nonzero(s.plus.elements());
    minus_elems = nonzero(s.minus.elements());
  }

  GroupElement word(const Ring& ring, int length, Rng& rng) const {
    const RootSystem& rs = m.rs();
    GroupElement g = m.identity(ring);
    for (int i = 0; i < length; ++i) {
      int kind = rng.below(3);
      if (kind == 0 && !extra.empty()) {
        g = m.mul(g, extra[rng.below(static_cast<int>(extra.size()))]);
      } else if (kind == 1 && !(plus_elems.empty() && minus_elems.empty())) {
        bool plus = minus_elems.empty() || (!plus_elems.empty() && rng.coin());
        const auto& orbit = plus ? rs.omega_plus() : rs.omega_minus();
        int b = orbit[rng.below(static_cast<int>(orbit.size()))];
        RingElem xi = pick(plus ? plus_elems : minus_elems, rng);
        m.right_root(g.mat, b, xi.residues());
        m.left_root(g.inv, b, (-xi).residues());
        g.word = word::mul({g.word, word::level(b, xi, "coefficient lies in the certified level")});
      } else if (!ring_elems.empty()) {
        int a = rs.delta()[rng.below(static_cast<int>(rs.delta().size()))];
        m.right_mul(g, a, pick(ring_elems, rng));
      }
    }
    return g;
  }
};

}  // namespace

std::vector<std::pair<int, RingElem>> sigma_generators(const Model& m, const SigmaPair& sigma) {
  const RootSystem& rs = m.rs();
  const Ring& ring = sigma.ring();
  std::vector<RingElem> all = nonzero(ring.elements());
  std::vector<RingElem> plus = nonzero(sigma.plus.elements());
  std::vector<RingElem> minus = nonzero(sigma.minus.elements());
  std::vector<std::pair<int, RingElem>> out;
  for (int a = 0; a < rs.size(); ++a) {
    int s = rs.omega_sign(a);
    for (const RingElem& xi : s == 0 ? all : s > 0 ? plus : minus) out.emplace_back(a, xi);
  }
  return out;
}

GroupElement sample_word(const Model& m, const Ring& ring, const std::vector<std::pair<int, RingElem>>& gens,
                         int length, Rng& rng) {
  GroupElement g = m.identity(ring);
  if (gens.empty()) return g;
  for (int i = 0; i < length; ++i) {
    const auto& [a, xi] = gens[rng.below(static_cast<int>(gens.size()))];
    m.right_mul(g, a, xi);
  }
  return g;
}

GroupElement sample_normalizer_element(const Model& m, const SigmaPair& sigma, int length, Rng& rng) {
  const Ring& ring = sigma.ring();
  const RootSystem& rs = m.rs();
  GroupElement g = sample_word(m, ring, sigma_generators(m, sigma), length, rng);
  std::vector<RingElem> units = ring.units();
  for (int v = 0; v < rs.rank(); ++v) {
    RingElem eps = pick(units, rng);
    if (!eps.is_one()) g = m.mul(g, m.torus(rs.simple(v), eps));
  }
  std::vector<std::pair<int, RingElem>> delta;
  for (const auto& gen : sigma_generators(m, SigmaPair::zero(ring)))
    if (rs.in_delta(gen.first)) delta.push_back(gen);
  return m.mul(g, sample_word(m, ring, delta, length, rng));
}

TransporterResult transporter_check(const Model& m, const GroupElement& g, const SigmaPair& sigma,
                                    std::size_t budget, std::uint64_t seed) {
  auto gens = sigma_generators(m, sigma);
  if (gens.size() > budget) {
    Rng rng(seed);
    std::vector<std::pair<int, RingElem>> sample;
    for (std::size_t i = 0; i < budget; ++i) sample.push_back(gens[rng.below(static_cast<std::uint64_t>(gens.size()))]);
    gens.swap(sample);
  }
  TransporterResult out;
  for (const auto& [a, xi] : gens) {
    ++out.checked;
    if (!in_G_sigma(m, m.conj_root(g, a, xi), sigma)) {
      out.pass = false;
      out.counterexample = "x" + m.rs().root_string(a) + "(" + xi.to_string() + ")";
      break;
    }
  }
  return out;
}

std::string verdict_name(LevelVerdict v) {
  switch (v) {
    case LevelVerdict::reached: return "reached";
    case LevelVerdict::exceeds: return "exceeds";
    case LevelVerdict::incomplete: return "incomplete";
    case LevelVerdict::consistent: return "consistent";
  }
  return "?";
}

std::optional<Witness> try_extract(const Model& m, const GroupElement& f, const SigmaPair& lower) {
  if (in_P(m, f))
    if (auto r = extract_from_P(m, f, lower.plus, 1); r.witness) return r.witness;
  if (in_Pminus(m, f))
    if (auto r = extract_from_P(m, f, lower.minus, -1); r.witness) return r.witness;
  bool root_type = !root_type_violation(m, f);
  if (root_type)
    for (int lam : m.wm().component_members(1))
      if (in_P(m, f, lam))
        if (auto r = extract_from_P_lambda(m, f, lam, lower); r.witness) return r.witness;
  if (!in_Pminus(m, f))
    for (const Ideal& b : all_ideals(f.ring())) {
      if (b.is_zero() || !b.square().is_zero() || !f.mat.reduce(b).is_identity()) continue;
      if (auto r = extract_from_nilpotent(m, f, b, lower); r.witness) return r.witness;
    }
  return std::nullopt;
}

LevelCertificate level_certificate(const Model& m, const Ring& ring, const std::vector<GroupElement>& extra,
                                   const std::optional<SigmaPair>& target, const LevelOptions& opt) {
  if (!ring.is_finite()) throw Unsupported("level certificates need a finite ring");
  LevelCertificate cert;
  cert.lower = SigmaPair::zero(ring);
  cert.target = target;
  const SigmaPair full{Ideal::unit(ring), Ideal::unit(ring)};
  Alphabet alpha(m, ring, extra);

  bool verifying = false;
  auto finished = [&] {
    if (cert.lower == full) return true;
    if (!target) return false;
    return !target->contains(cert.lower) || (!verifying && cert.lower == *target);
  };
  // Feeds f until it yields nothing new.
  auto absorb = [&](const GroupElement& f) {
    while (!finished()) {
      std::optional<Witness> w = try_extract(m, f, cert.lower);
      if (!w) return;
      if (!check_witness(m, ring, *w)) throw InternalError("witness word does not replay to its root element");
      Ideal add = Ideal::principal(w->value);
      if (m.rs().omega_sign(w->root) > 0) cert.lower.plus = cert.lower.plus + add;
      else cert.lower.minus = cert.lower.minus + add;
      cert.witnesses.push_back(std::move(*w));
      alpha.set_level(cert.lower);
    }
  };

  const RingElem one = ring.one();
  const RootSystem& rs = m.rs();
  for (const GroupElement& e : alpha.extra) {
    absorb(e);
    for (int v = 0; v < rs.rank(); ++v) {
      if (v == rs.alpha1_vertex()) continue;
      absorb(m.conj_root(e, rs.simple(v), one));
      absorb(m.conj_root(e, rs.neg(rs.simple(v)), one));
    }
  }
  Rng rng(opt.seed);
  while (cert.rounds < opt.budget && !finished()) {
    ++cert.rounds;
    GroupElement f = alpha.word(ring, opt.word_length, rng);
    absorb(f);
    int a = rs.delta()[rng.below(static_cast<int>(rs.delta().size()))];
    absorb(m.conj_root(f, a, one));
  }

  Rng srng(opt.seed ^ 0x5bd1e995ULL);
  verifying = true;
  for (int i = 0; i < opt.samples; ++i) {
    GroupElement f = alpha.word(ring, opt.word_length, srng);
    ++cert.samples_checked;
    if (in_normalizer(m, f, cert.lower)) continue;
    // An escaping element of H still carries level the extraction missed.
    const SigmaPair before = cert.lower;
    absorb(f);
    for (int a : rs.delta()) absorb(m.conj_root(f, a, one));
    if (target && !target->contains(cert.lower)) break;
    if (!(cert.lower == before) && !finished()) {
      i = -1;
      continue;
    }
    if (cert.lower == before || !in_normalizer(m, f, cert.lower)) {
      cert.escape = word::to_string(m, f.word);
      break;
    }
  }

  if (target && !target->contains(cert.lower)) cert.verdict = LevelVerdict::exceeds;
  else if (!cert.escape.empty()) cert.verdict = LevelVerdict::incomplete;
  else if (target) cert.verdict = cert.lower == *target ? LevelVerdict::reached : LevelVerdict::incomplete;
  else cert.verdict = LevelVerdict::consistent;
  return cert;
}

ReductionCheck level_reduction_check(const Model& m, const Ring& ring, const std::vector<GroupElement>& extra,
                                     const Ideal& ideal, const SigmaPair& sigma, const LevelOptions& opt) {
  ReductionCheck out;
  out.expected = sigma.reduce(ideal);
  out.reduced = out.rerun = out.expected;
  if (ideal.is_unit()) {
    out.detail = "quotient ring is zero";
    return out;
  }
  auto fail = [&](std::string why) {
    out.pass = false;
    out.detail = std::move(why);
    return out;
  };
  LevelCertificate cert = level_certificate(m, ring, extra, sigma, opt);
  if (cert.verdict != LevelVerdict::reached)
    return fail("level over R not certified: " + verdict_name(cert.verdict) + " at " + cert.lower.to_string());
  const Ring q = ideal.quotient_ring();
  out.reduced = SigmaPair::zero(q);
  for (const Witness& w : cert.witnesses) {
    GroupElement g = m.reduce(replay(m, ring, w.word), ideal);
    RingElem v = ideal.reduce(w.value);
    if (!(g.mat == m.root_elt(w.root, v).mat)) return fail("reduced witness is not x_alpha(rho_I(xi))");
    Ideal add = Ideal::principal(v);
    if (m.rs().omega_sign(w.root) > 0) out.reduced.plus = out.reduced.plus + add;
    else out.reduced.minus = out.reduced.minus + add;
  }
  if (!(out.reduced == out.expected))
    return fail("reduced witnesses generate " + out.reduced.to_string() + ", expected " + out.expected.to_string());
  std::vector<GroupElement> reduced_extra;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    GroupElement r = m.reduce(extra[i], ideal);
    reduced_extra.push_back(with_word(r, word::input("extra" + std::to_string(i), r)));
  }
  LevelCertificate cert2 = level_certificate(m, q, reduced_extra, out.expected, opt);
  out.rerun = cert2.lower;
  if (cert2.verdict != LevelVerdict::reached)
    return fail("level of the reduced group: " + verdict_name(cert2.verdict) + " at " + cert2.lower.to_string() +
                (cert2.escape.empty() ? "" : ", escaping sample " + cert2.escape));
  return out;
}

}  // namespace sandwich
