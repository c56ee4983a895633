#pragma once

// Level certificates for overgroups H = <E(Delta,R), extra>, generator
// enumeration for E(Phi,Delta,R,sigma), the transporter check and the level
// reduction check.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sandwich/extraction.hpp"
#include "sandwich/rng.hpp"

namespace sandwich {

/// The generators x_alpha(xi) of E(Phi,Delta,R,sigma) with xi != 0:
/// alpha in Delta with xi in R, alpha in Omega^+ with xi in I^+, alpha in
/// Omega^- with xi in I^-. Finite rings only.
std::vector<std::pair<int, RingElem>> sigma_generators(const Model& m, const SigmaPair& sigma);

/// Product of `length` generators drawn uniformly from `gens`.
GroupElement sample_word(const Model& m, const Ring& ring, const std::vector<std::pair<int, RingElem>>& gens,
                         int length, Rng& rng);

/// An element of E(Phi,Delta,R,sigma) T(Phi,R) G(Delta,R) as a word.
GroupElement sample_normalizer_element(const Model& m, const SigmaPair& sigma, int length, Rng& rng);

struct TransporterResult {
  bool pass = true;
  std::size_t checked = 0;
  std::string counterexample;
};
/// g x g^{-1} in G(Phi,Delta,R,sigma) for the generators x of
/// E(Phi,Delta,R,sigma); all of them when there are at most `budget`, else a
/// seeded sample of that size.
TransporterResult transporter_check(const Model& m, const GroupElement& g, const SigmaPair& sigma,
                                    std::size_t budget = SIZE_MAX, std::uint64_t seed = 1);

enum class LevelVerdict { reached, exceeds, incomplete, consistent };
std::string verdict_name(LevelVerdict v);

struct LevelOptions {
  std::uint64_t seed = 1;
  int budget = 200;       // random rounds after the deterministic pass
  int word_length = 6;
  int samples = 50;       // H-words checked against the normalizer of the lower bound
};

struct LevelCertificate {
  SigmaPair lower;
  std::optional<SigmaPair> target;
  std::vector<Witness> witnesses;
  LevelVerdict verdict = LevelVerdict::incomplete;
  int rounds = 0;
  int samples_checked = 0;
  std::string escape;  // word of a sampled H element outside the normalizer, if any
};

/// Accumulates witnesses for H = <E(Delta,R), extra> until the lower bound
/// reaches `target` or the budget runs out. Without a target the verdict is
/// `consistent` when every sampled H-word satisfies the normalizer
/// conditions of the lower bound.
LevelCertificate level_certificate(const Model& m, const Ring& ring, const std::vector<GroupElement>& extra,
                                   const std::optional<SigmaPair>& target, const LevelOptions& opt = {});

/// One extraction attempt on f against the level `lower`.
std::optional<Witness> try_extract(const Model& m, const GroupElement& f, const SigmaPair& lower);

struct ReductionCheck {
  bool pass = true;
  SigmaPair expected;  // rho_I(sigma)
  SigmaPair reduced;   // level generated by the reduced witnesses
  SigmaPair rerun;     // certificate lower bound over R/I
  std::string detail;
};
/// Certifies lev(H) = sigma, reduces the witnesses modulo I and checks them
/// against rho_I(sigma), reruns the certificate for rho_I(H) over R/I and
/// samples rho_I(H) against the reduced normalizer conditions.
ReductionCheck level_reduction_check(const Model& m, const Ring& ring, const std::vector<GroupElement>& extra,
                                     const Ideal& ideal, const SigmaPair& sigma, const LevelOptions& opt = {});

}  // namespace sandwich
