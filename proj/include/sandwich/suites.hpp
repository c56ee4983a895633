#pragma once

// Executable check suites. Each returns pass/fail with the first
// counterexample found and the number of individual checks performed.

#include <cstdint>
#include <string>
#include <vector>

#include "sandwich/level.hpp"

namespace sandwich {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string counterexample;
  std::size_t checks = 0;
  double ms = 0;

  /// Records a check; keeps the first failure.
  bool expect(bool ok, const std::string& what);
};

/// Root system and weight combinatorics, exhaustive.
std::vector<SuiteResult> lemma_suite(const Model& m);

/// Steinberg relations over all ordered root pairs with `values` sampled
/// ring values per pair.
SuiteResult steinberg_suite(const Model& m, const Ring& ring, std::uint64_t seed, int values = 1);

/// Matrix identities of root-type elements and of products at angle pi/3.
SuiteResult root_type_suite(const Model& m, const Ring& ring, int count, std::uint64_t seed);

/// h invariance, and vanishing of q on orbit columns over the integers and
/// over `ring`. Second type only.
SuiteResult forms_suite(const Model& m, const Ring& ring, int count, std::uint64_t seed);

/// Round trip g = v g1 u on unit-corner elements.
SuiteResult matsumoto_suite(const Model& m, const Ring& ring, int count, std::uint64_t seed);

/// in_normalizer on E(sigma) T G(Delta) words, transporter_check on the
/// first `transporter` of them.
SuiteResult normalizer_suite(const Model& m, const SigmaPair& sigma, int count, int transporter, std::uint64_t seed);

/// One result per extraction route, over instances with a guaranteed witness
/// plus negative instances where none may be claimed.
std::vector<SuiteResult> extraction_suite(const Model& m, const Ring& ring, int count, std::uint64_t seed);

/// AB in I^+ and A'B' in I^- on root-type members of E(Phi,Delta,R,sigma);
/// with I^+ = 0 also B^3 = 0.
SuiteResult ideal_bounds_suite(const Model& m, const SigmaPair& sigma, int count, std::uint64_t seed);

/// level_reduction_check for single-generator overgroups.
SuiteResult reduction_suite(const Model& m, const Ring& ring, const Ideal& ideal, std::uint64_t seed);

/// Random product of root elements over all of Phi.
GroupElement random_element(const Model& m, const Ring& ring, int length, Rng& rng);

}  // namespace sandwich
