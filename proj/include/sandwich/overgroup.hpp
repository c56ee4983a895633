#pragma once

// Levels, parabolic profiles, the matrix criteria for G(Phi,Delta,R,sigma)
// and its normalizer, and the decompositions used by the extraction code.

#include <optional>
#include <string>
#include <vector>

#include "sandwich/chevalley.hpp"

namespace sandwich {

/// The level sigma = (I^+, I^-).
struct SigmaPair {
  Ideal plus, minus;

  const Ring& ring() const { return plus.ring(); }
  /// Parses "(2),(0)" and similar.
  static SigmaPair parse(const Ring& ring, const std::string& text);
  static SigmaPair zero(const Ring& ring) { return {Ideal::zero(ring), Ideal::zero(ring)}; }
  SigmaPair operator+(const SigmaPair& o) const { return {plus + o.plus, minus + o.minus}; }
  bool operator==(const SigmaPair& o) const { return plus == o.plus && minus == o.minus; }
  /// Componentwise inclusion of o in this pair.
  bool contains(const SigmaPair& o) const { return plus.contains(o.plus) && minus.contains(o.minus); }
  SigmaPair reduce(const Ideal& ideal) const { return {ideal.reduce(plus), ideal.reduce(minus)}; }
  std::string to_string() const { return plus.to_string() + "," + minus.to_string(); }
};

/// Column lambda is a multiple of v^lambda.
bool in_P(const Model& m, const GroupElement& g, int lambda = 0);
/// Row lambda is a multiple of the covector (v^lambda)^*.
bool in_Pminus(const Model& m, const GroupElement& g, int lambda = 0);
/// Block diagonal for the grading nu -> d(lambda, nu).
bool in_L(const Model& m, const GroupElement& g, int lambda = 0);
/// g_{lambda_0, mu} in I for every mu != lambda_0.
bool row_in(const Model& m, const GroupElement& g, const Ideal& ideal);
/// g_{mu, lambda_0} in I for every mu != lambda_0.
bool col_in(const Model& m, const GroupElement& g, const Ideal& ideal);

struct ParabolicProfile {
  bool P, Pminus, L;
  std::vector<int> P_lambda1;       // weights lambda_1 in Lambda_1 with g in P_{lambda_1}
  std::vector<int> Pminus_lambda1;  // same for P^-_{lambda_1}
};
ParabolicProfile profile(const Model& m, const GroupElement& g);

bool in_G_sigma(const Model& m, const GroupElement& g, const SigmaPair& sigma);
bool in_normalizer(const Model& m, const GroupElement& g, const SigmaPair& sigma);

// side = +1 refers to P_lambda, U_lambda; side = -1 to P^-_lambda, U^-_lambda.

/// Roots of U_lambda (beta with lambda - beta a weight), or their negatives.
std::vector<int> unipotent_roots(const Model& m, int lambda = 0, int side = 1);
/// Root coordinates xi_beta of an element of U_lambda (or U^-_lambda),
/// indexed by root; zero outside the unipotent roots.
std::vector<RingElem> unipotent_coords(const Model& m, const GroupElement& u, int lambda = 0, int side = 1);
/// prod x_beta(xi_beta) over the unipotent roots.
GroupElement unipotent_from_coords(const Model& m, const Ring& ring, const std::vector<RingElem>& xi, int lambda = 0,
                                   int side = 1);

struct LeviSplit {
  GroupElement u, l;
};
/// g = u l with u in U_lambda (U^-_lambda) and l block diagonal for the
/// grading by distance to lambda.
LeviSplit levi_unipotent_split(const Model& m, const GroupElement& g, int lambda = 0, int side = 1);

struct CMDecomposition {
  GroupElement v, g1, u;
};
/// g = v g1 u with v in U^-, g1 in L and u in U; needs a unit corner.
CMDecomposition chevalley_matsumoto(const Model& m, const GroupElement& g);

/// Violated root-type identity, or nothing.
std::optional<std::string> root_type_violation(const Model& m, const GroupElement& g);
/// Entries at weight distance >= 2 all vanish.
bool distance_vanishing(const Model& m, const GroupElement& g);
/// Checks the hypotheses (rho_B(g) = e, B^2 = 0) then distance vanishing.
bool nilpotent_vanishing_check(const Model& m, const GroupElement& g, const Ideal& b);

GroupElement x_mu_nu(const Model& m, const GroupElement& g, int lambda1, int mu, int nu);

struct ABIdeals {
  Ideal A, B, Aprime, Bprime;
};
ABIdeals ab_ideals(const Model& m, const GroupElement& g, int lambda1);

}  // namespace sandwich
