#pragma once

// Commutator extraction: starting from an element of an overgroup H, produce
// a replayable word that evaluates to a single root element x_alpha(xi) with
// alpha outside Delta and xi outside the current level ideal.
//
// Words use three kinds of letters besides the input elements: root elements
// of Delta, level letters x_beta(xi) with xi in the ideal passed in (these lie
// in H once that ideal is part of a certified level), and Levi/unipotent
// projections carrying a note.

#include <optional>
#include <string>

#include "sandwich/overgroup.hpp"
#include "sandwich/word.hpp"

namespace sandwich {

struct Witness {
  int root = -1;
  RingElem value;
  Word word;
  std::string route;
};

struct Extraction {
  std::optional<Witness> witness;
  std::string verdict;  // why there is no witness
  int steps = 0;
};

/// g in P (side +1) or P^- (side -1). Returns x_delta(xi), resp.
/// x_{-delta}(xi), with xi outside `ideal`, or nothing when every root
/// coordinate of the unipotent part lies in `ideal`.
Extraction extract_from_P(const Model& m, const GroupElement& g, const Ideal& ideal, int side = 1);

/// g root-type in P_{lambda1}, lambda1 in Lambda_1.
Extraction extract_from_P_lambda(const Model& m, const GroupElement& g, int lambda1, const SigmaPair& sigma);

/// u in U_{lambda1}: clears the Sigma^0 part and finishes through
/// extract_from_P, or isolates the Sigma^- coordinate.
Extraction extract_from_U_lambda(const Model& m, const GroupElement& u, int lambda1, const SigmaPair& sigma);

struct NilpotentStep {
  GroupElement h;  // g x_alpha(1) g^{-1}
  int lambda1 = -1;
  int alpha = -1;
};
/// g congruent to e modulo b, b^2 = 0, g outside P^-: an element of
/// P_{lambda1} outside P^- built from g.
NilpotentStep nilpotent_step(const Model& m, const GroupElement& g, const Ideal& b);
Extraction extract_from_nilpotent(const Model& m, const GroupElement& g, const Ideal& b, const SigmaPair& sigma);

/// Replays the word and compares with x_root(value).
bool check_witness(const Model& m, const Ring& ring, const Witness& w);

/// Attaches an input word named `label` when g has none.
GroupElement ensure_word(const GroupElement& g, const std::string& label = "g");

}  // namespace sandwich
