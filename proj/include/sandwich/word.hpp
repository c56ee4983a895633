#pragma once

// Replayable generator words. A word is an expression tree whose leaves are
// root elements, torus and Weyl elements, certified level letters, or named
// input elements; inner nodes are products, inverses, commutators,
// conjugations, and Levi/unipotent projections inside a parabolic P_lambda.
// Projection nodes carry a note naming the fact that places them in H.

#include <string>
#include <vector>

#include "sandwich/chevalley.hpp"

namespace sandwich {

enum class WordOp { root, torus, weyl, level, input, inv, mul, comm, conj, levi, unip };

struct WordNode {
  WordOp op = WordOp::root;
  int root = -1;
  RingElem xi;
  int weight = -1;  // levi / unip: the weight lambda of P_lambda
  int side = 1;     // levi / unip: +1 for P_lambda, -1 for P^-_lambda
  std::string label;
  std::string note;
  std::vector<Word> args;
  // input leaves keep their matrices so the word can be replayed alone
  std::shared_ptr<const Matrix> mat, inv;
};

namespace word {
Word root(int alpha, const RingElem& xi);
Word torus(int alpha, const RingElem& eps);
Word weyl(int alpha, const RingElem& eps);
/// x_alpha(xi) justified by an already certified level.
Word level(int alpha, const RingElem& xi, std::string note);
Word input(const std::string& label, const GroupElement& g);
Word inv(Word a);
Word mul(std::vector<Word> factors);
Word comm(Word a, Word b);
Word conj(Word a, Word b);
Word levi(Word a, int lambda, int side, std::string note);
Word unip(Word a, int lambda, int side, std::string note);

/// Number of nodes.
std::size_t size(const Word& w);
/// Compact text form, e.g. "[g,x[0,1,1](1)]".
std::string to_string(const Model& model, const Word& w);
}  // namespace word

/// Evaluates a word over `ring`. Throws DecompositionError if a projection
/// node is applied to an element outside the corresponding parabolic.
GroupElement replay(const Model& model, const Ring& ring, const Word& w);

/// Attaches `w` to a copy of g.
GroupElement with_word(GroupElement g, Word w);

}  // namespace sandwich
