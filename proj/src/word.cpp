#include "sandwich/word.hpp"

#include "sandwich/errors.hpp"
#include "sandwich/overgroup.hpp"

namespace sandwich::word {

namespace {
Word leaf(WordOp op, int alpha, const RingElem& xi) {
  auto n = std::make_shared<WordNode>();
  n->op = op;
  n->root = alpha;
  n->xi = xi;
  return n;
}

Word node(WordOp op, std::vector<Word> args, int weight = -1, std::string note = {}) {
  auto n = std::make_shared<WordNode>();
  n->op = op;
  n->args = std::move(args);
  n->weight = weight;
  n->note = std::move(note);
  return n;
}
}  // namespace

Word root(int alpha, const RingElem& xi) { return leaf(WordOp::root, alpha, xi); }
Word torus(int alpha, const RingElem& eps) { return leaf(WordOp::torus, alpha, eps); }
Word weyl(int alpha, const RingElem& eps) { return leaf(WordOp::weyl, alpha, eps); }

Word level(int alpha, const RingElem& xi, std::string note) {
  auto n = std::make_shared<WordNode>(*leaf(WordOp::level, alpha, xi));
  n->note = std::move(note);
  return n;
}

Word input(const std::string& label, const GroupElement& g) {
  auto n = std::make_shared<WordNode>();
  n->op = WordOp::input;
  n->label = label;
  n->mat = std::make_shared<const Matrix>(g.mat);
  n->inv = std::make_shared<const Matrix>(g.inv);
  return n;
}

Word inv(Word a) {
  if (a->op == WordOp::inv) return a->args[0];
  return node(WordOp::inv, {std::move(a)});
}

Word mul(std::vector<Word> factors) {
  std::vector<Word> flat;
  for (Word& f : factors) {
    if (f->op == WordOp::mul) flat.insert(flat.end(), f->args.begin(), f->args.end());
    else flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat[0];
  return node(WordOp::mul, std::move(flat));
}

Word comm(Word a, Word b) { return node(WordOp::comm, {std::move(a), std::move(b)}); }
Word conj(Word a, Word b) { return node(WordOp::conj, {std::move(a), std::move(b)}); }
Word levi(Word a, int lambda, int side, std::string note) {
  auto n = std::make_shared<WordNode>(*node(WordOp::levi, {std::move(a)}, lambda, std::move(note)));
  n->side = side;
  return n;
}

Word unip(Word a, int lambda, int side, std::string note) {
  auto n = std::make_shared<WordNode>(*node(WordOp::unip, {std::move(a)}, lambda, std::move(note)));
  n->side = side;
  return n;
}

std::size_t size(const Word& w) {
  std::size_t s = 1;
  for (const Word& a : w->args) s += size(a);
  return s;
}

std::string to_string(const Model& model, const Word& w) {
  const RootSystem& rs = model.rs();
  auto args = [&](const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < w->args.size(); ++i) s += (i ? sep : "") + to_string(model, w->args[i]);
    return s;
  };
  switch (w->op) {
    case WordOp::root:
      return "x" + rs.root_string(w->root) + "(" + w->xi.to_string() + ")";
    case WordOp::level:
      return "x*" + rs.root_string(w->root) + "(" + w->xi.to_string() + ")";
    case WordOp::torus:
      return "h" + rs.root_string(w->root) + "(" + w->xi.to_string() + ")";
    case WordOp::weyl:
      return "w" + rs.root_string(w->root) + "(" + w->xi.to_string() + ")";
    case WordOp::input:
      return w->label;
    case WordOp::inv:
      return "(" + args("") + ")^-1";
    case WordOp::mul:
      return w->args.empty() ? "e" : args("*");
    case WordOp::comm:
      return "[" + args(",") + "]";
    case WordOp::conj:
      return "^{" + to_string(model, w->args[0]) + "}(" + to_string(model, w->args[1]) + ")";
    case WordOp::levi:
      return std::string(w->side > 0 ? "levi_" : "levi-_") + std::to_string(w->weight) + "(" + args("") + ")";
    case WordOp::unip:
      return std::string(w->side > 0 ? "unip_" : "unip-_") + std::to_string(w->weight) + "(" + args("") + ")";
  }
  return "?";
}

}  // namespace sandwich::word

namespace sandwich {

GroupElement with_word(GroupElement g, Word w) {
  g.word = std::move(w);
  return g;
}

namespace {
GroupElement eval(const Model& m, const Ring& ring, const WordNode& w) {
  switch (w.op) {
    case WordOp::root:
    case WordOp::level: {
      GroupElement g = m.identity(ring);
      m.left_root(g.mat, w.root, w.xi.residues());
      m.left_root(g.inv, w.root, (-w.xi).residues());
      return g;
    }
    case WordOp::torus:
      return m.torus(w.root, w.xi);
    case WordOp::weyl:
      return m.weyl(w.root, w.xi);
    case WordOp::input:
      return {*w.mat, *w.inv, nullptr};
    case WordOp::inv:
      return eval(m, ring, *w.args[0]).inverse();
    case WordOp::mul: {
      if (w.args.empty()) return m.identity(ring);
      GroupElement g = eval(m, ring, *w.args[0]);
      for (std::size_t i = 1; i < w.args.size(); ++i) {
        const WordNode& a = *w.args[i];
        if (a.op == WordOp::root || a.op == WordOp::level) {
          m.right_root(g.mat, a.root, a.xi.residues());
          m.left_root(g.inv, a.root, (-a.xi).residues());
        } else {
          g = m.mul(g, eval(m, ring, a));
        }
      }
      return g;
    }
    case WordOp::comm:
      return m.commutator(eval(m, ring, *w.args[0]), eval(m, ring, *w.args[1]));
    case WordOp::conj:
      return m.conjugate(eval(m, ring, *w.args[0]), eval(m, ring, *w.args[1]));
    case WordOp::levi:
      return levi_unipotent_split(m, eval(m, ring, *w.args[0]), w.weight, w.side).l;
    case WordOp::unip:
      return levi_unipotent_split(m, eval(m, ring, *w.args[0]), w.weight, w.side).u;
  }
  throw InternalError("unknown word node");
}
}  // namespace

GroupElement replay(const Model& model, const Ring& ring, const Word& w) {
  GroupElement g = eval(model, ring, *w);
  g.word = w;
  return g;
}

}  // namespace sandwich
