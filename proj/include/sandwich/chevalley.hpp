#pragma once

// The Chevalley group G(Phi, R) acting on the basic module V: sign constants,
// root elements, Weyl and torus elements, and exact group arithmetic.

#include <memory>
#include <vector>

#include "sandwich/matrix.hpp"
#include "sandwich/rng.hpp"
#include "sandwich/root_system.hpp"
#include "sandwich/weights.hpp"

namespace sandwich {

struct WordNode;
using Word = std::shared_ptr<const WordNode>;

/// A matrix together with its exact inverse and, optionally, a generator word
/// that evaluates to it.
struct GroupElement {
  Matrix mat;
  Matrix inv;
  Word word;

  const Ring& ring() const { return mat.ring(); }
  int dim() const { return mat.dim(); }
  RingElem operator()(int i, int j) const { return mat.elem(i, j); }
  GroupElement inverse() const;
};

/// One nonzero entry of the nilpotent matrix e_alpha: v^src -> c v^dst.
struct RootEntry {
  int src, dst, c;
};

/// Root system, weights and sign constants of one embedding case.
class Model {
 public:
  static std::shared_ptr<const Model> build(CaseTag tag, int l = 0);
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  const RootSystem& rs() const { return rs_; }
  const WeightModule& wm() const { return wm_; }
  int dim() const { return wm_.dim(); }
  CaseType type() const { return wm_.type(); }

  /// c_{lambda,alpha}, or 0 when lambda + alpha is not a weight.
  int sign(int lambda, int alpha) const { return sign_[lambda * rs_.size() + alpha]; }
  const std::vector<RootEntry>& support(int alpha) const { return support_[alpha]; }

  GroupElement identity(const Ring& ring) const;
  GroupElement root_elt(int alpha, const RingElem& xi) const;
  /// w_alpha(eps) = x_alpha(eps) x_{-alpha}(-eps^{-1}) x_alpha(eps).
  GroupElement weyl(int alpha, const RingElem& eps) const;
  /// h_alpha(eps) = w_alpha(eps) w_alpha(1)^{-1}.
  GroupElement torus(int alpha, const RingElem& eps) const;
  /// z_alpha(xi, zeta) = x_alpha(zeta) x_{-alpha}(xi) x_alpha(-zeta).
  GroupElement z_gen(int alpha, const RingElem& xi, const RingElem& zeta) const;
  /// Wraps a bare matrix, computing its inverse.
  GroupElement from_matrix(const Matrix& m) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  /// [a, b] = a b a^{-1} b^{-1}.
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
  /// a b a^{-1}.
  GroupElement conjugate(const GroupElement& a, const GroupElement& b) const;
  GroupElement reduce(const GroupElement& g, const Ideal& ideal) const;
  /// a x_alpha(xi) a^{-1} and [a, x_alpha(xi)], by rank-k updates.
  GroupElement conj_root(const GroupElement& a, int alpha, const RingElem& xi) const;
  GroupElement comm_root(const GroupElement& a, int alpha, const RingElem& xi) const;

  /// In-place M <- x_alpha(xi) M and M <- M x_alpha(xi).
  void left_root(Matrix& m, int alpha, const Residues& xi) const;
  void right_root(Matrix& m, int alpha, const Residues& xi) const;
  /// g <- x_alpha(xi) g and g <- g x_alpha(xi), keeping the inverse in step.
  void left_mul(GroupElement& g, int alpha, const RingElem& xi) const;
  void right_mul(GroupElement& g, int alpha, const RingElem& xi) const;

  std::vector<RingElem> act_on_vector(const GroupElement& g, const std::vector<RingElem>& v) const;
  std::vector<RingElem> act_on_covector(const std::vector<RingElem>& y, const GroupElement& g) const;

  /// Monomial action of w_{alpha_i}(1) on the basis: v^lambda -> sign v^image.
  struct Monomial {
    std::vector<int> image, sign;
  };
  Monomial simple_weyl(int vertex) const;

 private:
  Model() = default;
  void build_signs();

  RootSystem rs_;
  WeightModule wm_;
  std::vector<int> sign_;
  std::vector<std::vector<RootEntry>> support_;
};

using ModelPtr = std::shared_ptr<const Model>;

}  // namespace sandwich
