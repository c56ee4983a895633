#pragma once

// Weights of the basic minuscule module V: the Weyl orbit of the fundamental
// weight dual to alpha^(1), its diagram, weight graph and components.
//
// Weights are indexed 0..n-1 in canonical order (depth below the highest
// weight, then lexicographically descending coordinates). Index 0 is lambda_0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sandwich/root_system.hpp"

namespace sandwich {

struct SigmaSplit {
  std::vector<int> minus, zero, plus;  // Sigma^-, Sigma^0, Sigma^+
  std::vector<int> delta_l1;           // Delta_{lambda_1}
  std::vector<int> delta_cap;          // Delta intersected with Delta_{lambda_1}
  std::vector<int> delta_cap_prime;    // its components other than A_1
};

class WeightModule {
 public:
  /// The module keeps a reference to `rs`, which must outlive it.
  static WeightModule build(const RootSystem& rs, std::size_t max_dim = 512);

  const RootSystem& roots() const { return *rs_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  const IVec& weight(int i) const { return weights_[i]; }
  std::optional<int> find(const IVec& coords) const;
  int lambda0() const { return 0; }
  /// Index of -lambda, or -1.
  int negative(int i) const { return neg_[i]; }
  /// Number of simple-root steps from lambda_0 down to the weight.
  int depth(int i) const { return depth_[i]; }

  /// Index of lambda + alpha, or -1.
  int shift(int lambda, int alpha) const { return shift_[lambda * nroots_ + alpha]; }
  /// <lambda, alpha> for the weight with index lambda.
  int pairing(int lambda, int alpha) const;
  int distance(int a, int b) const { return dist_[a * dim() + b]; }
  int diameter() const;

  /// Component index of a weight (Lambda_0 = {lambda_0}).
  int component(int i) const { return comp_[i]; }
  int ncomponents() const { return static_cast<int>(comps_.size()); }
  const std::vector<int>& component_members(int c) const { return comps_[c]; }
  CaseType type() const;

  /// Diagram edges (lambda, lambda - alpha_i) as (upper, lower, vertex).
  struct Edge {
    int upper, lower, vertex;
  };
  const std::vector<Edge>& diagram() const { return diagram_; }

  /// The root lambda - mu, or -1 when the difference is not a root.
  int difference_root(int lambda, int mu) const;

  SigmaSplit sigma_split(int lambda1) const;
  /// Some mu in Lambda_1 with d(lambda1, mu) = 1; with nu also d(mu, nu) = 1.
  int neighbor_in_component(int lambda1, std::optional<int> nu = std::nullopt) const;

  std::string weight_string(int i) const;

 private:
  const RootSystem* rs_ = nullptr;
  int nroots_ = 0;
  std::vector<IVec> weights_;
  std::map<IVec, int> index_;
  std::vector<int> depth_, neg_, shift_, dist_, comp_;
  std::vector<std::vector<int>> comps_;
  std::vector<Edge> diagram_;
};

}  // namespace sandwich
