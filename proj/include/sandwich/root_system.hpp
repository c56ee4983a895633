#pragma once

// Simply-laced root systems D_l, E_6, E_7 together with the three fixed
// subsystem embeddings (D_l, A_{l-1}), (E_6, D_5), (E_7, E_6).
//
// Simple roots follow Bourbaki numbering; vertex i (0-based) is alpha_{i+1}.
// Roots are stored as coefficient vectors over the simple roots and indexed
// in a canonical order: by height, then lexicographically.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sandwich {

enum class CaseTag { a, b, c };
enum class CaseType { first, second };

using IVec = std::vector<int>;

CaseTag parse_case_tag(const std::string& s);
std::string case_tag_name(CaseTag t);

class RootSystem {
 public:
  /// Builds the embedding case. Case a needs 5 <= l <= 10; b is E_6, c is E_7.
  static RootSystem build(CaseTag tag, int l = 0);

  CaseTag tag() const { return tag_; }
  int rank() const { return l_; }
  CaseType type() const { return type_; }
  std::string name() const;
  const std::vector<IVec>& cartan() const { return cartan_; }
  /// Dynkin edges as vertex pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int size() const { return static_cast<int>(roots_.size()); }
  const IVec& root(int i) const { return roots_[i]; }
  const std::vector<IVec>& roots() const { return roots_; }
  std::optional<int> find(const IVec& coeffs) const;
  int height(int i) const { return height_[i]; }
  bool is_positive(int i) const { return height_[i] > 0; }

  int simple(int vertex) const { return simple_[vertex]; }
  int neg(int i) const { return neg_[i]; }
  /// Index of a+b when it is a root.
  std::optional<int> add(int a, int b) const;
  int sum_index(int a, int b) const { return sum_[a * size() + b]; }
  /// Symmetric pairing; 2 on the diagonal.
  int pairing(int a, int b) const { return pair_[a * size() + b]; }
  int reflect(int a, int b) const;
  /// Coefficient of the simple root at `vertex`.
  int coeff(int i, int vertex) const { return roots_[i][vertex]; }
  /// Root expressed in fundamental-weight coordinates.
  const IVec& weight_coords(int i) const { return wcoords_[i]; }

  int max_root() const { return max_root_; }
  /// Crossed vertex alpha^(1) and its neighbor alpha^(2).
  int alpha1_vertex() const { return a1_; }
  int alpha2_vertex() const { return a2_; }
  int alpha1() const { return simple_[a1_]; }
  int alpha2() const { return simple_[a2_]; }

  const std::vector<int>& delta() const { return delta_; }
  const std::vector<int>& delta_prime() const { return delta_prime_; }
  const std::vector<int>& delta_dprime() const { return delta_dprime_; }
  const std::vector<int>& omega_plus() const { return omega_plus_; }
  const std::vector<int>& omega_minus() const { return omega_minus_; }
  bool in_delta(int i) const { return coeff(i, a1_) == 0; }
  /// +1 for Omega^+, -1 for Omega^-, 0 for Delta.
  int omega_sign(int i) const { return coeff(i, a1_); }

  /// Closure of a root set under reflections in `gens`.
  std::vector<int> weyl_orbit(int seed, const std::vector<int>& gens) const;
  /// Orbit decomposition of `set` under W(gens); orbits sorted by first element.
  std::vector<std::vector<int>> orbits(const std::vector<int>& set, const std::vector<int>& gens) const;
  /// Irreducible components of a closed root subsystem given as a list.
  std::vector<std::vector<int>> components(const std::vector<int>& sub) const;
  /// First alpha in Delta with alpha + beta a root, for beta outside Delta.
  int partner_root(int beta) const;
  std::string root_string(int i) const;

 private:
  void finish();

  CaseTag tag_ = CaseTag::a;
  CaseType type_ = CaseType::first;
  int l_ = 0;
  int a1_ = 0, a2_ = 0;
  std::vector<IVec> cartan_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<IVec> roots_;
  std::vector<IVec> wcoords_;
  std::map<IVec, int> index_;
  std::vector<int> height_, simple_, neg_, sum_, pair_;
  int max_root_ = -1;
  std::vector<int> delta_, delta_prime_, delta_dprime_, omega_plus_, omega_minus_;
};

}  // namespace sandwich
