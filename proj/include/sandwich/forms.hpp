#pragma once

// The invariant bilinear form h and the quadratic pi-form q on V for the
// second-type cases (a with l even, and c).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sandwich/chevalley.hpp"

namespace sandwich {

/// h(u, v) = sum_lambda eps_lambda u_lambda v_{-lambda}.
struct BilinearForm {
  std::vector<int> eps;
  std::vector<int> opp;  // index of -lambda

  RingElem operator()(const std::vector<RingElem>& u, const std::vector<RingElem>& v) const;
  /// The matrix H with H_{lambda,-lambda} = eps_lambda, over `ring`.
  Matrix matrix(const Model& m, const Ring& ring) const;
};

BilinearForm build_bilinear(const Model& m);
/// g^T H g == H.
bool preserves(const Model& m, const BilinearForm& h, const GroupElement& g);

/// q(v) = sum over unordered pairs {a <= b} of q_ab v_a v_b.
struct QuadraticForm {
  std::map<std::pair<int, int>, std::int64_t> coeffs;

  std::int64_t coeff(int a, int b) const;
  bool has_diagonal() const;
  RingElem operator()(const std::vector<RingElem>& v) const;
  /// Exact over the integers; throws DomainError on overflow.
  std::int64_t eval_int(const std::vector<std::int64_t>& v) const;
  /// q'(v) = q(x_alpha(1) v).
  QuadraticForm substitute(const Model& m, int alpha) const;
};

struct Square {
  std::vector<int> members;                     // Omega(lambda, mu), sorted
  std::vector<std::pair<int, int>> matching;    // pairs with non-root difference
};

/// Omega(lambda, mu) for d(lambda, mu) = 2, with its perfect matching.
Square find_square(const Model& m, int lambda, int mu);

/// Columns g_{*,lambda} of seeded words with entries +-1, over the integers.
std::vector<std::vector<std::int64_t>> integer_orbit_vectors(const Model& m, std::size_t count, Rng& rng,
                                                             int lambda = 0);

/// The square equation on the matched pairs, normalized so that the pair
/// containing `anchor` has coefficient +1; solved exactly over Q.
QuadraticForm square_equation(const Model& m, const Square& sq, int anchor, std::uint64_t seed);

struct PiForm {
  QuadraticForm q;
  int mu1 = -1;
  std::vector<int> path;  // mu_1, ..., mu_k = -lambda_0
  Square square;
};

PiForm build_pi_form(const Model& m, std::uint64_t seed = 1);

/// Covector y mapped back to V through h: u_lambda = eps_lambda y_{-lambda}.
std::vector<RingElem> covector_to_vector(const Model& m, const BilinearForm& h, const std::vector<RingElem>& y);

}  // namespace sandwich
