#pragma once

// Exact arithmetic in finite products of chain rings (Z/p^k and F_p[t]/(t^k))
// and in the ring of integers.
//
// Every ideal of such a ring is principal in each factor, so an ideal is a
// vector of per-factor exponents j meaning (pi^j), where pi is p for Z/p^k and
// t for F_p[t]/(t^k). For the integers the "exponent" slot stores the
// nonnegative generator m of (m).

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

inline constexpr std::size_t kMaxFactors = 4;

enum class FactorKind { integers, zmod, poly };

struct Factor {
  FactorKind kind = FactorKind::zmod;
  int p = 0;  // prime; unused for integers
  int k = 0;  // nilpotency length; unused for integers

  /// Number of elements (p^k); zero for the integers.
  std::int64_t cardinality() const;
  std::string name() const;
  bool operator==(const Factor&) const = default;
};

/// Raw per-factor residues. For poly factors the coefficient list
/// c_0 + c_1 t + ... is packed as the base-p integer c_0 + c_1 p + ...
struct Residues {
  std::array<std::int64_t, kMaxFactors> r{};
  bool operator==(const Residues&) const = default;
};

class RingElem;
class Ideal;

class Ring {
 public:
  /// The zero ring (empty factor list). Only reachable through quotients.
  Ring();
  explicit Ring(std::vector<Factor> factors);

  static Ring integers();
  static Ring zmod(int p, int k);
  static Ring poly(int p, int k);
  /// Z/n split into its prime-power factors.
  static Ring zmod_n(std::int64_t n);
  /// Parses "z", "z12", "f2t2", or products such as "z4*f3t2".
  static Ring parse(std::string_view text);

  const std::vector<Factor>& factors() const;
  std::size_t nfactors() const { return factors().size(); }
  bool is_integers() const;
  bool is_finite() const { return !is_integers(); }
  bool is_zero_ring() const { return factors().empty(); }
  /// Number of elements; throws for the integers.
  std::uint64_t size() const;
  std::string name() const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

  // Raw arithmetic on residues; callers guarantee both operands belong here.
  Residues zero_res() const { return Residues{}; }
  Residues one_res() const;
  Residues from_int_res(std::int64_t n) const;
  Residues add(const Residues& a, const Residues& b) const;
  Residues sub(const Residues& a, const Residues& b) const;
  Residues neg(const Residues& a) const;
  Residues mul(const Residues& a, const Residues& b) const;
  bool is_zero(const Residues& a) const;
  bool is_one(const Residues& a) const;
  bool is_unit(const Residues& a) const;
  Residues inv(const Residues& a) const;
  /// Valuation of a in factor i, capped at k; meaningless for the integers.
  int valuation(std::size_t i, const Residues& a) const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(std::int64_t n) const;
  RingElem elem(const Residues& r) const;
  /// The uniformizer t (in poly factors) or p (in zmod factors) per factor.
  RingElem uniformizer() const;
  /// Integer literal or a polynomial in t, e.g. "3", "-1", "1+t", "2*t^2".
  RingElem parse_elem(std::string_view text) const;

  /// All elements in a fixed enumeration order; finite rings only.
  std::vector<RingElem> elements() const;
  std::vector<RingElem> units() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

class RingElem {
 public:
  RingElem() = default;
  RingElem(Ring ring, Residues res) : ring_(std::move(ring)), res_(res) {}

  const Ring& ring() const { return ring_; }
  const Residues& residues() const { return res_; }

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  bool is_zero() const { return ring_.is_zero(res_); }
  bool is_one() const { return ring_.is_one(res_); }
  bool is_unit() const { return ring_.is_unit(res_); }
  RingElem inv() const;

  /// Human-readable form: an integer for Z and for Z/n rings (CRT lifted),
  /// a polynomial for single poly factors, a tuple otherwise.
  std::string to_string() const;

 private:
  Ring ring_;
  Residues res_{};
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, Residues exps);

  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);
  static Ideal principal(const RingElem& a);
  static Ideal from_elems(const Ring& ring, std::span<const RingElem> gens);
  /// "(0)", "(1)", "(2)", "(t)", "(t^2)", or "R".
  static Ideal parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  /// Per-factor exponents (generator m for the integers).
  const Residues& exponents() const { return exps_; }

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal intersect(const Ideal& o) const;
  Ideal square() const { return *this * *this; }

  bool contains(const RingElem& a) const;
  /// True iff o is a subset of this ideal.
  bool contains(const Ideal& o) const;
  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_unit() const;

  /// Canonical generator: pi^j per factor (m for the integers).
  RingElem generator() const;
  /// Elements of the ideal; finite rings only.
  std::vector<RingElem> elements() const;

  /// R/I together with the reduction map.
  Ring quotient_ring() const;
  RingElem reduce(const RingElem& a) const;
  /// Image of another ideal J under the reduction R -> R/I.
  Ideal reduce(const Ideal& j) const;

  std::string to_string() const;

 private:
  Ring ring_;
  Residues exps_{};
};

/// Every ideal of a finite ring, ordered by exponent vector.
std::vector<Ideal> all_ideals(const Ring& ring);

/// Reduction homomorphism rho_I applied to a single element.
RingElem quotient_map(const RingElem& a, const Ideal& ideal);

}  // namespace sandwich
