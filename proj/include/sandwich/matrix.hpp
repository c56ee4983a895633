#pragma once

#include <vector>

#include "sandwich/ring.hpp"

namespace sandwich {

/// Dense square matrix over a ring; entries are raw residues of `ring()`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, int n) : ring_(std::move(ring)), n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static Matrix identity(const Ring& ring, int n);

  const Ring& ring() const { return ring_; }
  int dim() const { return n_; }
  Residues& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Residues& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  RingElem elem(int i, int j) const { return ring_.elem(at(i, j)); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_identity() const;
  bool is_zero() const;
  /// Entrywise image under R -> R/I.
  Matrix reduce(const Ideal& ideal) const;
  /// Exact inverse by elimination with unit pivots in each chain factor.
  Matrix inverse() const;

  void add_row_multiple(int target, int source, const Residues& coeff);
  void add_col_multiple(int target, int source, const Residues& coeff);

 private:
  Ring ring_;
  int n_ = 0;
  std::vector<Residues> a_;
};

}  // namespace sandwich
