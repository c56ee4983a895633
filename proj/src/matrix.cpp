#include "sandwich/matrix.hpp"

#include "sandwich/errors.hpp"

namespace sandwich {

Matrix Matrix::identity(const Ring& ring, int n) {
  Matrix m(ring, n);
  Residues one = ring.one_res();
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (ring_ != o.ring_ || n_ != o.n_) throw SpecMismatch("matrix shape or ring mismatch");
  Matrix out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Residues& a = at(i, k);
      if (ring_.is_zero(a)) continue;
      for (int j = 0; j < n_; ++j) {
        const Residues& b = o.at(k, j);
        if (ring_.is_zero(b)) continue;
        out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(a, b));
      }
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (ring_ != o.ring_ || n_ != o.n_) throw SpecMismatch("matrix shape or ring mismatch");
  Matrix out(ring_, n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = ring_.sub(a_[k], o.a_[k]);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (ring_ != o.ring_ || n_ != o.n_) throw SpecMismatch("matrix shape or ring mismatch");
  Matrix out(ring_, n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = ring_.add(a_[k], o.a_[k]);
  return out;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i == j ? !ring_.is_one(at(i, j)) : !ring_.is_zero(at(i, j))) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Residues& r : a_)
    if (!ring_.is_zero(r)) return false;
  return true;
}

Matrix Matrix::reduce(const Ideal& ideal) const {
  if (ideal.ring() != ring_) throw SpecMismatch("ideal over a different ring");
  Ring q = ideal.quotient_ring();
  Matrix out(q, n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = ideal.reduce(ring_.elem(a_[k])).residues();
  return out;
}

void Matrix::add_row_multiple(int target, int source, const Residues& coeff) {
  for (int j = 0; j < n_; ++j) {
    const Residues& s = at(source, j);
    if (ring_.is_zero(s)) continue;
    at(target, j) = ring_.add(at(target, j), ring_.mul(coeff, s));
  }
}

void Matrix::add_col_multiple(int target, int source, const Residues& coeff) {
  for (int i = 0; i < n_; ++i) {
    const Residues& s = at(i, source);
    if (ring_.is_zero(s)) continue;
    at(i, target) = ring_.add(at(i, target), ring_.mul(s, coeff));
  }
}

Matrix Matrix::inverse() const {
  if (ring_.is_integers()) throw Unsupported("matrix-only inversion over the integers");
  Matrix out(ring_, n_);
  // Each chain factor is local, so Gauss-Jordan with a unit pivot in every
  // column succeeds exactly when the matrix is invertible.
  for (std::size_t f = 0; f < ring_.nfactors(); ++f) {
    Ring local({ring_.factors()[f]});
    Matrix a(local, n_), b = identity(local, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) a.a_[k].r[0] = a_[k].r[f];
    for (int col = 0; col < n_; ++col) {
      int piv = -1;
      for (int r = col; r < n_ && piv < 0; ++r)
        if (local.is_unit(a.at(r, col))) piv = r;
      if (piv < 0) throw NonUnit("matrix is not invertible");
      if (piv != col)
        for (int j = 0; j < n_; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(b.at(piv, j), b.at(col, j));
        }
      Residues s = local.inv(a.at(col, col));
      for (int j = 0; j < n_; ++j) {
        a.at(col, j) = local.mul(a.at(col, j), s);
        b.at(col, j) = local.mul(b.at(col, j), s);
      }
      for (int r = 0; r < n_; ++r) {
        if (r == col || local.is_zero(a.at(r, col))) continue;
        Residues m = local.neg(a.at(r, col));
        a.add_row_multiple(r, col, m);
        b.add_row_multiple(r, col, m);
      }
    }
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k].r[f] = b.a_[k].r[0];
  }
  return out;
}

}  // namespace sandwich
