#include "operadix/rational.hpp"

#include <cstdlib>

namespace operadix {

namespace {
int g_max_degree = [] {
  if (const char* e = std::getenv("OPERADIX_MAX_DEGREE")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  return 7;
}();
}  // namespace

int max_degree() { return g_max_degree; }
void set_max_degree(int d) {
  if (d < 1) throw InvariantError("max degree must be positive");
  g_max_degree = d;
}

MatQ MatQ::perm(const std::vector<int>& images) {
  MatQ m(static_cast<int>(images.size()), static_cast<int>(images.size()));
  for (int j = 0; j < m.cols(); ++j) m.at(images[j], j) = 1;
  return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
  if (cols_ != o.rows_) throw InvariantError("matrix product shape mismatch");
  MatQ r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantError("matrix sum shape mismatch");
  MatQ r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantError("matrix difference shape mismatch");
  MatQ r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

MatQ MatQ::kron(const MatQ& o) const {
  MatQ r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q)
          r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
    }
  return r;
}

Rat MatQ::trace() const {
  Rat t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool MatQ::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool MatQ::is_zero() const {
  for (const Rat& v : a_)
    if (v != 0) return false;
  return true;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> rref(MatQ& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int MatQ::rank() const {
  MatQ m = *this;
  return static_cast<int>(rref(m).size());
}

bool MatQ::invertible() const { return rows_ == cols_ && rank() == rows_; }

MatQ MatQ::inverse() const {
  if (rows_ != cols_) throw InvariantError("inverse of non-square matrix");
  MatQ aug = hcat(identity(rows_));
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != rows_ || piv.back() >= rows_ || (piv.empty() && rows_ > 0))
    throw InvariantError("matrix not invertible");
  for (int i = 0; i < rows_; ++i)
    if (piv[i] != i) throw InvariantError("matrix not invertible");
  MatQ inv(rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, rows_ + j);
  return inv;
}

MatQ MatQ::column_space_basis() const {
  MatQ m = *this;
  std::vector<int> piv = rref(m);
  MatQ b(rows_, static_cast<int>(piv.size()));
  for (int k = 0; k < static_cast<int>(piv.size()); ++k)
    for (int i = 0; i < rows_; ++i) b.at(i, k) = at(i, piv[k]);
  return b;
}

MatQ MatQ::hcat(const MatQ& o) const {
  if (rows_ != o.rows_) throw InvariantError("hcat shape mismatch");
  MatQ r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

MatQ MatQ::vcat(const MatQ& o) const {
  if (cols_ != o.cols_) throw InvariantError("vcat shape mismatch");
  MatQ r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Cokernel cokernel(const MatQ& m) {
  // Quotient basis: standard basis vectors whose classes remain independent
  // modulo im(m).  Row-reduce [B | I] where B is a column-space basis.
  MatQ b = m.column_space_basis();
  MatQ aug = b.hcat(MatQ::identity(m.rows()));
  std::vector<int> piv = rref(aug);
  Cokernel ck;
  for (int p : piv)
    if (p >= b.cols()) ck.chosen.push_back(p - b.cols());
  int q = static_cast<int>(ck.chosen.size());
  ck.section = MatQ(m.rows(), q);
  for (int k = 0; k < q; ++k) ck.section.at(ck.chosen[k], k) = 1;
  // projection: solve [B | S] * (u; v) = y, keep v.
  MatQ full = b.hcat(ck.section);
  if (full.cols() != full.rows()) throw InvariantError("cokernel basis extension failed");
  MatQ inv = full.inverse();
  ck.projection = MatQ(q, m.rows());
  for (int k = 0; k < q; ++k)
    for (int j = 0; j < m.rows(); ++j) ck.projection.at(k, j) = inv.at(b.cols() + k, j);
  return ck;
}

bool solve(const MatQ& a, const MatQ& b, MatQ& x) {
  if (a.rows() != b.rows()) throw InvariantError("solve shape mismatch");
  MatQ aug = a.hcat(b);
  std::vector<int> piv = rref(aug);
  // Inconsistent if a pivot lies in the b-block.
  for (int p : piv)
    if (p >= a.cols()) return false;
  x = MatQ(a.cols(), b.cols());
  for (int k = 0; k < static_cast<int>(piv.size()); ++k)
    for (int j = 0; j < b.cols(); ++j) x.at(piv[k], j) = aug.at(k, a.cols() + j);
  return true;
}

MatQ nullspace(const MatQ& m) {
  MatQ r = m;
  std::vector<int> piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  MatQ ns(m.cols(), static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[k];
    ns.at(fc, k) = 1;
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) ns.at(piv[i], k) = -r.at(i, fc);
  }
  return ns;
}

}  // namespace operadix
