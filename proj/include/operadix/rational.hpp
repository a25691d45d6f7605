#ifndef OPERADIX_RATIONAL_HPP
#define OPERADIX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "operadix/common.hpp"

namespace operadix {

using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal: " + s);
  }
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Dense exact-rational matrix, row-major.  Small sizes only; this backs the
// rational-representation kind of the base category.
class MatQ {
 public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static MatQ identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static MatQ zero(int rows, int cols) { return MatQ(rows, cols); }
  static MatQ perm(const std::vector<int>& images);  // e_j -> e_{images[j]}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const MatQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const MatQ& o) const { return !(*this == o); }

  MatQ operator*(const MatQ& o) const;
  MatQ operator+(const MatQ& o) const;
  MatQ operator-(const MatQ& o) const;

  MatQ kron(const MatQ& o) const;  // Kronecker product
  Rat trace() const;
  bool is_identity() const;
  bool is_zero() const;

  // Gaussian elimination helpers.
  int rank() const;
  bool invertible() const;
  MatQ inverse() const;  // throws InvariantError if singular

  // Columns form a basis of the column space.
  MatQ column_space_basis() const;

  // Horizontal concatenation [this | o].
  MatQ hcat(const MatQ& o) const;
  // Vertical concatenation.
  MatQ vcat(const MatQ& o) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Cokernel of m : Q^cols -> Q^rows.  Returns (projection P, section S) with
// P : rows x q, S : rows' = rows x q ...  P*S = id_q, P*m = 0, and
// ker P = im m.  The section S picks standard basis vectors (pivot-free
// coordinates), so quotient basis classes are images of original basis
// vectors.
struct Cokernel {
  MatQ projection;  // q x rows
  MatQ section;     // rows x q
  std::vector<int> chosen;  // indices of original basis vectors representing the quotient basis
};
Cokernel cokernel(const MatQ& m);

// Solve a * x = b for x (a must have full column rank on the span involved);
// returns false if inconsistent.
bool solve(const MatQ& a, const MatQ& b, MatQ& x);

// Basis of the null space of m (columns of the returned matrix).
MatQ nullspace(const MatQ& m);

}  // namespace operadix

#endif
