#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "flagorbits/exactfield.hpp"

namespace flagorbits {

struct SpaceSetup;  // spaces.hpp

// Dense matrix over a tower field.  Row-major, all entries share one tower.
class Matrix {
 public:
  Matrix(int rows, int cols, TowerPtr tower);
  static Matrix identity(int n, const TowerPtr& tower);
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, const TowerPtr& tower);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const TowerPtr& tower() const { return tower_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<Scalar> column(int c) const;
  void set_column(int c, const std::vector<Scalar>& v);
  Matrix prefix_columns(int k) const;  // first k columns
  Matrix transposed() const;
  Matrix conjugated() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);

 private:
  int rows_, cols_;
  TowerPtr tower_;
  std::vector<Scalar> e_;
};

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

// Exact rank by fraction-free (Bareiss) elimination.
int rank(const Matrix& m);

// dim(colspan U  ∩  colspan W); throws AmbientMismatch on row-count mismatch.
int intersection_dim(const Matrix& u, const Matrix& w);

// Columns spanning the kernel of m (solutions of m x = 0).
Matrix nullspace(const Matrix& m);

// Solve a x = b for invertible a; throws Singular.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

// Orthogonal complement with respect to the setup's bilinear form omega or
// hermitian form phi (conjugate-linear orthogonal for phi).
enum class FormKind { omega, phi };
Matrix perp(const Matrix& u, const SpaceSetup& setup, FormKind form);

// Signature (p, q) of phi on U/(U ∩ U^dagger) by exact hermitian congruence
// diagonalization; p + q = dim U - dim(U ∩ U^dagger).
std::pair<int, int> hermitian_signature(const Matrix& u, const SpaceSetup& setup);

// Complete flag: n linearly independent basis vectors v_1..v_n with
// F_k = span(v_1..v_k).  Construction validates rank n.
class Flag {
 public:
  Flag(Matrix basis);
  int n() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Matrix subspace(int k) const { return basis_.prefix_columns(k); }
  const TowerPtr& tower() const { return basis_.tower(); }

 private:
  Matrix basis_;
};

bool same_flag(const Flag& a, const Flag& b);

}  // namespace flagorbits
