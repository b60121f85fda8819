#include "flagorbits/flaglin.hpp"

#include <utility>

#include "flagorbits/spaces.hpp"

namespace flagorbits {

Matrix::Matrix(int rows, int cols, TowerPtr tower)
    : rows_(rows), cols_(cols), tower_(std::move(tower)) {
  if (rows < 0 || cols < 0) fail(errc::dimension_mismatch, "negative matrix dimension");
  e_.assign(static_cast<size_t>(rows_) * cols_, tower_ ? tower_->zero() : Scalar());
}

Matrix Matrix::identity(int n, const TowerPtr& tower) {
  Matrix m(n, n, tower);
  for (int i = 0; i < n; ++i) m.at(i, i) = tower->integer(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols, const TowerPtr& tower) {
  int nc = static_cast<int>(cols.size());
  int nr = nc ? static_cast<int>(cols[0].size()) : 0;
  Matrix m(nr, nc, tower);
  for (int j = 0; j < nc; ++j) {
    if (static_cast<int>(cols[j].size()) != nr)
      fail(errc::dimension_mismatch, "ragged column list");
    for (int i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Scalar> Matrix::column(int c) const {
  std::vector<Scalar> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void Matrix::set_column(int c, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != rows_) fail(errc::dimension_mismatch, "column length");
  for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
}

Matrix Matrix::prefix_columns(int k) const {
  Matrix m(rows_, k, tower_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_, tower_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::conjugated() const {
  Matrix m(*this);
  for (auto& s : m.e_) s = s.conj();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(errc::dimension_mismatch, "matrix product shape");
  Matrix m(rows_, o.cols_, tower_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) += aik * o.at(k, j);
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix sum shape");
  Matrix m(*this);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix diff shape");
  Matrix m(*this);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(errc::ambient_mismatch, "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols(), a.tower() ? a.tower() : b.tower());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != m.cols()) fail(errc::dimension_mismatch, "mat_vec shape");
  std::vector<Scalar> out(m.rows(), m.tower()->zero());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

int rank(const Matrix& m) {
  // Bareiss fraction-free elimination; division by the previous pivot is
  // exact at every step.
  Matrix a(m);
  int nr = a.rows(), nc = a.cols();
  Scalar prev = a.tower() ? a.tower()->integer(1) : Scalar();
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int pivot = -1;
    for (int i = r; i < nr; ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < nc; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    for (int i = r + 1; i < nr; ++i) {
      for (int j = c + 1; j < nc; ++j)
        a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = a.tower()->zero();
    }
    prev = a.at(r, c);
    ++r;
  }
  return r;
}

int intersection_dim(const Matrix& u, const Matrix& w) {
  if (u.rows() != w.rows()) fail(errc::ambient_mismatch, "subspaces of different ambients");
  return rank(u) + rank(w) - rank(Matrix::hstack(u, w));
}

namespace {

// Row echelon by ordinary division; returns pivot columns, matrix reduced in place.
std::vector<int> row_reduce(Matrix& a) {
  int nr = a.rows(), nc = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int pivot = -1;
    for (int i = r; i < nr; ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < nc; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = c; j < nc; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < nc; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix nullspace(const Matrix& m) {
  Matrix a(m);
  std::vector<int> pivots = row_reduce(a);
  int nc = a.cols();
  std::vector<bool> is_pivot(nc, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> cols;
  for (int free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(nc, m.tower()->zero());
    v[free] = m.tower()->integer(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(static_cast<int>(r), free);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(cols, m.tower());
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols()) fail(errc::dimension_mismatch, "solve needs a square matrix");
  if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "solve shape mismatch");
  Matrix aug = Matrix::hstack(a, b);
  std::vector<int> pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) != a.cols() || pivots.back() != a.cols() - 1)
    fail(errc::singular, "singular matrix in solve");
  Matrix x(a.cols(), b.cols(), a.tower());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, a.cols() + j);
  return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows(), a.tower())); }

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

// ---------------------------------------------------------------------------
// Form-aware operations

Matrix perp(const Matrix& u, const SpaceSetup& setup, FormKind form) {
  const Matrix& f = (form == FormKind::omega) ? setup.omega() : setup.phi();
  if (u.rows() != f.rows()) fail(errc::ambient_mismatch, "subspace does not match the setup");
  // omega(x, u_j) = 0 gives rows t(Omega u_j); phi(x, u_j) = 0 conjugated
  // gives rows t(Phi conj(u_j))  (Phi is real diagonal).
  Matrix cols = (form == FormKind::omega) ? f * u : f * u.conjugated();
  return nullspace(cols.transposed());
}

std::pair<int, int> hermitian_signature(const Matrix& u, const SpaceSetup& setup) {
  const Matrix& f = setup.phi();
  if (u.rows() != f.rows()) fail(errc::ambient_mismatch, "subspace does not match the setup");
  Matrix g = u.conjugated().transposed() * f * u;  // Gram of phi on the columns of u
  int k = g.rows();
  const TowerPtr& tw = u.tower();
  int p = 0, q = 0;
  std::vector<bool> used(k, false);

  auto add_col = [&](int dst, int src, const Scalar& c) {
    // congruence v_dst += c v_src:  G <- E^H G E
    for (int i = 0; i < k; ++i) g.at(i, dst) += c * g.at(i, src);
    for (int j = 0; j < k; ++j) g.at(dst, j) += c.conj() * g.at(src, j);
  };

  for (int step = 0; step < k; ++step) {
    int piv = -1;
    for (int i = 0; i < k; ++i)
      if (!used[i] && !g.at(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // standard two-step pivot: (x, y) -> x + y, falling back to x + i*y
      int a = -1, b = -1;
      for (int i = 0; i < k && a < 0; ++i)
        for (int j = 0; j < k && a < 0; ++j)
          if (!used[i] && !used[j] && i != j && !g.at(i, j).is_zero()) {
            a = i;
            b = j;
          }
      if (a < 0) break;  // remaining block is the kernel
      add_col(a, b, tw->integer(1));
      if (g.at(a, a).is_zero()) {
        add_col(a, b, -tw->integer(1));  // undo
        add_col(a, b, tw->imaginary_unit());
      }
      piv = a;
    }
    Scalar d = g.at(piv, piv);
    (sign_of_real(d) > 0 ? p : q) += 1;
    used[piv] = true;
    for (int j = 0; j < k; ++j) {
      if (used[j] || g.at(piv, j).is_zero()) continue;
      add_col(j, piv, -(g.at(piv, j) / d));
    }
  }
  return {p, q};
}

// ---------------------------------------------------------------------------
// Flags

Flag::Flag(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols()) fail(errc::dimension_mismatch, "flag basis must be square");
  if (rank(basis_) != basis_.cols())
    fail(errc::dimension_mismatch, "flag basis vectors are linearly dependent");
}

bool same_flag(const Flag& a, const Flag& b) {
  if (a.n() != b.n()) return false;
  for (int k = 1; k < a.n(); ++k)
    if (intersection_dim(a.subspace(k), b.subspace(k)) != k) return false;
  return true;
}

}  // namespace flagorbits
