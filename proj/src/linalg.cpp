#include "brb/linalg.hpp"

#include <algorithm>

namespace brb
{

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i)
{
  if (i >= n)
    throw DimensionError("basis index out of range");
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v)
{
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b)
{
  if (a.size() != b.size())
    throw DimensionError("vector dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b)
{
  if (a.size() != b.size())
    throw DimensionError("vector dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v)
{
  Vector out(v);
  for (auto& x : out)
    x *= s;
  return out;
}

void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x)
{
  if (y.size() != x.size())
    throw DimensionError("vector dimension mismatch");
  if (a.is_zero())
    return;
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i].add_product(a, x[i]);
}

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows)
{
  if (rows.empty())
    return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw DimensionError("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Vector Matrix::column(std::size_t c) const
{
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const
{
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
  if (v.size() != cols_)
    throw DimensionError("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r].add_product((*this)(r, c), v[c]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j).add_product(aik, b(k, j));
    }
  return out;
}

std::vector<std::size_t> rref(Matrix& m)
{
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero())
      ++p;
    if (p == m.rows())
      continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m(p, k), m(lead_row, k));
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero())
        continue;
      Scalar f = -m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m(r, k).add_product(f, m(lead_row, k));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Scalar determinant(Matrix m)
{
  if (m.rows() != m.cols())
    throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero())
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k)
        std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero())
        continue;
      Scalar f = -(m(r, c) * inv);
      for (std::size_t k = c; k < n; ++k)
        m(r, k).add_product(f, m(c, k));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m)
{
  if (m.rows() != m.cols())
    throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = aug(r, n + c);
  return out;
}

std::vector<Vector> nullspace(Matrix m)
{
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b)
{
  if (b.size() != m.rows())
    throw DimensionError("right-hand side dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, m.cols());
  return x;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
  Subspace s(ambient_dim);
  if (vectors.empty())
    return s;
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw DimensionError("spanning vector has wrong dimension");
  Matrix m = Matrix::from_rows(vectors);
  auto pivots = rref(m);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    s.basis_.emplace_back(m.row(r).begin(), m.row(r).end());
  return s;
}

Subspace Subspace::full(std::size_t n)
{
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i)
    vs.push_back(basis_vector(n, i));
  return span(n, vs);
}

Subspace Subspace::coordinate(std::size_t n, const std::vector<std::size_t>& indices)
{
  std::vector<Vector> vs;
  for (auto i : indices)
    vs.push_back(basis_vector(n, i));
  return span(n, vs);
}

bool Subspace::contains(std::span<const Scalar> v) const
{
  if (v.size() != ambient_)
    throw DimensionError("vector does not live in the ambient space");
  // Reduce against the RREF pivots; v is inside iff the remainder vanishes.
  Vector rem(v.begin(), v.end());
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p].is_zero())
      ++p;
    if (rem[p].is_zero())
      continue;
    Scalar f = -rem[p];
    axpy(rem, f, row);
  }
  return is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const
{
  if (other.ambient_ != ambient_)
    throw DimensionError("subspaces live in different spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const
{
  if (other.ambient_ != ambient_)
    throw DimensionError("subspaces live in different spaces");
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, vs);
}

Subspace annihilator(const Subspace& w)
{
  const std::size_t n = w.ambient_dim();
  if (w.dim() == 0)
    return Subspace::full(n);
  return Subspace::span(n, nullspace(Matrix::from_rows(w.basis())));
}

} // namespace brb
