#ifndef BRB_LINALG_HPP
#define BRB_LINALG_HPP

#include "brb/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace brb
{

/// Raised when operands live in spaces of different dimension.
class DimensionError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Coordinates in a fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x);

/// Dense row-major matrix over Q(i).
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
/// Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(Matrix m);
/// Particular solution of m x = b with free variables zero, if consistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

/// Linear subspace held as the nonzero rows of its reduced row echelon form.
class Subspace
{
public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t n);
  /// span{e_i : i in indices}, 0-based.
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// {xi : <xi, w> = 0 for all w in W}, in dual coordinates with <e^i, e_j> = delta.
Subspace annihilator(const Subspace& w);

} // namespace brb

#endif
