#ifndef BRB_LIE_ALGEBRA_HPP
#define BRB_LIE_ALGEBRA_HPP

#include "brb/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace brb
{

/// Raised when data violates a mathematical requirement (Jacobi, ac = 0,
/// invariance of the Schouten bracket, invertibility, ...).
class AlgebraError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline bool is_odd(Parity p) { return p == Parity::odd; }
inline Parity operator+(Parity a, Parity b) { return is_odd(a) != is_odd(b) ? Parity::odd : Parity::even; }

/// Finite-dimensional Lie (super)algebra over Q(i) given by structure
/// constants [e_i, e_j] = sum_k c_ij^k e_k.
///
/// Constants are held densely with the graded-antisymmetric completion
/// c_ji^k = -(-1)^{|i||j|} c_ij^k already applied, so every lookup is O(1).
/// Indices are 0-based here; text formats and reports use 1-based labels.
class LieAlgebra
{
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::size_t dim);
  LieAlgebra(std::string name, std::vector<Parity> parity);

  /// [e_i, e_j] += s e_k together with its graded-antisymmetric partner.
  /// Throws AlgebraError for parity-incompatible constants or a nonzero
  /// [e_i, e_i] with e_i even.
  LieAlgebra& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& s);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return parity_.size(); }
  const std::vector<Parity>& parity() const { return parity_; }
  Parity parity(std::size_t i) const { return parity_[i]; }
  bool is_super() const;

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const
  {
    return c_[(i * dim() + j) * dim() + k];
  }
  /// [e_i, e_j] as a coordinate vector.
  std::span<const Scalar> bracket_basis(std::size_t i, std::size_t j) const
  {
    return {c_.data() + (i * dim() + j) * dim(), dim()};
  }
  bool is_abelian() const;

  /// Same dimension, parities and structure constants; names are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
  {
    return a.parity_ == b.parity_ && a.c_ == b.c_;
  }

private:
  std::string name_;
  std::vector<Parity> parity_;
  std::vector<Scalar> c_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra& L, std::span<const Scalar> x, std::span<const Scalar> y);

struct JacobiViolation
{
  std::size_t i, j, k;
  Vector defect;
};

/// Basis triples (i <= j <= k) where
/// (-1)^{|i||k|}[e_i,[e_j,e_k]] + (-1)^{|j||i|}[e_j,[e_k,e_i]] + (-1)^{|k||j|}[e_k,[e_i,e_j]] != 0.
std::vector<JacobiViolation> jacobi_report(const LieAlgebra& L);

/// [e1,e2] = a e2 + b e3, [e2,e3] = c e1, [e1,e3] = f e2 + a e3 (Jacobi holds iff a c = 0).
/// Throws AlgebraError when a c != 0.
LieAlgebra family3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& f);

/// The same relations without the a c = 0 check; used to exhibit Jacobi failure.
LieAlgebra family3_unchecked(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& f);

/// Span of all [e_i, e_j].
Subspace derived_subspace(const LieAlgebra& L);
/// Span of all [W, e_j].
Subspace bracket_with_algebra(const LieAlgebra& L, const Subspace& W);
/// Span of [w1, w2] for w1, w2 in the given bases.
Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& A, const Subspace& B);
/// {x : [x, e_j] = 0 for all j}.
Subspace center(const LieAlgebra& L);

struct SubspaceClass
{
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_abelian = false;
  bool is_central = false;
};

SubspaceClass subspace_class(const LieAlgebra& L, const Subspace& W);

/// Matrix of ad x in the basis: column j is [x, e_j].
Matrix adjoint_matrix(const LieAlgebra& L, std::span<const Scalar> x);

/// K_ij = trace(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& L);

/// Dimensions of L^(1) = [L,L], L^(2) = [L^(1),L^(1)], ... until stable.
std::vector<std::size_t> derived_series_dims(const LieAlgebra& L);
/// Dimensions of L^2 = [L,L], L^3 = [L,L^2], ... until stable.
std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& L);

} // namespace brb

#endif
