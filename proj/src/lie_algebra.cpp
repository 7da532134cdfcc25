#include "brb/lie_algebra.hpp"

#include <algorithm>

namespace brb
{

LieAlgebra::LieAlgebra(std::string name, std::size_t dim)
    : LieAlgebra(std::move(name), std::vector<Parity>(dim, Parity::even))
{
}

LieAlgebra::LieAlgebra(std::string name, std::vector<Parity> parity)
    : name_(std::move(name)), parity_(std::move(parity)), c_(parity_.size() * parity_.size() * parity_.size())
{
  if (parity_.empty())
    throw DimensionError("algebra dimension must be positive");
}

LieAlgebra& LieAlgebra::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& s)
{
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n)
    throw DimensionError("structure constant index out of range");
  if (s.is_zero())
    return *this;
  if (parity_[k] != parity_[i] + parity_[j])
    throw AlgebraError("structure constant [e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                       "] -> e" + std::to_string(k + 1) + " does not respect parity");
  if (i == j && !is_odd(parity_[i]))
    throw AlgebraError("[e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) +
                       "] must vanish for an even generator");
  c_[(i * n + j) * n + k] += s;
  if (i != j)
    c_[(j * n + i) * n + k] -= graded_sign(is_odd(parity_[i]), is_odd(parity_[j])) * s;
  return *this;
}

bool LieAlgebra::is_super() const
{
  return std::any_of(parity_.begin(), parity_.end(), is_odd);
}

bool LieAlgebra::is_abelian() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector bracket(const LieAlgebra& L, std::span<const Scalar> x, std::span<const Scalar> y)
{
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("bracket operands do not match the algebra dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      Scalar xy = x[i] * y[j];
      axpy(out, xy, L.bracket_basis(i, j));
    }
  }
  return out;
}

namespace
{

// [e_a, v]
Vector bracket_basis_with(const LieAlgebra& L, std::size_t a, std::span<const Scalar> v)
{
  Vector out(L.dim());
  for (std::size_t l = 0; l < L.dim(); ++l)
    if (!v[l].is_zero())
      axpy(out, v[l], L.bracket_basis(a, l));
  return out;
}

Scalar sgn(const LieAlgebra& L, std::size_t a, std::size_t b)
{
  return graded_sign(is_odd(L.parity(a)), is_odd(L.parity(b)));
}

} // namespace

std::vector<JacobiViolation> jacobi_report(const LieAlgebra& L)
{
  const std::size_t n = L.dim();
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Vector d = sgn(L, i, k) * bracket_basis_with(L, i, L.bracket_basis(j, k));
        d = d + sgn(L, j, i) * bracket_basis_with(L, j, L.bracket_basis(k, i));
        d = d + sgn(L, k, j) * bracket_basis_with(L, k, L.bracket_basis(i, j));
        if (!is_zero(d))
          out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

LieAlgebra family3_unchecked(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& f)
{
  LieAlgebra L("family3", 3);
  L.add(0, 1, 1, a).add(0, 1, 2, b);
  L.add(1, 2, 0, c);
  L.add(0, 2, 1, f).add(0, 2, 2, a);
  return L;
}

LieAlgebra family3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& f)
{
  if (!(a * c).is_zero())
    throw AlgebraError("family3 requires a*c = 0 (Jacobi identity), got a=" + a.to_string() +
                       ", c=" + c.to_string());
  return family3_unchecked(a, b, c, f);
}

Subspace derived_subspace(const LieAlgebra& L)
{
  const std::size_t n = L.dim();
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto b = L.bracket_basis(i, j);
      if (!is_zero(b))
        vs.emplace_back(b.begin(), b.end());
    }
  return Subspace::span(n, vs);
}

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& A, const Subspace& B)
{
  std::vector<Vector> vs;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis())
      vs.push_back(bracket(L, a, b));
  return Subspace::span(L.dim(), vs);
}

Subspace bracket_with_algebra(const LieAlgebra& L, const Subspace& W)
{
  return bracket_subspaces(L, W, Subspace::full(L.dim()));
}

Subspace center(const LieAlgebra& L)
{
  const std::size_t n = L.dim();
  // Row (j, k): sum_i x_i c_ij^k = 0.
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        m(j * n + k, i) = L.constant(i, j, k);
  return Subspace::span(n, nullspace(std::move(m)));
}

SubspaceClass subspace_class(const LieAlgebra& L, const Subspace& W)
{
  if (W.ambient_dim() != L.dim())
    throw DimensionError("subspace does not live in the algebra");
  SubspaceClass cls{true, true, true, true};
  const auto& basis = W.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a; b < basis.size(); ++b) {
      Vector v = bracket(L, basis[a], basis[b]);
      if (!is_zero(v))
        cls.is_abelian = false;
      if (!W.contains(v))
        cls.is_subalgebra = false;
    }
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vector v = bracket(L, basis[a], basis_vector(L.dim(), j));
      if (!is_zero(v))
        cls.is_central = false;
      if (!W.contains(v))
        cls.is_ideal = false;
    }
  }
  return cls;
}

Matrix adjoint_matrix(const LieAlgebra& L, std::span<const Scalar> x)
{
  const std::size_t n = L.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(L, x, basis_vector(n, j));
    for (std::size_t k = 0; k < n; ++k)
      m(k, j) = col[k];
  }
  return m;
}

Matrix killing_form(const LieAlgebra& L)
{
  const std::size_t n = L.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i)
    ad.push_back(adjoint_matrix(L, basis_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar tr;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          tr.add_product(ad[i](a, b), ad[j](b, a));
      k(i, j) = tr;
    }
  return k;
}

namespace
{

template <class Next>
std::vector<std::size_t> series_dims(const Subspace& first, Next next)
{
  std::vector<std::size_t> dims{first.dim()};
  Subspace cur = first;
  for (;;) {
    Subspace nxt = next(cur);
    if (nxt.dim() == cur.dim())
      break;
    dims.push_back(nxt.dim());
    cur = std::move(nxt);
  }
  return dims;
}

} // namespace

std::vector<std::size_t> derived_series_dims(const LieAlgebra& L)
{
  return series_dims(derived_subspace(L), [&](const Subspace& s) { return bracket_subspaces(L, s, s); });
}

std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& L)
{
  return series_dims(derived_subspace(L), [&](const Subspace& s) { return bracket_with_algebra(L, s); });
}

} // namespace brb
