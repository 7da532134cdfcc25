#include "brb/tensor.hpp"

#include <algorithm>
#include <array>

namespace brb
{

namespace
{

template <class V>
void add_into(V& a, const V& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
}

void check_dims(std::size_t a, std::size_t b)
{
  if (a != b)
    throw DimensionError("tensor dimension mismatch");
}

bool odd(const std::vector<Parity>& p, std::size_t i) { return is_odd(p[i]); }

} // namespace

bool Tensor2::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Tensor2& Tensor2::operator+=(const Tensor2& o)
{
  check_dims(n_, o.n_);
  add_into(c_, o.c_);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o)
{
  check_dims(n_, o.n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s)
{
  for (auto& x : c_)
    x *= s;
  return *this;
}

bool Tensor3::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Tensor3& Tensor3::operator+=(const Tensor3& o)
{
  check_dims(n_, o.n_);
  add_into(c_, o.c_);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o)
{
  check_dims(n_, o.n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(const Scalar& s)
{
  for (auto& x : c_)
    x *= s;
  return *this;
}

Tensor2 graded_flip(const Tensor2& t, const std::vector<Parity>& parity)
{
  const std::size_t n = t.dim();
  check_dims(n, parity.size());
  Tensor2 out(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t p = 0; p < n; ++p)
      out(m, p) = graded_sign(odd(parity, m), odd(parity, p)) * t(p, m);
  return out;
}

Tensor2 wedge(std::size_t i, std::size_t j, const Scalar& coeff, std::size_t n)
{
  if (i == j)
    throw std::invalid_argument("wedge of a generator with itself");
  if (i >= n || j >= n)
    throw DimensionError("wedge index out of range");
  Tensor2 t(n);
  t(i, j) = coeff;
  t(j, i) = -coeff;
  return t;
}

Tensor2 simple_tensor(std::size_t i, std::size_t j, const Scalar& coeff, std::size_t n)
{
  if (i >= n || j >= n)
    throw DimensionError("tensor index out of range");
  Tensor2 t(n);
  t(i, j) = coeff;
  return t;
}

Tensor3 alternating3(std::size_t a, std::size_t b, std::size_t c, std::size_t n)
{
  if (a >= n || b >= n || c >= n)
    throw DimensionError("alternating tensor index out of range");
  Tensor3 t(n);
  std::array<std::size_t, 3> idx{a, b, c};
  // Even permutations first, then odd ones.
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const auto& p = perms[k];
    t(idx[p[0]], idx[p[1]], idx[p[2]]) += k < 3 ? Scalar(1) : Scalar(-1);
  }
  return t;
}

TensorParts split_parts(const Tensor2& t, const std::vector<Parity>& parity)
{
  Tensor2 flipped = graded_flip(t, parity);
  const Scalar half(1, 2);
  return {half * (t - flipped), half * (t + flipped)};
}

bool is_even_tensor(const Tensor2& t, const std::vector<Parity>& parity)
{
  check_dims(t.dim(), parity.size());
  for (std::size_t m = 0; m < t.dim(); ++m)
    for (std::size_t p = 0; p < t.dim(); ++p)
      if (parity[m] != parity[p] && !t(m, p).is_zero())
        return false;
  return true;
}

Tensor2 adjoint_act2_basis(const LieAlgebra& L, std::size_t i, const Tensor2& t)
{
  const std::size_t n = L.dim();
  check_dims(n, t.dim());
  const bool xo = is_odd(L.parity(i));
  Tensor2 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& tab = t(a, b);
      if (tab.is_zero())
        continue;
      auto xa = L.bracket_basis(i, a);
      auto xb = L.bracket_basis(i, b);
      Scalar s2 = graded_sign(xo, is_odd(L.parity(a))) * tab;
      for (std::size_t k = 0; k < n; ++k) {
        out(k, b).add_product(tab, xa[k]);
        out(a, k).add_product(s2, xb[k]);
      }
    }
  return out;
}

Tensor3 adjoint_act3_basis(const LieAlgebra& L, std::size_t i, const Tensor3& t)
{
  const std::size_t n = L.dim();
  check_dims(n, t.dim());
  const bool xo = is_odd(L.parity(i));
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& tabc = t(a, b, c);
        if (tabc.is_zero())
          continue;
        const bool ao = is_odd(L.parity(a));
        const bool bo = is_odd(L.parity(b));
        Scalar s2 = graded_sign(xo, ao) * tabc;
        Scalar s3 = graded_sign(xo, ao != bo) * tabc;
        auto xa = L.bracket_basis(i, a);
        auto xb = L.bracket_basis(i, b);
        auto xc = L.bracket_basis(i, c);
        for (std::size_t k = 0; k < n; ++k) {
          out(k, b, c).add_product(tabc, xa[k]);
          out(a, k, c).add_product(s2, xb[k]);
          out(a, b, k).add_product(s3, xc[k]);
        }
      }
  return out;
}

Tensor2 adjoint_act2(const LieAlgebra& L, std::span<const Scalar> x, const Tensor2& t)
{
  if (x.size() != L.dim())
    throw DimensionError("acting vector does not match the algebra dimension");
  Tensor2 out(L.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      out += x[i] * adjoint_act2_basis(L, i, t);
  return out;
}

Tensor3 adjoint_act3(const LieAlgebra& L, std::span<const Scalar> x, const Tensor3& t)
{
  if (x.size() != L.dim())
    throw DimensionError("acting vector does not match the algebra dimension");
  Tensor3 out(L.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      out += x[i] * adjoint_act3_basis(L, i, t);
  return out;
}

} // namespace brb
