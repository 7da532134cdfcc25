#ifndef BRB_TENSOR_HPP
#define BRB_TENSOR_HPP

#include "brb/lie_algebra.hpp"

#include <utility>

namespace brb
{

/// Element sum r^{mp} e_m (x) e_p of L (x) L.
class Tensor2
{
public:
  Tensor2() = default;
  explicit Tensor2(std::size_t n) : n_(n), c_(n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t m, std::size_t p) { return c_[m * n_ + p]; }
  const Scalar& operator()(std::size_t m, std::size_t p) const { return c_[m * n_ + p]; }

  bool is_zero() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator-(Tensor2 a) { return a *= Scalar(-1); }
  friend Tensor2 operator*(const Scalar& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) = default;

private:
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
};

/// Element of L (x) L (x) L.
class Tensor3
{
public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), c_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return c_[(a * n_ + b) * n_ + c]; }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const
  {
    return c_[(a * n_ + b) * n_ + c];
  }

  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Scalar& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

private:
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
};

/// (sigma T)^{mp} = (-1)^{|m||p|} T^{pm}.
Tensor2 graded_flip(const Tensor2& t, const std::vector<Parity>& parity);

/// coeff (e_i (x) e_j - e_j (x) e_i), no 1/2. Throws std::invalid_argument if i == j.
Tensor2 wedge(std::size_t i, std::size_t j, const Scalar& coeff, std::size_t n);
/// coeff e_i (x) e_j.
Tensor2 simple_tensor(std::size_t i, std::size_t j, const Scalar& coeff, std::size_t n);

/// Sum over all permutations of (a, b, c) of sign(pi) e_pi(a) (x) e_pi(b) (x) e_pi(c).
Tensor3 alternating3(std::size_t a, std::size_t b, std::size_t c, std::size_t n);

struct TensorParts
{
  Tensor2 antisym;
  Tensor2 sym;
};

/// antisym = (T - sigma T)/2, sym = (T + sigma T)/2.
TensorParts split_parts(const Tensor2& t, const std::vector<Parity>& parity);

/// True when every nonzero component pairs generators of equal parity.
bool is_even_tensor(const Tensor2& t, const std::vector<Parity>& parity);

/// [x (x) 1 + 1 (x) x, T]: on a (x) b gives [x,a] (x) b + (-1)^{|x||a|} a (x) [x,b].
/// Linear in x; x need not be parity-homogeneous.
Tensor2 adjoint_act2(const LieAlgebra& L, std::span<const Scalar> x, const Tensor2& t);
/// Three-slot version; the third term carries (-1)^{|x|(|a|+|b|)}.
Tensor3 adjoint_act3(const LieAlgebra& L, std::span<const Scalar> x, const Tensor3& t);

/// Action of the single basis element e_i.
Tensor2 adjoint_act2_basis(const LieAlgebra& L, std::size_t i, const Tensor2& t);
Tensor3 adjoint_act3_basis(const LieAlgebra& L, std::size_t i, const Tensor3& t);

} // namespace brb

#endif
