#include "brb/propositions.hpp"

#include <algorithm>

namespace brb
{

BlockProfile block_profile(const Tensor2& r, const Subspace& I, const Subspace& K)
{
  const std::size_t n = r.dim();
  if (I.ambient_dim() != n || K.ambient_dim() != n)
    throw DimensionError("subspaces do not live in the algebra");
  std::vector<Vector> cols = I.basis();
  cols.insert(cols.end(), K.basis().begin(), K.basis().end());
  if (cols.size() != n)
    throw AlgebraError("I and K are not complementary: dimensions do not add up");
  Matrix B = Matrix::from_columns(cols);
  if (determinant(B).is_zero())
    throw AlgebraError("I and K are not complementary: they intersect");
  const Matrix Binv = inverse(B);

  // Coordinates of r in the adapted basis: Binv r Binv^T.
  const std::size_t di = I.dim();
  BlockProfile prof;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar v;
      for (std::size_t m = 0; m < n; ++m) {
        if (Binv(a, m).is_zero())
          continue;
        for (std::size_t p = 0; p < n; ++p)
          if (!r(m, p).is_zero() && !Binv(b, p).is_zero())
            v.add_product(Binv(a, m) * r(m, p), Binv(b, p));
      }
      if (v.is_zero())
        continue;
      const bool ai = a < di;
      const bool bi = b < di;
      (ai ? (bi ? prof.ii : prof.ik) : (bi ? prof.ki : prof.kk)) = true;
    }
  return prof;
}

bool PropReport::all_hold() const
{
  return std::all_of(bullets.begin(), bullets.end(),
                     [](const BulletResult& b) { return !b.hypothesis_holds || b.conclusion_holds; });
}

PropReport check_propositions(const LieAlgebra& L, const Tensor2& r, const Subspace& I, const Subspace& K)
{
  const BlockProfile prof = block_profile(r, I, K);
  const LieAlgebra dual = dual_algebra(L, r);

  PropReport rep;
  rep.k_prime = annihilator(I);
  rep.i_prime = annihilator(K);
  const Subspace& kp = rep.k_prime;

  const SubspaceClass cls_i = subspace_class(L, I);
  const SubspaceClass cls_kp = subspace_class(dual, kp);
  const Subspace center_star = center(dual);
  const Subspace derived_star = derived_subspace(dual);
  const bool kp_in_center = center_star.contains(kp);
  const bool derived_in_kp = kp.contains(derived_star);

  const std::string dims = "dim K'=" + std::to_string(kp.dim()) + " dim [L*,L*]=" +
                           std::to_string(derived_star.dim()) + " dim Z(L*)=" + std::to_string(center_star.dim());

  auto& b = rep.bullets;

  b[0].hypothesis_holds = cls_i.is_subalgebra && !prof.kk;
  b[0].conclusion_holds = cls_kp.is_subalgebra;
  b[0].equality = b[0].conclusion_holds;

  b[1].hypothesis_holds = cls_i.is_ideal;
  b[1].conclusion_holds = cls_kp.is_subalgebra;
  b[1].equality = b[1].conclusion_holds;

  b[2].hypothesis_holds = cls_i.is_ideal && prof.inside_ii();
  b[2].conclusion_holds = kp_in_center;
  b[2].equality = center_star == kp;

  b[3].hypothesis_holds = cls_i.is_central;
  b[3].conclusion_holds = derived_in_kp;
  b[3].equality = derived_star == kp;

  b[4].hypothesis_holds = cls_i.is_ideal && cls_i.is_abelian && prof.inside_ii();
  b[4].conclusion_holds = kp_in_center && derived_in_kp;
  b[4].equality = center_star == kp && derived_star == kp;

  b[5].hypothesis_holds = I == derived_subspace(L) && I == center(L) && prof.inside_kk();
  b[5].conclusion_holds = cls_kp.is_abelian && derived_in_kp;
  b[5].equality = derived_star == kp;

  for (auto& bullet : b)
    bullet.details = dims;
  return rep;
}

} // namespace brb
