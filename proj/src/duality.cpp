#include "brb/duality.hpp"

namespace brb
{

BasisChange::BasisChange(Matrix m) : m_(std::move(m))
{
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw DimensionError("basis change must be a nonempty square matrix");
  if (determinant(m_).is_zero())
    throw AlgebraError("basis change is singular");
}

BasisChange BasisChange::from_images(const std::vector<Vector>& images)
{
  return BasisChange(Matrix::from_columns(images));
}

bool BasisChange::is_parity_preserving(const std::vector<Parity>& parity) const
{
  if (parity.size() != dim())
    throw DimensionError("parity profile does not match the basis change");
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (parity[r] != parity[c] && !m_(r, c).is_zero())
        return false;
  return true;
}

LieAlgebra transform_brackets(const LieAlgebra& L, const BasisChange& S)
{
  const std::size_t n = L.dim();
  if (S.dim() != n)
    throw DimensionError("basis change does not match the algebra dimension");
  if (!S.is_parity_preserving(L.parity()))
    throw AlgebraError("basis change mixes even and odd generators");
  const Matrix inv = inverse(S.matrix());
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(S.matrix().column(i));
  LieAlgebra out(L.name(), L.parity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && !is_odd(L.parity(i)))
        continue;
      Vector v = inv.apply(bracket(L, images[i], images[j]));
      for (std::size_t k = 0; k < n; ++k)
        out.add(i, j, k, v[k]);
    }
  return out;
}

bool verify_isomorphism(const LieAlgebra& L1, const LieAlgebra& L2, const Matrix& S)
{
  const std::size_t n = L1.dim();
  if (L2.dim() != n)
    throw DimensionError("algebras have different dimensions");
  if (L1.parity() != L2.parity())
    throw DimensionError("algebras have different parity profiles");
  if (S.rows() != n || S.cols() != n)
    throw DimensionError("basis change does not match the algebra dimension");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (L1.parity(r) != L1.parity(c) && !S(r, c).is_zero())
        return false;
  if (determinant(S).is_zero())
    return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(S.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (S.apply(L1.bracket_basis(i, j)) != bracket(L2, images[i], images[j]))
        return false;
  return true;
}

Signature invariant_signature(const LieAlgebra& L)
{
  Signature s;
  s.dim = L.dim();
  s.derived_series = derived_series_dims(L);
  s.lower_central_series = lower_central_series_dims(L);
  s.center_dim = center(L).dim();
  s.killing_rank = rank(killing_form(L));
  s.abelian = L.is_abelian();
  for (auto p : L.parity())
    (is_odd(p) ? s.odd_count : s.even_count)++;
  return s;
}

namespace
{

LieAlgebra j3_target()
{
  LieAlgebra t("j3", 3);
  t.add(0, 1, 1, 1).add(0, 2, 2, 1);
  return t;
}

} // namespace

std::optional<BasisChange> recognize_j3(const LieAlgebra& L)
{
  if (L.dim() != 3 || L.is_super())
    return std::nullopt;
  Subspace D = derived_subspace(L);
  if (D.dim() != 2 || !subspace_class(L, D).is_abelian)
    return std::nullopt;

  // Solve sum_i x_i [e_i, d_m] = d_m for both basis vectors d_m of D.
  const auto& d = D.basis();
  Matrix m(6, 3);
  Vector rhs(6);
  for (std::size_t mi = 0; mi < 2; ++mi) {
    for (std::size_t i = 0; i < 3; ++i) {
      Vector col = bracket(L, basis_vector(3, i), d[mi]);
      for (std::size_t k = 0; k < 3; ++k)
        m(3 * mi + k, i) = col[k];
    }
    for (std::size_t k = 0; k < 3; ++k)
      rhs[3 * mi + k] = d[mi][k];
  }
  auto x = solve(m, rhs);
  if (!x)
    return std::nullopt;
  Matrix s = Matrix::from_columns({*x, d[0], d[1]});
  if (determinant(s).is_zero())
    return std::nullopt;
  BasisChange S(std::move(s));
  if (!(transform_brackets(L, S) == j3_target()))
    return std::nullopt;
  return S;
}

std::string_view to_string(PairVerdict v)
{
  switch (v) {
  case PairVerdict::exact:
    return "exact";
  case PairVerdict::equivalent:
    return "equivalent";
  case PairVerdict::failed:
    return "failed";
  }
  return "?";
}

PairReport verify_bialgebra_pair(const LieAlgebra& L, const Tensor2& r, const Tensor2& r_star,
                                 const std::optional<BasisChange>& hint, int search_bound)
{
  if (r.dim() != L.dim() || r_star.dim() != L.dim())
    throw DimensionError("r-matrix dimension does not match the algebra");
  if (classify_r(L, r).verdict == Verdict::inadmissible)
    throw AlgebraError("r is not admissible on " + L.name());

  PairReport rep;
  rep.dual = dual_algebra(L, r);
  try {
    rep.induced = dual_algebra(rep.dual, r_star);
  } catch (const AlgebraError& e) {
    throw AlgebraError(std::string("r* is not admissible on the dual: ") + e.what());
  }
  rep.induced.set_name(L.name() + "'");

  if (rep.induced == L) {
    rep.verdict = PairVerdict::exact;
    rep.witness = BasisChange::identity(L.dim());
    return rep;
  }
  if (hint && verify_isomorphism(L, rep.induced, *hint)) {
    rep.verdict = PairVerdict::equivalent;
    rep.witness = hint;
    return rep;
  }
  if (auto s = search_automorphism(L, rep.induced, search_bound)) {
    rep.verdict = PairVerdict::equivalent;
    rep.witness = std::move(s);
    return rep;
  }
  rep.verdict = PairVerdict::failed;
  return rep;
}

} // namespace brb
