#include "brb/bialgebra.hpp"

namespace brb
{

Tensor2 cobracket(const LieAlgebra& L, const Tensor2& r, std::span<const Scalar> x)
{
  return adjoint_act2(L, x, r);
}

bool verify_cocycle(const LieAlgebra& L, const Tensor2& r)
{
  const std::size_t n = L.dim();
  std::vector<Tensor2> delta;
  for (std::size_t i = 0; i < n; ++i)
    delta.push_back(adjoint_act2_basis(L, i, r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2 lhs = cobracket(L, r, L.bracket_basis(i, j));
      Tensor2 rhs = adjoint_act2_basis(L, i, delta[j]);
      rhs -= graded_sign(is_odd(L.parity(i)), is_odd(L.parity(j))) * adjoint_act2_basis(L, j, delta[i]);
      if (lhs != rhs)
        return false;
    }
  return true;
}

Tensor3 schouten(const LieAlgebra& L, const Tensor2& r)
{
  const std::size_t n = L.dim();
  if (r.dim() != n)
    throw DimensionError("r-matrix dimension does not match the algebra");
  if (!is_even_tensor(r, L.parity()))
    throw AlgebraError("r-matrix has components pairing generators of different parity");
  Tensor3 s(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t nn = 0; nn < n; ++nn) {
      const Scalar& rmn = r(m, nn);
      if (rmn.is_zero())
        continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& rpq = r(p, q);
          if (rpq.is_zero())
            continue;
          Scalar w = rmn * rpq;
          Scalar ws = graded_sign(is_odd(L.parity(nn)), is_odd(L.parity(p))) * w;
          auto mp = L.bracket_basis(m, p);
          auto np = L.bracket_basis(nn, p);
          auto nq = L.bracket_basis(nn, q);
          for (std::size_t k = 0; k < n; ++k) {
            // [r12, r13]
            s(k, nn, q).add_product(ws, mp[k]);
            // [r12, r23]
            s(m, k, q).add_product(w, np[k]);
            // [r13, r23]
            s(m, p, k).add_product(ws, nq[k]);
          }
        }
    }
  return s;
}

std::vector<InvarianceDefect> invariance_defect(const LieAlgebra& L, const Tensor2& r)
{
  Tensor3 s = schouten(L, r);
  std::vector<InvarianceDefect> out;
  if (s.is_zero())
    return out;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Tensor3 d = adjoint_act3_basis(L, i, s);
    if (!d.is_zero())
      out.push_back({i, std::move(d)});
  }
  return out;
}

std::string_view to_string(Verdict v)
{
  switch (v) {
  case Verdict::triangular:
    return "triangular";
  case Verdict::quasitriangular:
    return "quasitriangular";
  case Verdict::coboundary:
    return "coboundary";
  case Verdict::inadmissible:
    return "inadmissible";
  }
  return "?";
}

bool is_graded_unitary(const LieAlgebra& L, const Tensor2& r)
{
  return graded_flip(r, L.parity()) == -r;
}

RClassification classify_r(const LieAlgebra& L, const Tensor2& r)
{
  RClassification out;
  out.is_unitary = is_graded_unitary(L, r);
  Tensor3 s = schouten(L, r);
  out.schouten_zero = s.is_zero();
  out.invariant = out.schouten_zero || invariance_defect(L, r).empty();
  if (!out.invariant)
    out.verdict = Verdict::inadmissible;
  else if (out.schouten_zero && out.is_unitary)
    out.verdict = Verdict::triangular;
  else if (out.schouten_zero)
    out.verdict = Verdict::quasitriangular;
  else
    out.verdict = Verdict::coboundary;
  return out;
}

LieAlgebra dual_algebra(const LieAlgebra& L, const Tensor2& r)
{
  const std::size_t n = L.dim();
  if (!invariance_defect(L, r).empty())
    throw AlgebraError("r-matrix is not admissible: [r,r]_s is not ad-invariant, the dual bracket "
                       "would violate the Jacobi identity");
  LieAlgebra dual(L.name() + "*", L.parity());
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 d = adjoint_act2_basis(L, i, r);
    if (graded_flip(d, L.parity()) != -d)
      throw AlgebraError("cobracket of e" + std::to_string(i + 1) +
                         " is not graded-antisymmetric; r induces no Lie bracket on the dual");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        if (j == k && !is_odd(L.parity(j)))
          continue;
        dual.add(j, k, i, d(j, k));
      }
  }
  if (!jacobi_report(dual).empty())
    throw AlgebraError("dual bracket violates the Jacobi identity");
  return dual;
}

LieAlgebra family3_dual_closed(const Scalar& b, const Scalar& c, const Scalar& f, const Scalar& r12,
                               const Scalar& r13, const Scalar& r23)
{
  const Scalar br = b * r12;
  const Scalar fr = f * r13;
  const Scalar cr = c * r23;
  LieAlgebra d("family3*", 3);
  d.add(0, 1, 0, fr).add(0, 1, 1, -cr);
  d.add(0, 2, 0, br).add(0, 2, 2, -cr);
  d.add(1, 2, 1, br).add(1, 2, 2, -fr);
  return d;
}

Scalar family3_schouten_closed(const Scalar& b, const Scalar& c, const Scalar& f, const Scalar& r12,
                               const Scalar& r13, const Scalar& r23)
{
  return b * r12 * r12 - f * r13 * r13 + c * r23 * r23;
}

LieAlgebra familyA1_dual_closed(const Scalar& r12, const Scalar& r13, const Scalar& r23)
{
  LieAlgebra d("familyA1*", 3);
  d.add(0, 1, 0, r12);
  d.add(0, 2, 0, r13);
  d.add(1, 2, 0, Scalar(2) * r23).add(1, 2, 1, -r13).add(1, 2, 2, r12);
  return d;
}

Tensor2 unitary_r3(const Scalar& r12, const Scalar& r13, const Scalar& r23)
{
  return wedge(0, 1, r12, 3) + wedge(0, 2, r13, 3) + wedge(1, 2, r23, 3);
}

} // namespace brb
