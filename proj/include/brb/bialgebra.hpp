#ifndef BRB_BIALGEBRA_HPP
#define BRB_BIALGEBRA_HPP

#include "brb/tensor.hpp"

#include <string_view>

namespace brb
{

/// delta(x) = [x (x) 1 + 1 (x) x, r].
Tensor2 cobracket(const LieAlgebra& L, const Tensor2& r, std::span<const Scalar> x);

/// 1-cocycle identity on every basis pair:
/// delta([e_i,e_j]) = ad_{e_i} delta(e_j) - (-1)^{|i||j|} ad_{e_j} delta(e_i).
bool verify_cocycle(const LieAlgebra& L, const Tensor2& r);

/// [r12, r13] + [r12, r23] + [r13, r23] with graded commutators.
/// r must be even (components only between generators of equal parity);
/// throws AlgebraError otherwise.
Tensor3 schouten(const LieAlgebra& L, const Tensor2& r);

struct InvarianceDefect
{
  std::size_t index;
  Tensor3 defect;
};

/// ad_{e_i}([r,r]_s) for every basis element with a nonzero result. Empty iff
/// the dual bracket satisfies the Jacobi identity.
std::vector<InvarianceDefect> invariance_defect(const LieAlgebra& L, const Tensor2& r);

enum class Verdict { triangular, quasitriangular, coboundary, inadmissible };

std::string_view to_string(Verdict v);

struct RClassification
{
  bool is_unitary = false;
  bool schouten_zero = false;
  bool invariant = false;
  Verdict verdict = Verdict::inadmissible;
};

bool is_graded_unitary(const LieAlgebra& L, const Tensor2& r);
RClassification classify_r(const LieAlgebra& L, const Tensor2& r);

/// L* on generators e^i with parity(e^i) = parity(e_i) and
/// <[e^j, e^k]_*, e_i> = <e^j (x) e^k, delta(e_i)> (ungraded pairing).
/// Throws AlgebraError when r is not invariant, when some delta(e_i) is not
/// graded-antisymmetric, or when r is not even.
LieAlgebra dual_algebra(const LieAlgebra& L, const Tensor2& r);

/// Closed-form dual for family3(0, b, c, f) with r = r12 e1^e2 + r13 e1^e3 + r23 e2^e3.
LieAlgebra family3_dual_closed(const Scalar& b, const Scalar& c, const Scalar& f, const Scalar& r12,
                               const Scalar& r13, const Scalar& r23);

/// b r12^2 - f r13^2 + c r23^2, the coefficient of e1^e2^e3 in [r,r]_s.
Scalar family3_schouten_closed(const Scalar& b, const Scalar& c, const Scalar& f, const Scalar& r12,
                               const Scalar& r13, const Scalar& r23);

/// Closed-form dual for [e1,e2] = e2, [e1,e3] = e3.
LieAlgebra familyA1_dual_closed(const Scalar& r12, const Scalar& r13, const Scalar& r23);

/// r12 e1^e2 + r13 e1^e3 + r23 e2^e3 in dimension 3.
Tensor2 unitary_r3(const Scalar& r12, const Scalar& r13, const Scalar& r23);

} // namespace brb

#endif
